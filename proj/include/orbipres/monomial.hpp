#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbipres/errors.hpp"
#include "orbipres/words.hpp"

namespace orbipres {

// Monomial matrix [(w^e_1, ..., w^e_n) | sigma] over the d-th roots of
// unity: entry w^{e_i} in position (i, sigma(i)). Words multiply left to
// right as matrices acting on column tuples:
//   (x|s)(y|t) = (z|st), z_i = x_i + y_{s(i)}, (st)(i) = t(s(i)).
struct MonomialElement {
  int n = 0;
  int d = 0;
  std::vector<uint8_t> sigma;  // 0-based images
  std::vector<uint8_t> exps;   // residues mod d

  static MonomialElement identity(int n, int d);
  // the type-I reflection s(a,b;c), 1-based a,b; s(a,b;c) = s(b,a;-c)
  static MonomialElement reflection(int a, int b, int c, int n, int d);
  // diagonal [(w^{e_1},...,w^{e_n}) | id]
  static MonomialElement diagonal(const std::vector<int>& e, int d);

  bool is_identity() const;
  bool in_gddn() const;  // exponent sum 0 mod d
  MonomialElement inverse() const;

  std::string key() const;  // dense encoding for hashing
  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

MonomialElement multiply(const MonomialElement& g, const MonomialElement& h);

// product of generator images along a word
MonomialElement evaluate(const Word& w, const std::vector<MonomialElement>& assignment);

struct SubgroupClosure {
  std::size_t order = 0;
  std::vector<MonomialElement> elements;  // present when keep_elements
};

// breadth-first closure under right multiplication by the generators
SubgroupClosure generate_subgroup(const std::vector<MonomialElement>& gens, std::size_t cap,
                                  bool keep_elements = false);

}  // namespace orbipres
