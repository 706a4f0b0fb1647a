#pragma once

#include <vector>

#include "orbipres/present.hpp"

namespace orbipres {

struct Abelianization {
  int free_rank = 0;
  std::vector<long long> torsion;  // elementary divisors > 1, divisibility chain
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

// Smith normal form of an integer matrix; returns the diagonal entries
// (non-negative, each dividing the next, zeros last).
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> mat);

// integer normal form of the relator exponent matrix
Abelianization abelianization(const Presentation& P);

}  // namespace orbipres
