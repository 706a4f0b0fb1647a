#pragma once

#include <cstddef>
#include <vector>

#include "orbipres/present.hpp"
#include "orbipres/words.hpp"

namespace orbipres {

enum class TCStrategy { hlt_lookahead, felsch };

// Coset table over the generators of P and their inverses. Row 0 is the
// subgroup itself; entries are coset indices. A capped run carries no
// conclusion about the index.
struct CosetTable {
  enum class Status { complete, capped };
  Status status = Status::capped;
  std::size_t index = 0;                     // meaningful when complete
  std::vector<std::vector<int>> table;       // live cosets x 2g; column 2g, 2g+1 = gen g, g^-1
  std::size_t cosets_defined = 0;            // including ones later merged away
  std::size_t deductions = 0;

  int act(int coset, int gen, int exp) const {
    return table[coset][2 * gen + (exp < 0 ? 1 : 0)];
  }
  std::string to_csv(const std::vector<std::string>& gen_names) const;
};

CosetTable todd_coxeter(const Presentation& P, const std::vector<Word>& subgroup_gens,
                        std::size_t cap, TCStrategy strategy = TCStrategy::hlt_lookahead);

// True when every coset is reached from the subgroup coset by powers of
// one generator (the coset decomposition N, Ns, ..., Ns^{d-1}).
bool cosets_are_powers_of(const CosetTable& t, int gen);

}  // namespace orbipres
