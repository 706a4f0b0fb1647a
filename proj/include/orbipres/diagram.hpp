#pragma once

#include <string>
#include <vector>

#include "orbipres/monomial.hpp"

namespace orbipres {

// Certifies the commuting square in a finite quotient: the witness
// homomorphism q from Artin B_n mod s^d into the full monomial group kills
// every relator, q agrees with the reflection assignment of the BMR
// generators on the subgroup generators st2 s^-1, t2, ..., tn, and their
// images generate the exponent-sum-zero subgroup of index d.
struct DiagramReport {
  bool relators_die = false;
  std::string failing_relator;
  bool generators_match = false;
  std::string mismatched_generator;
  std::size_t image_order = 0;    // subgroup generated by q(N-generators)
  std::size_t ambient_order = 0;  // q(whole group)
  std::size_t expected_image = 0;       // d^{n-1} n!
  std::size_t expected_ambient = 0;     // d^n n!
  bool image_in_gddn = false;
  bool pass() const {
    return relators_die && generators_match && image_in_gddn &&
           image_order == expected_image && ambient_order == expected_ambient;
  }
  int index() const { return image_order ? (int)(ambient_order / image_order) : 0; }
};

DiagramReport diagram_check(int d, int n, std::size_t cap = 1u << 20);

// the witness images: s -> diag(w^-1, 1, ..., 1), t_i -> s(i-1, i; 0)
std::vector<MonomialElement> witness_quotient(int d, int n);

// BMR generator images: tau2' -> s(1,2;1), tau2 -> s(1,2;0), tau_i -> s(i-1,i;0)
std::vector<MonomialElement> bmr_reflections(int d, int n);

}  // namespace orbipres
