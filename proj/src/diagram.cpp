#include "orbipres/diagram.hpp"

#include "orbipres/present.hpp"

namespace orbipres {

std::vector<MonomialElement> witness_quotient(int d, int n) {
  std::vector<MonomialElement> out;
  std::vector<int> diag(n, 0);
  diag[0] = -1;
  out.push_back(MonomialElement::diagonal(diag, d));
  for (int i = 2; i <= n; ++i) out.push_back(MonomialElement::reflection(i - 1, i, 0, n, d));
  return out;
}

std::vector<MonomialElement> bmr_reflections(int d, int n) {
  std::vector<MonomialElement> out;
  out.push_back(MonomialElement::reflection(1, 2, 1, n, d));  // tau2'
  for (int i = 2; i <= n; ++i) out.push_back(MonomialElement::reflection(i - 1, i, 0, n, d));
  return out;
}

DiagramReport diagram_check(int d, int n, std::size_t cap) {
  DiagramReport rep;
  rep.expected_image = 1;
  rep.expected_ambient = 1;
  for (int i = 2; i <= n; ++i) {
    rep.expected_image *= i;
    rep.expected_ambient *= i;
  }
  for (int i = 1; i < n; ++i) rep.expected_image *= d;
  for (int i = 0; i < n; ++i) rep.expected_ambient *= d;

  Presentation Pb = reference_presentation(d, n, Reference::artin_b_mod_sd);
  std::vector<MonomialElement> q = witness_quotient(d, n);

  rep.relators_die = true;
  for (const auto& rel : Pb.relators)
    if (!evaluate(rel.word(), q).is_identity()) {
      rep.relators_die = false;
      rep.failing_relator = word_to_string(rel.word(), Pb.generators);
      break;
    }

  // q on the N-generators against the BMR reflection assignment
  std::vector<Word> ngens = n_subgroup_generators(Pb);
  std::vector<MonomialElement> rho = bmr_reflections(d, n);
  rep.generators_match = true;
  std::vector<MonomialElement> image_gens;
  for (size_t i = 0; i < ngens.size(); ++i) {
    MonomialElement img = evaluate(ngens[i], q);
    image_gens.push_back(img);
    if (!(img == rho[i])) {
      rep.generators_match = false;
      rep.mismatched_generator = word_to_string(ngens[i], Pb.generators);
    }
  }

  auto image = generate_subgroup(image_gens, cap, true);
  rep.image_order = image.order;
  rep.image_in_gddn = true;
  for (const auto& g : image.elements)
    if (!g.in_gddn()) {
      rep.image_in_gddn = false;
      break;
    }
  rep.ambient_order = generate_subgroup(q, cap).order;
  return rep;
}

}  // namespace orbipres
