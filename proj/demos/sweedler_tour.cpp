// Builds Sweedler's algebra twice (directly and as a member of the family),
// checks both, and prints the antipode.

#include "hopfrb/hopfrb.hpp"

#include <iostream>

using namespace hopfrb;

int main() {
  const Field q = Field::rationals();
  HopfData h4 = sweedler_h4(q);
  std::cout << "H4 axioms: " << (check_hopf(h4).passed() ? "pass" : "fail") << "\n";
  std::cout << "order of S: " << antipode_order(h4) << "\n";
  for (std::size_t i = 0; i < 4; ++i)
    std::cout << "  S(" << h4.labels()[i] << ") = " << vector_str(antipode(h4, basis(h4, i)), h4.labels()) << "\n";

  FamilyParams p{2, Scalar::from_int(q, -1), 2, {}};
  HopfData fam = family(p);
  // the family lists g^a x^b with a major: 1, x, g, gx
  std::cout << "family(2, -1, 2, 0) equals H4 after reordering: "
            << (same_structure(permute_basis(fam, {0, 2, 1, 3}), h4) ? "yes" : "no") << "\n";

  std::vector<Scalar> grid{Scalar::one(q), -Scalar::one(q), Scalar::from_int(q, 2)};
  for (const auto& hit : family_aut_search(p, grid))
    std::cout << "automorphism g -> g^" << hit.k << ", x -> (" << hit.c[1].str() << ") x\n";
}
