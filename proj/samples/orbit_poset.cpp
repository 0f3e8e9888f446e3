// Orbit poset of G/P_{(3,3)} x G/P_{(2,2,2)} through both models.

#include <iostream>

#include "orbitposet/orbitposet.hpp"

int main() {
  using namespace orbitposet;
  const auto rows = BlockComposition::parse("3,3");
  const auto cols = BlockComposition::parse("2,2,2");
  const auto sys = CosetSystem::from_blocks(rows, cols);

  const auto bruhat = coset_poset(sys);
  const auto matrices = matrix_poset(rows, cols);
  const auto image = check_backend_equivalence(bruhat, matrices, sys);

  for (int i = 0; i < bruhat.size(); ++i) {
    std::cout << bruhat.label(i).to_string() << "  " << matrices.label(image[i]).to_string() << "\n";
  }
  std::cout << "height " << height(bruhat) << (is_lattice(bruhat) ? ", lattice" : ", not a lattice") << "\n";
  std::cout << "canonical form " << canonical_form(bruhat) << "\n";
}
