#pragma once

#include <array>
#include <string>
#include <utility>

#include "tits/superalgebra.hpp"

namespace tits {

// An action of S4 = <tau1, tau2, phi, tau> given by the four generator matrices.
struct GroupAction {
  Mat tau1;
  Mat tau2;
  Mat phi;
  Mat tau;

  std::size_t dim() const { return tau1.rows(); }
  // Product of generators written left to right, e.g. "phi tau1" = phi*tau1.
  Mat word(const std::string& w) const;
  const Mat& generator(int i) const;  // 0..3 in the order tau1, tau2, phi, tau
  static const std::array<const char*, 4>& generator_names();

  // Defining relations and orders of the generators as matrix identities.
  Report relations_report() const;
  // Relations plus the automorphism property of every generator.
  Report verify(const SuperAlgebra& a) const;
};

// The trivial action on an n-dimensional space.
GroupAction trivial_action(std::size_t n);

using KleinDegree = std::pair<int, int>;

// Permutation of the Klein-four degrees induced by a generator (index as in
// GroupAction::generator).
KleinDegree permute_degree(int generator, KleinDegree d);

}  // namespace tits
