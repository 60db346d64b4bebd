#pragma once

#include <array>
#include <string>
#include <vector>

#include "tits/group_action.hpp"
#include "tits/jordan.hpp"
#include "tits/structurable.hpp"
#include "tits/superalgebra.hpp"
#include "tits/tits.hpp"

namespace tits {

// tau1, tau2 act diagonally on iota_i(C), phi cycles the indices and tau swaps
// 1 and 2 composed with the canonical involution.  Throws std::invalid_argument
// unless j was built by h3.
GroupAction s4_on_h3(const JordanAlgebra& j);

// psi(D + a x + d) = psi D psi^{-1} + psi(a) x + d, through the action on the
// split Cayley left factor.
GroupAction s4_on_tits_left(const TitsAlgebra& t);
// psi(D + a x + d) = D + a psi(x) + psi d psi^{-1}, through the action on the
// H3 right factor.
GroupAction s4_on_tits_right(const TitsAlgebra& t);

// Simultaneous eigenspaces of tau1, tau2.  Degree (a, b) is the component where
// tau1 acts as (-1)^b and tau2 as (-1)^a, so (1,0) = {tau1 X = X, tau2 X = -X}.
struct KleinGrading {
  static constexpr std::array<KleinDegree, 4> kDegrees = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  std::array<SubspaceBasis, 4> components;

  static std::size_t slot(KleinDegree d) { return static_cast<std::size_t>(d.first + 2 * d.second); }
  const SubspaceBasis& component(KleinDegree d) const { return components[slot(d)]; }
  std::size_t dim(KleinDegree d) const { return component(d).size(); }
};

// Each eigenspace is computed inside every parity block when `parity` is given,
// so the components have homogeneous bases.  Throws std::domain_error when the
// eigenspaces do not fill the space.
KleinGrading klein_grading(const GroupAction& action, const std::vector<Parity>& parity = {});
// Direct sum, [g_a, g_b] in g_{a+b}, and generators permuting the components.
Report klein_grading_report(const SuperAlgebra& g, const GroupAction& action, const KleinGrading& grading);

// The (1,0) component with X.Y = -tau([phi X, phi^2 Y]) and Xbar = -tau(X).
// Basis: the (1,0) basis of the ambient algebra, labelled by its expansion.
struct CoordinateAlgebra {
  AlgebraWithInvolution algebra;
  Mat embedding;  // ambient x component, columns are the basis
  SubspaceBasis component;

  Vec embed(const Vec& x) const { return embedding * x; }
  Vec coordinates(const Vec& ambient) const { return component.coordinates(ambient); }
  // X.Y and Xbar for X, Y given as ambient vectors.
  Vec product(const Vec& x, const Vec& y) const { return embed(algebra.mul(coordinates(x), coordinates(y))); }
  Vec bar(const Vec& x) const { return embed(algebra.bar(coordinates(x))); }
};

CoordinateAlgebra coordinate_algebra(const SuperAlgebra& g, const GroupAction& action);

// iota_0 = inclusion, iota_1 = phi iota_0, iota_2 = phi^2 iota_0.
std::array<Mat, 3> iota_maps(const CoordinateAlgebra& ca, const GroupAction& action);

// (iota_0(1), iota_1(1), iota_2(1)) for the left action on T(C,J): an so3
// triple with [t_i, t_{i+1}] = t_{i+2}.
std::array<Vec, 3> left_so3_triple(const TitsAlgebra& t);

}  // namespace tits
