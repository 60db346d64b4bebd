#pragma once

#include <string>

#include "tits/composition.hpp"
#include "tits/jordan.hpp"
#include "tits/superalgebra.hpp"

namespace tits {

struct AlgebraWithInvolution {
  std::string name;
  SuperAlgebra algebra;
  Mat involution;
  Vec unit;

  std::size_t dim() const { return algebra.dim(); }
  Vec basis(const std::string& label) const;
  Vec mul(const Vec& x, const Vec& y) const { return algebra.multiply(x, y); }
  Vec bar(const Vec& x) const { return involution * x; }
};

// The 2x2 block element (alpha, x; y, beta) of A(J) or A(A), in the layout
// [alpha | x | y | beta].
Vec block_vector(const Scalar& alpha, const Vec& x, const Vec& y, const Scalar& beta);

AlgebraWithInvolution a_of_j(const JordanAlgebra& j);
AlgebraWithInvolution a_of_cubic(const CubicAdmissible& a);
// (a x)(b y) = ab x xy, with involution conj x conj.
AlgebraWithInvolution tensor_product(const CompositionAlgebra& c, const CompositionAlgebra& chat);

// sigma^2 = 1, sigma even, sigma(1) = 1 and sigma(xy) = (-1)^{|x||y|} sigma(y) sigma(x).
Report involution_report(const AlgebraWithInvolution& a);

// Allison's identity [T_u, V_{x,y}] = V_{T_u x, y} - (-1)^{|u||x|} V_{x, T_{sigma u} y}
// on all basis quadruples, where V_{x,y} z = (x sigma(y)) z + (z sigma(y)) x - (z sigma(x)) y
// with Koszul signs and T_u = V_{u,1}.
Report check_structurable(const AlgebraWithInvolution& a);

// Basis of the hermitian part {z : sigma(z) = z}.
std::vector<Vec> hermitian_part(const AlgebraWithInvolution& a);

}  // namespace tits
