#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tits/group_action.hpp"
#include "tits/map_algebra.hpp"
#include "tits/superalgebra.hpp"

namespace tits {

// gl(W) in the basis order (w1, w2, w0):  H_i diagonal units, G_i symmetric
// and D_i skew, with [D_i, D_{i+1}] = D_{i+2}.
struct MatrixTriple {
  std::array<Mat, 3> h;
  std::array<Mat, 3> g;
  std::array<Mat, 3> d;

  static const MatrixTriple& get();
  // so3 basis (D0, D1, D2) and the basis (G0, G1, G2, H0 - H1, H1 - H2) of the
  // traceless symmetric matrices h.
  std::array<Mat, 3> so3_basis() const { return d; }
  std::array<Mat, 5> h_basis() const;
  // Coordinates in those bases; throw std::domain_error outside the span.
  Vec so3_coordinates(const Mat& a) const;
  Vec h_coordinates(const Mat& x) const;
};

// S4 on W = span{w0, w1, w2} (standard times alternating), as 3x3 matrices in
// the basis order (w1, w2, w0) used by MatrixTriple.
GroupAction s4_on_w();

// Lie algebra spanned by square matrices under the commutator.
SuperAlgebra matrix_lie_algebra(const std::vector<Mat>& basis, std::vector<std::string> labels);

// gl(W) with basis D0, D1, D2, G0, G1, G2, H0, H1, H2.
SuperAlgebra gl_w();

enum class Piece { So3, H, Z };

// The nine so3-invariant bilinear maps between so3, h and z = k I.
struct InvariantMap {
  std::string name;
  Piece left;
  Piece right;
  Piece target;
  std::function<Mat(const Mat&, const Mat&)> apply;
};

std::vector<InvariantMap> invariant_maps();
// so3-equivariance, S4-equivariance and landing in the target piece, on basis pairs.
Report invariant_maps_report();

struct DecompositionReport {
  std::size_t dim = 0;
  std::array<Vec, 3> triple;
  bool spans = false;
  std::size_t residual_dim = 0;  // dimension not covered by the three eigenvalues
  std::vector<long> eigenvalues;  // those of {-2, -6, 0} that occur
  std::size_t m_adjoint = 0;
  std::size_t m_h = 0;
  std::size_t m_trivial = 0;
  std::vector<Vec> adjoint_basis;
  std::vector<Vec> h_basis;
  std::vector<Vec> trivial_basis;

  // Adapted basis, filled when `spans`:  D_i (x) a_k at 3k + i, then
  // B_j (x) s_l at 3 m_adjoint + 5l + j with B = (G0, G1, G2, H0-H1, H1-H2),
  // then the trivial basis.  a_0 is the triple's first vector, so it plays 1.
  std::vector<Vec> h_anchors;  // D0 (x) a_k
  std::vector<Vec> s_anchors;  // (H1 + H2 - 2 H0) (x) s_l
  Mat adapted;                 // columns: the adapted basis in g coordinates

  Report checks;
  nlohmann::json to_json() const;
};

// Isotypic decomposition under the so3 spanned by the triple via the Casimir
// sum of ad(t_i)^2.  Throws std::invalid_argument when the triple does not
// satisfy [t_i, t_{i+1}] = t_{i+2} or the algebra is not over Q.
DecompositionReport decompose(const SuperAlgebra& g, const std::array<Vec, 3>& triple);

// psi(A (x) a + X (x) x + d) = (psi.A) (x) a + (psi.X) (x) x + d.
GroupAction synthesize_s4(const SuperAlgebra& g, const DecompositionReport& report);

// The data of g = (so3 (x) H) + (h (x) S) + d.
struct B1Data {
  std::size_t h_dim = 0;
  std::size_t s_dim = 0;
  std::vector<std::string> h_labels;
  std::vector<std::string> s_labels;
  SuperAlgebra d;
  std::optional<std::size_t> unit;  // index of 1 in H

  // Tables indexed row-major by basis pairs.
  std::vector<Vec> hh_circ, hh_bracket, hh_d;  // H x H -> H, S, d
  std::vector<Vec> hs_bracket, hs_circ;        // H x S -> H, S
  std::vector<Vec> ss_circ, ss_bracket, ss_d;  // S x S -> H, S, d
  std::vector<Mat> d_on_h, d_on_s;             // per basis element of d

  std::size_t dim() const { return 3 * h_dim + 5 * s_dim + d.dim(); }
  // Unit laws, (skew)symmetry and the two representations of d.
  Report invariants() const;
};

B1Data extract_b1(const SuperAlgebra& g, const DecompositionReport& report);
// Basis in the adapted order of DecompositionReport.  Jacobi is not assumed.
SuperAlgebra assemble_b1(const B1Data& data);
// H = J, S = 0, a o b = ab, d_{a,b} = 1/2 [L_a, L_b].  d must contain the
// inner derivations.  J must be an ordinary (even) algebra.
B1Data b1_from_jordan(const SuperAlgebra& j, const MapAlgebra& d);
// d = d_{H,H} + d_{S,S}
bool bc1_probe(const B1Data& data);

struct ClassicalExample {
  std::string name;
  SuperAlgebra g;
  std::array<Vec, 3> triple;
};

enum class ClassicalKind { Orthogonal, Special, Symplectic };

// so(W + U), sl(W + U), sp(W + W* + U) with so3 = span{D_i} acting on W (and
// dually on W*).  Throws std::invalid_argument for odd dim U in the symplectic case.
ClassicalExample classical_example(ClassicalKind kind, std::size_t dim_u);
// gl(h) with so3 acting on the 5-dimensional module h: the Casimir has
// eigenvalues outside {0, -2, -6}.
ClassicalExample gl_of_h_example();

}  // namespace tits
