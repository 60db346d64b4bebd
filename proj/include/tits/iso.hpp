#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "tits/s4.hpp"
#include "tits/structurable.hpp"
#include "tits/tits.hpp"

namespace tits {

// A linear map between algebras with involution, as a (target x source) matrix.
struct InvolutionHomomorphism {
  std::string name;
  AlgebraWithInvolution source;
  AlgebraWithInvolution target;
  Mat matrix;
  Report report;  // filled by verify()

  Vec apply(const Vec& x) const { return matrix * x; }
  // Multiplicativity on all basis pairs, f sigma = sigma f, and rank = dim
  // source (plus dim target when `isomorphism`).
  Report verify(bool isomorphism = true) const;
};

struct LieIsomorphism {
  std::string name;
  SuperAlgebra source;
  SuperAlgebra target;
  Mat matrix;
  Report report;

  Report verify() const;
};

// Thrown when one of the explicit maps fails its verification.  Carries the
// report with witnesses.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(Report r) : std::runtime_error(r.summary()), report_(std::move(r)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

// The coordinate algebra of T(C,J) under the left action, for C split Cayley.
CoordinateAlgebra left_coordinate_algebra(const TitsAlgebra& t);
// The coordinate algebra of T(C, H3(Chat)) under the right action.
CoordinateAlgebra right_coordinate_algebra(const TitsAlgebra& t);

// T_(1,0) -> A(J):
//   D_{v1,u2} -> (3,0;0,0), D_{u1,v2} -> (0,0;0,3), D_{e1-e2,u0} -> (0,2;0,0),
//   D_{e2-e1,v0} -> (0,0;2,0), u0 x -> (0,x;0,0), v0 x -> (0,0;x,0).
// Verified on construction; throws VerificationError on failure.
InvolutionHomomorphism phi_theorem41(const TitsAlgebra& t, const CoordinateAlgebra& ca,
                                     const AlgebraWithInvolution& aj);
InvolutionHomomorphism phi_theorem41(const JordanAlgebra& j);

// d_i(x) = d_{e_{i+1} - e_{i+2}, iota_i(x)} on H3(Chat).
Mat d_iota(const JordanAlgebra& j, std::size_t i, const Vec& x);

// T_(1,0) -> C (x) Chat:  a iota_0(x) -> -a x,  d_0(x) -> -1/2 1 x.
InvolutionHomomorphism phi_theorem61(const TitsAlgebra& t, const CoordinateAlgebra& ca,
                                     const AlgebraWithInvolution& tp);
InvolutionHomomorphism phi_theorem61(const CompositionAlgebra& c, const CompositionAlgebra& chat);

// The quaternion subalgebra span{1, u_i + v_i} of split Cayley.
CompositionAlgebra s4_invariant_quaternion();

struct TqjMaps {
  // J -> A(J), alpha 1 + x -> (3/4 alpha, -1/4 alpha + 1/2 x; -1/4 alpha + 1/2 x, 3/4 alpha),
  // with J carrying the identity involution.  Its image is checked to be
  // Phi(T(Q,J)_(1,0)).
  InvolutionHomomorphism jordan_to_s;
  // T(Q,J) -> (Q^0 (x) J) + d_{J,J}:  D_{a,b} -> [a,b] (x) 1, a x -> a x, d -> d.
  LieIsomorphism lie;
};

TqjMaps tqj_maps(const JordanAlgebra& j);

// A(K) -> A(J(V,theta)):
//   (a1, g1 e + m1 x + n1 y; g2 e + m2 x + n2 y, a2)
//     -> (a1, g1 1 - m1 u + 2 n1 v; g2 1 + m2 u - 2 n2 v, a2).
InvolutionHomomorphism ak_to_ajv();

}  // namespace tits
