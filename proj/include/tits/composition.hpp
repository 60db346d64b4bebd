#pragma once

#include <string>
#include <vector>

#include "tits/group_action.hpp"
#include "tits/map_algebra.hpp"
#include "tits/superalgebra.hpp"

namespace tits {

struct CompositionAlgebra {
  std::string name;
  SuperAlgebra algebra;
  Mat norm;          // polar form n(a,b) = n(a+b) - n(a) - n(b)
  Vec unit;
  Vec trace;         // t(a) = n(a,1), as coefficients
  Mat conjugation;   // a -> t(a)1 - a
  SubspaceBasis trace_zero;            // C^0
  std::vector<std::string> trace_zero_labels;

  std::size_t dim() const { return algebra.dim(); }
  Vec basis(const std::string& label) const;
  Vec mul(const Vec& a, const Vec& b) const { return algebra.multiply(a, b); }
  Vec commutator(const Vec& a, const Vec& b) const;
  // (a,b,c) = (ab)c - a(bc)
  Vec associator(const Vec& a, const Vec& b, const Vec& c) const;
  Scalar bilinear(const Vec& a, const Vec& b) const;
  Scalar quadratic(const Vec& a) const;  // n(a)
  Scalar t(const Vec& a) const { return dot(trace, a); }
  Vec conj(const Vec& a) const { return conjugation * a; }
  // Coordinates of a trace-zero element in the C^0 basis.
  Vec c0_coordinates(const Vec& a) const { return trace_zero.coordinates(a); }
};

CompositionAlgebra split_cayley();
CompositionAlgebra split_quaternion();  // span{e1,e2,u1,v1}
CompositionAlgebra binarion();          // span{e1,e2}
CompositionAlgebra ground();            // k1
// Unital subalgebra of c spanned by the given vectors, with restricted norm.
CompositionAlgebra composition_subalgebra(const CompositionAlgebra& c, const std::vector<Vec>& basis,
                                          std::vector<std::string> labels, std::string name);
// "cayley", "quaternion", "binarion", "ground".
CompositionAlgebra composition_by_name(const std::string& name);

// D_{a,b}(c) = [[a,b],c] + 3(a,c,b)
Mat inner_derivation(const CompositionAlgebra& c, const Vec& a, const Vec& b);
// Span of all D_{b_i,b_j}, i < j, basis chosen greedily in lexicographic order.
MapAlgebra derivation_algebra(const CompositionAlgebra& c);

// n(ab) = n(a)n(b) and a^2 - t(a)a + n(a)1 = 0 on `samples` seeded random
// pairs, alternativity on basis triples and conjugation being an involutive
// antiautomorphism on the basis.
Report composition_report(const CompositionAlgebra& c, unsigned samples = 100, unsigned seed = 0);
// D_{a,b} = -D_{b,a} on basis pairs, D_{ab,c} + D_{bc,a} + D_{ca,b} = 0 on
// basis triples, and every D_{a,b} a derivation.
Report derivation_identities_report(const CompositionAlgebra& c);

// tau1, tau2, phi, tau on the split Cayley basis.
GroupAction s4_on_cayley();
Grading klein_grading_cayley();
// psi D psi^{-1} on a Lie algebra of maps stable under the action.
GroupAction conjugation_action(const MapAlgebra& maps, const GroupAction& action);
// deg e = 0, deg u = 1, deg v = 2
Grading z3_grading_cayley();

}  // namespace tits
