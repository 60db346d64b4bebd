#pragma once

#include <string>
#include <vector>

#include "tits/composition.hpp"
#include "tits/jordan.hpp"
#include "tits/map_algebra.hpp"
#include "tits/superalgebra.hpp"

namespace tits {

// T(C,J) = der C + (C^0 (x) J^0) + d_{J,J}.  Basis order: der C basis, then
// a_p (x) x_q in lexicographic (p, q) over the C^0 and J^0 bases, then d_{J,J}.
struct TitsAlgebra {
  std::string name;
  CompositionAlgebra c;
  JordanAlgebra j;
  MapAlgebra der;
  MapAlgebra inner;
  SuperAlgebra algebra;

  std::size_t dim() const { return algebra.dim(); }
  std::size_t der_dim() const { return der.dim(); }
  std::size_t c0_dim() const { return c.trace_zero.size(); }
  std::size_t j0_dim() const { return j.trace_zero.size(); }
  std::size_t inner_dim() const { return inner.dim(); }
  std::size_t tensor_offset() const { return der_dim(); }
  std::size_t inner_offset() const { return der_dim() + c0_dim() * j0_dim(); }
  std::size_t tensor_index(std::size_t p, std::size_t q) const { return tensor_offset() + p * j0_dim() + q; }

  // Embeddings of the three summands.  `a` and `x` are vectors of C and J.
  Vec from_der(const Mat& d) const;
  Vec from_tensor(const Vec& a, const Vec& x) const;
  Vec from_inner(const Mat& d) const;
  // Components of an element: der C and d_{J,J} parts as maps, and the
  // tensor part as a (c0_dim x j0_dim) coefficient matrix.
  Mat der_part(const Vec& v) const;
  Mat inner_part(const Vec& v) const;
  Mat tensor_part(const Vec& v) const;

  Vec bracket(const Vec& x, const Vec& y) const { return algebra.multiply(x, y); }
};

TitsAlgebra tits_algebra(const CompositionAlgebra& c, const JordanAlgebra& j);

// Conditions (i)-(iii) for T(C,J) to be a Lie (super)algebra, on all basis
// triples of C^0 and J^0, with Koszul signs in the cyclic sums.
Report verify_lie_conditions(const CompositionAlgebra& c, const JordanAlgebra& j);

// (Q^0 (x) J) + D with [a x, b y] = [a,b] (x) xy + 2 t(ab) d_{x,y} and
// [d, a x] = a (x) d(x).  D must be a Lie algebra of maps on J containing
// every inner derivation; J needs no unit or trace.
SuperAlgebra tits62_variant(const CompositionAlgebra& q, const SuperAlgebra& j, const MapAlgebra& d);

}  // namespace tits
