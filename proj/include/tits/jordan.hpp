#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tits/composition.hpp"
#include "tits/map_algebra.hpp"
#include "tits/superalgebra.hpp"

namespace tits {

enum class JordanKind { H3, JVTheta, Dt, Diagonal, Custom };

struct JordanAlgebra {
  std::string name;
  SuperAlgebra algebra;
  Vec unit;
  Vec trace;                        // normalized trace t_J as coefficients
  SubspaceBasis trace_zero;         // J^0
  std::vector<std::string> trace_zero_labels;
  JordanKind kind = JordanKind::Custom;
  std::shared_ptr<const CompositionAlgebra> hat;  // coordinate algebra of H3

  std::size_t dim() const { return algebra.dim(); }
  Vec basis(const std::string& label) const;
  Vec mul(const Vec& x, const Vec& y) const { return algebra.multiply(x, y); }
  Scalar t(const Vec& x) const { return dot(trace, x); }
  Vec j0_coordinates(const Vec& x) const { return trace_zero.coordinates(x); }

  // H3 helpers: e_i and iota_i(x) for x in the coordinate algebra.
  Vec e(std::size_t i) const;
  Vec iota(std::size_t i, const Vec& x) const;
};

// Packages an algebra with a given unit and normalized trace.
JordanAlgebra make_jordan(std::string name, SuperAlgebra algebra, Vec unit, Vec trace,
                          JordanKind kind = JordanKind::Custom);

JordanAlgebra h3(const CompositionAlgebra& chat);
JordanAlgebra jordan_super_jvtheta();
// D_t; throws std::domain_error when t = 0 or no unique normalized trace exists.
JordanAlgebra jordan_super_dt(const Scalar& t);
SuperAlgebra dt_superalgebra(const Scalar& t);
// k x ... x k (n copies) with t_J = average of the coordinates.
JordanAlgebra jordan_diagonal(std::size_t n);
// "h3:<comp>", "jvtheta", "d2", "dt:<num>/<den>", "diag:<n>", "field".
JordanAlgebra jordan_by_name(const std::string& name);

struct TraceSolution {
  Vec point;
  std::vector<Vec> directions;
};

// All t with t(1) = 1 and t((b_i b_j) b_k) = t(b_i (b_j b_k)); nullopt when none exist.
std::optional<TraceSolution> find_normalized_traces(const SuperAlgebra& a, const Vec& unit);

// x*y = xy - t_J(xy)1 for x, y in J^0.
Vec star(const JordanAlgebra& j, const Vec& x, const Vec& y);
// d_{x,y} = [L_x, L_y] (supercommutator), extended bilinearly.
LinearMap inner_jordan_derivation(const JordanAlgebra& j, const Vec& x, const Vec& y);
// x cross y = 2xy - 3t(x)y - 3t(y)x + (9t(x)t(y) - 3t(xy))1
Vec cross(const JordanAlgebra& j, const Vec& x, const Vec& y);
// d_{J,J}: span of d_{b_i,b_j}, i <= j, greedy in lexicographic order.
MapAlgebra inner_derivations(const SuperAlgebra& a);
inline MapAlgebra inner_derivations(const JordanAlgebra& j) { return inner_derivations(j.algebra); }
// Matrices of d_{b_i,b_k} over all basis pairs, row-major in (i, k).
std::vector<Mat> inner_derivation_table(const SuperAlgebra& a);

// Supercommutativity, Jordan identity and trace associativity.
Report jordan_report(const JordanAlgebra& j);
Report trace_report(const SuperAlgebra& a, const Vec& unit, const Vec& trace);

struct CubicAdmissible {
  std::string name;
  SuperAlgebra algebra;
  Mat form;  // <x|y>

  Scalar pair(const Vec& x, const Vec& y) const { return dot(x, form * y); }
  Scalar cubic_norm(const Vec& x) const { return pair(x, algebra.multiply(x, x)); }
  // Associativity of the form on basis triples and (x^2)^2 = N(x) x on basis
  // vectors plus `samples` seeded random vectors.
  Report check(unsigned samples = 100, unsigned seed = 0) const;
};

CubicAdmissible kaplansky();

}  // namespace tits
