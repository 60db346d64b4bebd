#include <array>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tits/decompose.hpp"
#include "tits/iso.hpp"
#include "tits/s4.hpp"
#include "tits/tits.hpp"

using namespace tits;

namespace {

using Mult = std::array<std::size_t, 3>;

Mult multiplicities(const DecompositionReport& r) { return {r.m_adjoint, r.m_h, r.m_trivial}; }

std::array<Vec, 3> first_three(std::size_t n) { return {Vec::unit(n, 0), Vec::unit(n, 1), Vec::unit(n, 2)}; }

const InvariantMap& map_named(const std::string& prefix) {
  static const auto maps = invariant_maps();
  for (const auto& m : maps)
    if (m.name.rfind(prefix, 0) == 0) return m;
  throw std::out_of_range(prefix);
}

}  // namespace

TEST(S4OnW, Examples) {
  GroupAction g = s4_on_w();
  const Vec w1{1, 0, 0}, w2{0, 1, 0}, w0{0, 0, 1};
  EXPECT_EQ(g.tau1 * w1, Scalar(-1) * w1);
  EXPECT_EQ(g.tau1 * w0, w0);
  EXPECT_EQ(g.phi * w2, w0);
  EXPECT_EQ(g.phi * w0, w1);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(determinant(g.generator(i)), Scalar(1));
  EXPECT_TRUE(g.relations_report().passed);
}

TEST(MatrixTriple, Brackets) {
  const auto& t = MatrixTriple::get();
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(commutator(t.d[i], t.d[(i + 1) % 3]), t.d[(i + 2) % 3]);
    EXPECT_EQ(t.g[i].transpose(), t.g[i]);
    EXPECT_EQ(t.d[i].transpose(), Scalar(-1) * t.d[i]);
  }
  EXPECT_EQ(t.h[0] + t.h[1] + t.h[2], Mat::identity(3));
  EXPECT_EQ(t.so3_coordinates(t.d[1]), (Vec{0, 1, 0}));
  EXPECT_EQ(t.h_coordinates(t.h[0] - t.h[1]), (Vec{0, 0, 0, 1, 0}));
  EXPECT_THROW(t.h_coordinates(Mat::identity(3)), std::domain_error);
  EXPECT_TRUE(check_super_jacobi(gl_w()).passed);
}

TEST(InvariantMaps, Examples) {
  const auto& t = MatrixTriple::get();
  EXPECT_EQ(invariant_maps().size(), 9u);
  EXPECT_EQ(map_named("so3 x so3 -> z").apply(t.d[0], t.d[0]), Scalar(-2) * Mat::identity(3));
  for (const auto& a : t.d)
    for (const auto& x : t.h_basis()) EXPECT_TRUE(map_named("so3 x h -> z").apply(a, x).is_zero());
  EXPECT_EQ(map_named("h x h -> so3").apply(t.g[1], t.g[2]), t.d[0]);
  Report r = invariant_maps_report();
  EXPECT_TRUE(r.passed) << r.summary();
}

TEST(Decompose, GlW) {
  DecompositionReport r = decompose(gl_w(), first_three(9));
  EXPECT_TRUE(r.spans);
  EXPECT_TRUE(r.checks.passed) << r.checks.summary();
  EXPECT_EQ(multiplicities(r), (Mult{1, 1, 1}));
  EXPECT_EQ(r.eigenvalues, (std::vector<long>{-2, -6, 0}));
}

TEST(Decompose, ClassicalMultiplicities) {
  struct Case {
    ClassicalKind kind;
    std::size_t u;
    Mult want;
  };
  for (const Case& c : {Case{ClassicalKind::Symplectic, 0, {1, 3, 3}}, Case{ClassicalKind::Orthogonal, 0, {1, 0, 0}},
                        Case{ClassicalKind::Orthogonal, 2, {3, 0, 1}}, Case{ClassicalKind::Special, 1, {3, 1, 1}},
                        Case{ClassicalKind::Symplectic, 2, {5, 3, 6}}}) {
    ClassicalExample e = classical_example(c.kind, c.u);
    DecompositionReport r = decompose(e.g, e.triple);
    EXPECT_TRUE(r.spans) << e.name;
    EXPECT_EQ(multiplicities(r), c.want) << e.name;
    EXPECT_EQ(3 * r.m_adjoint + 5 * r.m_h + r.m_trivial, e.g.dim()) << e.name;
  }
  EXPECT_THROW(classical_example(ClassicalKind::Symplectic, 1), std::invalid_argument);
}

TEST(Decompose, TitsOfCayleyAndH3Ground) {
  TitsAlgebra t = tits_algebra(split_cayley(), h3(ground()));
  DecompositionReport r = decompose(t.algebra, left_so3_triple(t));
  EXPECT_TRUE(r.spans);
  EXPECT_EQ(multiplicities(r), (Mult{13, 1, 8}));
  EXPECT_EQ(3 * r.m_adjoint + 5 * r.m_h + r.m_trivial, 52u);
}

TEST(Synthesize, GlWIsConjugationByTheMatrices) {
  SuperAlgebra g = gl_w();
  DecompositionReport r = decompose(g, first_three(9));
  GroupAction act = synthesize_s4(g, r);
  GroupAction w = s4_on_w();
  const auto& t = MatrixTriple::get();
  std::vector<Mat> basis = {t.d[0], t.d[1], t.d[2], t.g[0], t.g[1], t.g[2], t.h[0], t.h[1], t.h[2]};
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.flatten());
  SubspaceBasis span(flat, 9);
  for (int i = 0; i < 4; ++i) {
    const Mat& m = w.generator(i);
    Mat minv = *inverse(m);
    for (std::size_t k = 0; k < 9; ++k) {
      Vec want = span.coordinates((m * basis[k] * minv).flatten());
      EXPECT_EQ(act.generator(i) * Vec::unit(9, k), want) << GroupAction::generator_names()[i] << " " << k;
    }
  }
}

TEST(Synthesize, ActionsAreAutomorphismsWithUnitalCoordinates) {
  ClassicalExample e = classical_example(ClassicalKind::Orthogonal, 1);
  DecompositionReport r = decompose(e.g, e.triple);
  GroupAction act = synthesize_s4(e.g, r);
  EXPECT_TRUE(act.verify(e.g).passed);
  CoordinateAlgebra ca = coordinate_algebra(e.g, act);
  EXPECT_TRUE(find_unit(ca.algebra.algebra).has_value());
}

TEST(Synthesize, TitsMatchesTheLeftAction) {
  TitsAlgebra t = tits_algebra(split_cayley(), h3(ground()));
  DecompositionReport r = decompose(t.algebra, left_so3_triple(t));
  GroupAction act = synthesize_s4(t.algebra, r);
  GroupAction left = s4_on_tits_left(t);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(act.generator(i), left.generator(i)) << GroupAction::generator_names()[i];
}

TEST(RoundTrip, AssembleReproducesTheBracket) {
  std::vector<std::pair<SuperAlgebra, std::array<Vec, 3>>> cases = {{gl_w(), first_three(9)}};
  for (auto kind : {ClassicalKind::Orthogonal, ClassicalKind::Special, ClassicalKind::Symplectic}) {
    ClassicalExample e = classical_example(kind, 2);
    cases.push_back({e.g, e.triple});
  }
  TitsAlgebra t = tits_algebra(split_cayley(), h3(ground()));
  cases.push_back({t.algebra, left_so3_triple(t)});
  for (const auto& [g, triple] : cases) {
    DecompositionReport r = decompose(g, triple);
    ASSERT_TRUE(r.spans);
    B1Data b = extract_b1(g, r);
    EXPECT_TRUE(b.invariants().passed) << b.invariants().summary();
    EXPECT_EQ(b.dim(), g.dim());
    SuperAlgebra assembled = assemble_b1(b);
    EXPECT_EQ(g.change_basis(r.adapted, assembled.labels()), assembled);
  }
}

TEST(B1FromJordan, DimensionsAndJacobi) {
  for (int c = 0; c < 3; ++c) {
    const char* names[3] = {"ground", "binarion", "quaternion"};
    JordanAlgebra j = h3(composition_by_name(names[c]));
    B1Data b = b1_from_jordan(j.algebra, inner_derivations(j));
    EXPECT_TRUE(b.invariants().passed);
    EXPECT_TRUE(bc1_probe(b));
    SuperAlgebra g = assemble_b1(b);
    EXPECT_EQ(g.dim(), static_cast<std::size_t>(oracle::kMagicSquare[2][c]));
    EXPECT_TRUE(check_super_jacobi(g).passed) << names[c];
  }
}

TEST(Decompose, ForeignEigenvaluesLeaveAResidual) {
  ClassicalExample e = gl_of_h_example();
  DecompositionReport r = decompose(e.g, e.triple);
  EXPECT_FALSE(r.spans);
  EXPECT_GT(r.residual_dim, 0u);
}

TEST(Decompose, RejectsBadInput) {
  SuperAlgebra g = gl_w();
  EXPECT_THROW(decompose(g, {Vec::unit(9, 0), Vec::unit(9, 2), Vec::unit(9, 1)}), std::invalid_argument);
  EXPECT_THROW(decompose(g.reduced_mod(7), first_three(9)), std::invalid_argument);
}
