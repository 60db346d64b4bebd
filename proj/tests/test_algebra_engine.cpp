#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tits/composition.hpp"
#include "tits/decompose.hpp"
#include "tits/superalgebra.hpp"
#include "tits/tits.hpp"

using namespace tits;

namespace {

// 3-dimensional anticommutative algebra with [a0,a1] = c, [a1,a2] = a0, [a2,a0] = a1.
SuperAlgebra three_dim(const Vec& c) {
  SuperAlgebra::Builder b({"a0", "a1", "a2"});
  b.add_product(0, 1, c).add_product(1, 0, Scalar(-1) * c);
  b.add(1, 2, 0, 1).add(2, 1, 0, -1);
  b.add(2, 0, 1, 1).add(0, 2, 1, -1);
  return std::move(b).build();
}

}  // namespace

TEST(Multiply, CayleyExamples) {
  CompositionAlgebra c = split_cayley();
  EXPECT_EQ(c.mul(c.basis("u0"), c.basis("u1")), c.basis("v2"));
  EXPECT_EQ(c.mul(c.basis("u0"), c.basis("v0")), Scalar(-1) * c.basis("e1"));
  std::mt19937 rng(0);
  for (int s = 0; s < 20; ++s) {
    Vec x = random_vector(8, rng);
    EXPECT_EQ(c.mul(c.unit, x), x);
    EXPECT_EQ(c.mul(x, c.unit), x);
  }
  EXPECT_THROW(c.mul(Vec(7), c.unit), std::invalid_argument);
}

TEST(Multiply, MatchesOracleOnRandomVectors) {
  CompositionAlgebra c = split_cayley();
  std::mt19937 rng(0);
  for (int s = 0; s < 100; ++s) {
    oracle::QVec a = oracle::random_qvec(8, rng), b = oracle::random_qvec(8, rng);
    EXPECT_EQ(oracle::to_q(c.mul(oracle::from_q(a), oracle::from_q(b))), oracle::oct_mul(a, b));
  }
}

TEST(Jacobi, E8Passes) {
  TitsAlgebra t = tits_algebra(split_cayley(), h3(split_cayley()));
  EXPECT_EQ(t.dim(), 248u);
  Report r = check_super_jacobi(t.algebra);
  EXPECT_TRUE(r.passed) << r.summary();
}

TEST(Jacobi, AbelianPasses) {
  SuperAlgebra::Builder b({"a", "b", "c"});
  EXPECT_TRUE(check_super_jacobi(std::move(b).build()).passed);
}

TEST(Jacobi, TwoDimensionalAnticommutativeAlwaysPasses) {
  // The Jacobiator is alternating and trilinear, so it vanishes in dimension 2
  // whatever the constants are.
  for (std::size_t k : {0, 1}) {
    SuperAlgebra::Builder b({"a", "b"});
    b.add(0, 1, k, 1).add(1, 0, k, -1);
    EXPECT_TRUE(check_super_jacobi(std::move(b).build()).passed);
  }
}

TEST(Jacobi, NonAnticommutativeFailsThePrecheck) {
  SuperAlgebra::Builder b({"a", "b"});
  b.add(0, 1, 0, 1).add(1, 0, 1, 1);
  Report r = check_super_jacobi(std::move(b).build());
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].indices, (std::vector<std::size_t>{0, 1}));
}

TEST(Jacobi, InjectedWrongConstantFailsWithTriple) {
  EXPECT_TRUE(check_super_jacobi(three_dim(Vec{0, 0, 1})).passed);  // so3
  Report r = check_super_jacobi(three_dim(Vec{1, 0, 0}));
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].indices.size(), 3u);
}

TEST(Jacobi, AgreesWithNaiveOracle) {
  for (const auto& g : {gl_w(), classical_example(ClassicalKind::Special, 1).g, three_dim(Vec{1, 0, 0})}) {
    auto bracket = [&](const oracle::QVec& x, const oracle::QVec& y) {
      return oracle::to_q(g.multiply(oracle::from_q(x), oracle::from_q(y)));
    };
    EXPECT_EQ(check_super_jacobi(g).passed, oracle::naive_jacobi(g.dim(), bracket));
  }
}

TEST(Jacobi, ThreadCountDoesNotChangeTheResult) {
  TitsAlgebra t = tits_algebra(split_cayley(), jordan_super_jvtheta());
  Report one = check_super_jacobi(t.algebra, 1), four = check_super_jacobi(t.algebra, 4);
  EXPECT_TRUE(one.passed);
  EXPECT_EQ(one.checked, four.checked);
  EXPECT_EQ(one.passed, four.passed);
}

TEST(Jacobi, ModularReduction) {
  TitsAlgebra t = tits_algebra(split_cayley(), h3(ground()));
  for (std::int64_t p : {5, 7, 11}) EXPECT_TRUE(check_super_jacobi(t.algebra.reduced_mod(p)).passed);
}

TEST(Automorphism, Examples) {
  CompositionAlgebra c = split_cayley();
  EXPECT_TRUE(is_automorphism(c.algebra, Mat::identity(8)));
  EXPECT_TRUE(is_automorphism(c.algebra, s4_on_cayley().tau1));
  Mat swap = Mat::identity(8);
  swap(0, 0) = swap(2, 2) = 0;
  swap(0, 2) = swap(2, 0) = 1;
  Report r = automorphism_report(c.algebra, swap);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(Automorphism, BasisPairsAgreeWithRandomVectors) {
  CompositionAlgebra c = split_cayley();
  GroupAction g = s4_on_cayley();
  std::mt19937 rng(0);
  for (int i = 0; i < 4; ++i) {
    const Mat& f = g.generator(i);
    EXPECT_TRUE(is_automorphism(c.algebra, f));
    for (int s = 0; s < 25; ++s) {
      Vec x = random_vector(8, rng), y = random_vector(8, rng);
      EXPECT_EQ(f * c.mul(x, y), c.mul(f * x, f * y));
    }
  }
}

TEST(Derivation, Examples) {
  CompositionAlgebra c = split_cayley();
  EXPECT_TRUE(is_derivation(c.algebra, {inner_derivation(c, c.basis("u1"), c.basis("v2")), Parity::Even}));
  EXPECT_FALSE(is_derivation(c.algebra, {Mat::identity(8), Parity::Even}));
  EXPECT_TRUE(is_derivation(c.algebra, {Mat(8, 8), Parity::Even}));
}

TEST(Grading, Examples) {
  CompositionAlgebra c = split_cayley();
  EXPECT_TRUE(check_grading(c.algebra, klein_grading_cayley()));
  Grading bad = klein_grading_cayley();
  bad.degree[2] = {0, 0};  // u0
  Report r = grading_report(c.algebra, bad);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.witnesses.empty());
  Grading zero;
  zero.degree.assign(8, {0, 0});
  EXPECT_TRUE(check_grading(c.algebra, zero));
  EXPECT_TRUE(check_grading(c.algebra, z3_grading_cayley()));
}

TEST(Centralizer, Examples) {
  SuperAlgebra so3 = classical_example(ClassicalKind::Orthogonal, 0).g;
  EXPECT_EQ(centralizer(so3, {Vec(3)}).size(), 3u);
  EXPECT_TRUE(centralizer(so3, {so3.basis_vector(0), so3.basis_vector(1), so3.basis_vector(2)}).empty());
  SuperAlgebra gl = gl_w();
  auto z = centralizer(gl, {gl.basis_vector(0), gl.basis_vector(1), gl.basis_vector(2)});
  ASSERT_EQ(z.size(), 1u);
  // H0 + H1 + H2 is the identity matrix.
  Vec id(9);
  id[6] = id[7] = id[8] = 1;
  EXPECT_TRUE(SubspaceBasis(z, 9).contains(id));
}

TEST(SuperAlgebra, ParityIsEnforced) {
  SuperAlgebra::Builder b({"e", "o"}, {Parity::Even, Parity::Odd});
  b.add(0, 1, 0, 1);  // even * odd landing in the even part
  EXPECT_THROW(std::move(b).build(), std::invalid_argument);
}

TEST(SuperAlgebra, JsonRoundTrip) {
  for (const auto& a : {split_cayley().algebra, jordan_super_dt(Scalar(2)).algebra,
                        tits_algebra(split_cayley(), jordan_super_jvtheta()).algebra}) {
    SuperAlgebra back = SuperAlgebra::from_json(a.to_json());
    EXPECT_EQ(back, a);
  }
  SuperAlgebra m = split_cayley().algebra.reduced_mod(7);
  EXPECT_EQ(SuperAlgebra::from_json(m.to_json()), m);
}

TEST(SuperAlgebra, ChangeBasisAndSubalgebra) {
  CompositionAlgebra c = split_cayley();
  Mat p = Mat::identity(8);
  p(0, 1) = 1;  // second basis vector becomes e1 + e2 = 1
  SuperAlgebra b = c.algebra.change_basis(p, {"e1", "1", "u0", "u1", "u2", "v0", "v1", "v2"});
  EXPECT_EQ(b.basis_product(1, 3), b.basis_vector(3));
  EXPECT_EQ(b.basis_product(3, 1), b.basis_vector(3));
  SuperAlgebra q = c.algebra.subalgebra({c.basis("e1"), c.basis("e2"), c.basis("u1"), c.basis("v1")},
                                        {"e1", "e2", "u1", "v1"});
  EXPECT_EQ(q.dim(), 4u);
  EXPECT_THROW(c.algebra.subalgebra({c.basis("u0"), c.basis("u1")}, {"u0", "u1"}), std::invalid_argument);
}

TEST(SuperAlgebra, SupercommutativityOfJordanSuperalgebras) {
  EXPECT_TRUE(check_supercommutativity(jordan_super_jvtheta().algebra).passed);
  EXPECT_TRUE(check_jordan_identity(jordan_super_dt(Scalar(2)).algebra).passed);
  EXPECT_TRUE(check_associativity(split_quaternion().algebra).passed);
  EXPECT_FALSE(check_associativity(split_cayley().algebra).passed);
}
