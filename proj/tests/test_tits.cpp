#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tits/jordan.hpp"
#include "tits/tits.hpp"

using namespace tits;

namespace {

const char* kComp[4] = {"ground", "binarion", "quaternion", "cayley"};

Vec random_in(const SubspaceBasis& s, std::mt19937& rng) {
  return s.combine(random_vector(s.size(), rng));
}

JordanAlgebra perturbed_h3() {
  JordanAlgebra j = h3(ground());
  SuperAlgebra::Builder b(j.algebra.labels());
  for (std::size_t p = 0; p < j.dim(); ++p)
    for (std::size_t q = 0; q < j.dim(); ++q) b.add_product(p, q, j.algebra.basis_product(p, q));
  b.add(3, 4, 5, 1);  // iota_0 iota_1 gains an extra iota_2
  b.add(4, 3, 5, 1);
  return make_jordan("h3:ground-perturbed", std::move(b).build(), j.unit, j.trace);
}

}  // namespace

TEST(MagicSquare, DimensionsAndJacobi) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      TitsAlgebra t = tits_algebra(composition_by_name(kComp[r]), h3(composition_by_name(kComp[c])));
      EXPECT_EQ(t.dim(), static_cast<std::size_t>(oracle::kMagicSquare[r][c])) << kComp[r] << " " << kComp[c];
      EXPECT_EQ(t.inner_dim(), static_cast<std::size_t>(oracle::der_h3_dim(1 << c)));
      EXPECT_TRUE(check_super_jacobi(t.algebra).passed) << t.name;
    }
}

TEST(Bracket, TensorTimesTensor) {
  CompositionAlgebra c = split_cayley();
  JordanAlgebra j = h3(split_quaternion());
  TitsAlgebra t = tits_algebra(c, j);
  std::mt19937 rng(0);
  for (int s = 0; s < 20; ++s) {
    Vec a = random_in(c.trace_zero, rng), b = random_in(c.trace_zero, rng);
    Vec x = random_in(j.trace_zero, rng), y = random_in(j.trace_zero, rng);
    Vec want = j.t(j.mul(x, y)) * t.from_der(inner_derivation(c, a, b));
    want += t.from_tensor(c.mul(a, b) - c.mul(b, a), star(j, x, y));
    want += Scalar(2) * c.t(c.mul(a, b)) * t.from_inner(inner_jordan_derivation(j, x, y).matrix);
    EXPECT_EQ(t.bracket(t.from_tensor(a, x), t.from_tensor(b, y)), want);
  }
}

TEST(Bracket, DerivationsActOnTheirFactor) {
  CompositionAlgebra c = split_cayley();
  JordanAlgebra j = h3(split_quaternion());
  TitsAlgebra t = tits_algebra(c, j);
  std::mt19937 rng(1);
  for (int s = 0; s < 10; ++s) {
    Vec a = random_in(c.trace_zero, rng), x = random_in(j.trace_zero, rng);
    Mat dc = inner_derivation(c, random_in(c.trace_zero, rng), random_in(c.trace_zero, rng));
    Mat dj = inner_jordan_derivation(j, random_in(j.trace_zero, rng), random_in(j.trace_zero, rng)).matrix;
    EXPECT_EQ(t.bracket(t.from_der(dc), t.from_tensor(a, x)), t.from_tensor(dc * a, x));
    EXPECT_EQ(t.bracket(t.from_inner(dj), t.from_tensor(a, x)), t.from_tensor(a, dj * x));
    EXPECT_TRUE(t.bracket(t.from_der(dc), t.from_inner(dj)).is_zero());
    Mat dc2 = inner_derivation(c, random_in(c.trace_zero, rng), a);
    EXPECT_EQ(t.bracket(t.from_der(dc), t.from_der(dc2)), t.from_der(dc * dc2 - dc2 * dc));
  }
}

TEST(Components, RoundTrip) {
  TitsAlgebra t = tits_algebra(split_cayley(), h3(binarion()));
  std::mt19937 rng(2);
  Vec v = random_vector(t.dim(), rng);
  Vec back = t.from_der(t.der_part(v)) + t.from_inner(t.inner_part(v));
  Mat tp = t.tensor_part(v);
  for (std::size_t p = 0; p < t.c0_dim(); ++p)
    for (std::size_t q = 0; q < t.j0_dim(); ++q) back[t.tensor_index(p, q)] += tp(p, q);
  EXPECT_EQ(back, v);
}

TEST(LieConditions, HoldForDegreeThreeAlgebras) {
  for (const char* jn : {"h3:quaternion", "jvtheta", "d2", "field"}) {
    Report r = verify_lie_conditions(split_cayley(), jordan_by_name(jn));
    EXPECT_TRUE(r.passed) << jn << " " << r.summary();
  }
  EXPECT_TRUE(verify_lie_conditions(ground(), h3(split_cayley())).passed);
  EXPECT_TRUE(verify_lie_conditions(split_quaternion(), jordan_super_jvtheta()).passed);
}

TEST(LieConditions, FailForDiagonalOfDegreeFour) {
  JordanAlgebra d = jordan_diagonal(4);
  Report r = verify_lie_conditions(split_cayley(), d);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.witnesses.empty());
  EXPECT_FALSE(check_super_jacobi(tits_algebra(split_cayley(), d).algebra).passed);
  // Degree 3 diagonal is fine.
  EXPECT_TRUE(verify_lie_conditions(split_cayley(), jordan_diagonal(3)).passed);
}

TEST(LieConditions, FailForPerturbedH3) {
  JordanAlgebra bad = perturbed_h3();
  EXPECT_FALSE(jordan_report(bad).passed);
  Report r = verify_lie_conditions(split_cayley(), bad);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].indices.size(), 4u) << r.witnesses[0].detail;
}

TEST(Superalgebras, DimensionsAndJacobi) {
  TitsAlgebra a = tits_algebra(split_cayley(), jordan_super_jvtheta());
  EXPECT_EQ(a.algebra.even_dim(), 17u);
  EXPECT_EQ(a.algebra.odd_dim(), 14u);
  TitsAlgebra b = tits_algebra(split_cayley(), jordan_super_dt(Scalar(2)));
  EXPECT_EQ(b.algebra.even_dim(), 24u);
  EXPECT_EQ(b.algebra.odd_dim(), 16u);
  EXPECT_TRUE(check_super_jacobi(a.algebra).passed);
  EXPECT_TRUE(check_super_jacobi(b.algebra).passed);
}

TEST(Variant, TensorWithQuaternions) {
  CompositionAlgebra q = split_quaternion();
  JordanAlgebra k = jordan_by_name("field");
  SuperAlgebra small = tits62_variant(q, k.algebra, inner_derivations(k));
  EXPECT_EQ(small.dim(), 3u);
  EXPECT_TRUE(check_super_jacobi(small).passed);
  for (long n : {1, 2, 3, -2}) {
    JordanAlgebra d = jordan_super_dt(Scalar(n));
    SuperAlgebra v = tits62_variant(q, d.algebra, inner_derivations(d));
    EXPECT_EQ(v.dim(), 3 * d.dim() + inner_derivations(d).dim());
    Report r = check_super_jacobi(v);
    EXPECT_TRUE(r.passed) << n << " " << r.summary();
  }
}

TEST(Jacobi, ModularReductionOfMagicSquareEntries) {
  for (const char* c : {"quaternion", "cayley"}) {
    TitsAlgebra t = tits_algebra(composition_by_name(c), h3(split_quaternion()));
    for (std::int64_t p : {5, 7, 13}) EXPECT_TRUE(check_super_jacobi(t.algebra.reduced_mod(p)).passed) << c << p;
  }
}

// D_t has a normalized trace for every t != -1, but T(C, D_t) is a Lie
// superalgebra only at t = 2 and t = 1/2 on this grid.
TEST(Superalgebras, DtIsLieOnlyAtTwoAndHalf) {
  for (long n : {1, 2, 3})
    for (long d : {1, 2, 3, 4})
      for (long s : {1, -1}) {
        Scalar t = Scalar::fraction(s * n, d);
        if (t == Scalar(-1)) continue;
        JordanAlgebra j = jordan_super_dt(t);
        const bool want = t == Scalar(2) || t == Scalar::fraction(1, 2);
        EXPECT_EQ(verify_lie_conditions(split_cayley(), j).passed, want) << t;
        EXPECT_EQ(check_super_jacobi(tits_algebra(split_cayley(), j).algebra).passed, want) << t;
      }
}
