#include "tits/composition.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace tits {

namespace {

// Basis order of the split Cayley algebra.
enum : std::size_t { E1, E2, U0, U1, U2, V0, V1, V2 };

std::size_t u(std::size_t i) { return U0 + i % 3; }
std::size_t v(std::size_t i) { return V0 + i % 3; }

CompositionAlgebra finish(std::string name, SuperAlgebra alg, Mat norm, Vec unit) {
  CompositionAlgebra c;
  c.name = std::move(name);
  c.algebra = std::move(alg);
  c.norm = std::move(norm);
  c.unit = std::move(unit);
  const std::size_t n = c.algebra.dim();
  c.trace = c.norm * c.unit;
  c.conjugation = Mat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = c.trace[j] * c.unit;
    col -= c.algebra.basis_vector(j);
    c.conjugation.set_column(j, col);
  }
  auto kernel = kernel_basis(Mat::from_rows({c.trace}, n));
  for (const auto& k : kernel) c.trace_zero_labels.push_back(format_vector(c.algebra, k));
  c.trace_zero = SubspaceBasis(kernel, n);
  return c;
}

}  // namespace

Vec CompositionAlgebra::basis(const std::string& label) const {
  auto i = algebra.index_of(label);
  if (!i) throw std::invalid_argument("CompositionAlgebra " + name + ": no basis element '" + label + "'");
  return algebra.basis_vector(*i);
}

Vec CompositionAlgebra::commutator(const Vec& a, const Vec& b) const { return mul(a, b) - mul(b, a); }

Vec CompositionAlgebra::associator(const Vec& a, const Vec& b, const Vec& c) const {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

Scalar CompositionAlgebra::bilinear(const Vec& a, const Vec& b) const { return dot(a, norm * b); }

Scalar CompositionAlgebra::quadratic(const Vec& a) const { return bilinear(a, a) / Scalar(2); }

CompositionAlgebra split_cayley() {
  SuperAlgebra::Builder b({"e1", "e2", "u0", "u1", "u2", "v0", "v1", "v2"});
  b.add(E1, E1, E1, 1).add(E2, E2, E2, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    b.add(E1, u(i), u(i), 1).add(u(i), E2, u(i), 1);
    b.add(E2, v(i), v(i), 1).add(v(i), E1, v(i), 1);
    // u_i u_{i+1} = v_{i+2} = -u_{i+1} u_i ; v_i v_{i+1} = u_{i+2} = -v_{i+1} v_i
    b.add(u(i), u(i + 1), v(i + 2), 1).add(u(i + 1), u(i), v(i + 2), -1);
    b.add(v(i), v(i + 1), u(i + 2), 1).add(v(i + 1), v(i), u(i + 2), -1);
    // u_i v_i = -e1, v_i u_i = -e2
    b.add(u(i), v(i), E1, -1).add(v(i), u(i), E2, -1);
  }
  Mat norm(8, 8);
  norm(E1, E2) = norm(E2, E1) = 1;
  for (std::size_t i = 0; i < 3; ++i) norm(u(i), v(i)) = norm(v(i), u(i)) = 1;
  Vec unit(8);
  unit[E1] = unit[E2] = 1;
  b.claims({false, false, false});
  return finish("cayley", std::move(b).build(), std::move(norm), std::move(unit));
}

CompositionAlgebra composition_subalgebra(const CompositionAlgebra& c, const std::vector<Vec>& basis,
                                          std::vector<std::string> labels, std::string name) {
  SuperAlgebra alg = c.algebra.subalgebra(basis, labels);
  const std::size_t k = basis.size();
  Mat norm(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) norm(i, j) = c.bilinear(basis[i], basis[j]);
  }
  SubspaceBasis sb(basis, c.dim());
  auto unit = sb.try_coordinates(c.unit);
  if (!unit) throw std::invalid_argument("composition_subalgebra: span does not contain the unit");
  return finish(std::move(name), std::move(alg), std::move(norm), std::move(*unit));
}

CompositionAlgebra split_quaternion() {
  CompositionAlgebra c = split_cayley();
  return composition_subalgebra(c, {c.basis("e1"), c.basis("e2"), c.basis("u1"), c.basis("v1")},
                                {"e1", "e2", "u1", "v1"}, "quaternion");
}

CompositionAlgebra binarion() {
  CompositionAlgebra c = split_cayley();
  return composition_subalgebra(c, {c.basis("e1"), c.basis("e2")}, {"e1", "e2"}, "binarion");
}

CompositionAlgebra ground() {
  CompositionAlgebra c = split_cayley();
  return composition_subalgebra(c, {c.unit}, {"1"}, "ground");
}

CompositionAlgebra composition_by_name(const std::string& name) {
  if (name == "cayley") return split_cayley();
  if (name == "quaternion") return split_quaternion();
  if (name == "binarion") return binarion();
  if (name == "ground") return ground();
  throw std::invalid_argument("unknown composition algebra '" + name + "'");
}

Mat inner_derivation(const CompositionAlgebra& c, const Vec& a, const Vec& b) {
  const std::size_t n = c.dim();
  Vec ab = c.commutator(a, b);
  Mat d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec x = c.algebra.basis_vector(j);
    Vec col = c.commutator(ab, x);
    col.axpy(Scalar(3), c.associator(a, x, b));
    d.set_column(j, col);
  }
  return d;
}

MapAlgebra derivation_algebra(const CompositionAlgebra& c) {
  std::vector<MapGenerator> gens;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat d = inner_derivation(c, c.algebra.basis_vector(i), c.algebra.basis_vector(j));
      if (d.is_zero()) continue;
      gens.push_back({std::move(d), Parity::Even, {i, j},
                      "D[" + c.algebra.label(i) + "," + c.algebra.label(j) + "]"});
    }
  }
  return MapAlgebra(gens, n);
}

Report composition_report(const CompositionAlgebra& c, unsigned samples, unsigned seed) {
  Report r("composition " + c.name);
  std::mt19937 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    Vec a = random_vector(c.dim(), rng), b = random_vector(c.dim(), rng);
    ++r.checked;
    if (c.quadratic(c.mul(a, b)) != c.quadratic(a) * c.quadratic(b))
      r.fail({{s}, "n(ab) != n(a)n(b) for a = " + format_vector(c.algebra, a) + ", b = " + format_vector(c.algebra, b)});
    Vec q = c.mul(a, a);
    q.axpy(-c.t(a), a);
    q.axpy(c.quadratic(a), c.unit);
    ++r.checked;
    if (!q.is_zero()) r.fail({{s}, "a^2 - t(a)a + n(a)1 = " + format_vector(c.algebra, q) + " for a = " + format_vector(c.algebra, a)});
  }
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = c.algebra.basis_vector(i), y = c.algebra.basis_vector(j), z = c.algebra.basis_vector(k);
        Vec xyz = c.associator(x, y, z);
        ++r.checked;
        if (!(xyz + c.associator(y, x, z)).is_zero() || !(xyz + c.associator(x, z, y)).is_zero())
          r.fail({{i, j, k}, "associator not alternating: (x,y,z) = " + format_vector(c.algebra, xyz)});
      }
    }
  }
  if (c.conjugation * c.conjugation != Mat::identity(n)) r.fail({{}, "conjugation is not involutive"});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = c.algebra.basis_vector(i), y = c.algebra.basis_vector(j);
      ++r.checked;
      if (c.conj(c.mul(x, y)) != c.mul(c.conj(y), c.conj(x))) r.fail({{i, j}, "conj(xy) != conj(y) conj(x)"});
    }
  }
  return r;
}

Report derivation_identities_report(const CompositionAlgebra& c) {
  Report r("derivation identities " + c.name);
  const std::size_t n = c.dim();
  std::vector<Mat> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i * n + j] = inner_derivation(c, c.algebra.basis_vector(i), c.algebra.basis_vector(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked;
      if (d[i * n + j] != Scalar(-1) * d[j * n + i]) r.fail({{i, j}, "D_{a,b} != -D_{b,a}"});
      if (j < i) continue;
      r.merge(derivation_report(c.algebra, {d[i * n + j], Parity::Even}));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec a = c.algebra.basis_vector(i), b = c.algebra.basis_vector(j), e = c.algebra.basis_vector(k);
        Mat sum = inner_derivation(c, c.mul(a, b), e);
        sum += inner_derivation(c, c.mul(b, e), a);
        sum += inner_derivation(c, c.mul(e, a), b);
        ++r.checked;
        if (!sum.is_zero()) r.fail({{i, j, k}, "D_{ab,c} + D_{bc,a} + D_{ca,b} != 0"});
      }
    }
  }
  return r;
}

GroupAction s4_on_cayley() {
  GroupAction g{Mat(8, 8), Mat(8, 8), Mat(8, 8), Mat(8, 8)};
  for (Mat* m : {&g.tau1, &g.tau2, &g.phi, &g.tau}) {
    (*m)(E1, E1) = 1;
    (*m)(E2, E2) = 1;
  }
  const int t1[3] = {1, -1, -1};
  const int t2[3] = {-1, 1, -1};
  for (std::size_t i = 0; i < 3; ++i) {
    g.tau1(u(i), u(i)) = g.tau1(v(i), v(i)) = t1[i];
    g.tau2(u(i), u(i)) = g.tau2(v(i), v(i)) = t2[i];
    g.phi(u(i + 1), u(i)) = g.phi(v(i + 1), v(i)) = 1;
  }
  // tau: u0 -> -u0, u1 -> -u2, u2 -> -u1, and likewise for v
  g.tau(U0, U0) = g.tau(V0, V0) = -1;
  g.tau(U2, U1) = g.tau(V2, V1) = -1;
  g.tau(U1, U2) = g.tau(V1, V2) = -1;
  return g;
}

GroupAction conjugation_action(const MapAlgebra& maps, const GroupAction& action) {
  std::array<Mat, 4> gens;
  for (int g = 0; g < 4; ++g) {
    const Mat& m = action.generator(g);
    auto inv = inverse(m);
    if (!inv) throw std::invalid_argument("conjugation_action: singular generator");
    Mat out(maps.dim(), maps.dim());
    for (std::size_t i = 0; i < maps.dim(); ++i) out.set_column(i, maps.coordinates(m * maps.map(i) * *inv));
    gens[static_cast<std::size_t>(g)] = std::move(out);
  }
  return {gens[0], gens[1], gens[2], gens[3]};
}

Grading klein_grading_cayley() {
  Grading g;
  g.group = Grading::Group::Z2xZ2;
  g.degree = {{0, 0}, {0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 1}};
  return g;
}

Grading z3_grading_cayley() {
  Grading g;
  g.group = Grading::Group::Z3;
  g.degree = {{0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 0}, {2, 0}};
  return g;
}

}  // namespace tits
