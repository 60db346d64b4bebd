#include "tits/iso.hpp"

namespace tits {

namespace {

// Solves f S = I for f, where the columns of S are the coordinates of a
// spanning set of the coordinate algebra and I holds their images.
Mat map_from_images(const CoordinateAlgebra& ca, const std::vector<Vec>& ambient, const std::vector<Vec>& images,
                    std::size_t target_dim, const std::string& name) {
  const std::size_t m = ca.algebra.dim();
  std::vector<Vec> src;
  for (const auto& v : ambient) {
    auto c = ca.component.try_coordinates(v);
    if (!c) {
      Report r(name);
      r.fail({{src.size()}, "prescribed element does not lie in the (1,0) component"});
      throw VerificationError(r);
    }
    src.push_back(*c);
  }
  const Mat s = Mat::from_columns(src, m);
  auto s_inv = inverse(s);
  if (!s_inv) {
    Report r(name);
    r.fail({{rank(s), m}, "prescribed elements do not form a basis of the (1,0) component"});
    throw VerificationError(r);
  }
  return Mat::from_columns(images, target_dim) * *s_inv;
}

Vec kron(const Vec& a, const Vec& x) {
  Vec v(a.size() * x.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < x.size(); ++k) v[i * x.size() + k] = a[i] * x[k];
  }
  return v;
}

void finish(InvolutionHomomorphism& f, bool isomorphism = true) {
  f.report = f.verify(isomorphism);
  if (!f.report.passed) throw VerificationError(f.report);
}

}  // namespace

Report InvolutionHomomorphism::verify(bool isomorphism) const {
  Report r(name);
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    r.fail({{matrix.rows(), matrix.cols()}, "matrix shape does not match the algebras"});
    return r;
  }
  r.merge(homomorphism_report(source.algebra, target.algebra, matrix));
  for (std::size_t i = 0; i < source.dim(); ++i) {
    ++r.checked;
    const Vec lhs = matrix * source.involution.column(i);
    const Vec rhs = target.involution * matrix.column(i);
    if (lhs != rhs) r.fail({{i}, "map does not intertwine the involutions at " + source.algebra.label(i)});
    ++r.checked;
    const Vec img = matrix.column(i);
    auto p = target.algebra.parity_of(img);
    if (!img.is_zero() && (!p || *p != source.algebra.parity(i))) {
      r.fail({{i}, "map is not even at " + source.algebra.label(i)});
    }
  }
  ++r.checked;
  const std::size_t rk = rank(matrix);
  if (rk != source.dim() || (isomorphism && rk != target.dim())) {
    r.fail({{rk, source.dim(), target.dim()}, isomorphism ? "map is not bijective" : "map is not injective"});
  }
  r.check = name;
  return r;
}

Report LieIsomorphism::verify() const {
  Report r = homomorphism_report(source, target, matrix);
  ++r.checked;
  if (source.dim() != target.dim() || rank(matrix) != source.dim()) r.fail({{}, "map is not bijective"});
  r.check = name;
  return r;
}

CoordinateAlgebra left_coordinate_algebra(const TitsAlgebra& t) {
  CoordinateAlgebra ca = coordinate_algebra(t.algebra, s4_on_tits_left(t));
  ca.algebra.name = "T10:" + t.name;
  return ca;
}

CoordinateAlgebra right_coordinate_algebra(const TitsAlgebra& t) {
  CoordinateAlgebra ca = coordinate_algebra(t.algebra, s4_on_tits_right(t));
  ca.algebra.name = "T10:" + t.name;
  return ca;
}

InvolutionHomomorphism phi_theorem41(const TitsAlgebra& t, const CoordinateAlgebra& ca,
                                     const AlgebraWithInvolution& aj) {
  const CompositionAlgebra& c = t.c;
  const JordanAlgebra& j = t.j;
  const std::size_t nj = j.dim();
  const Vec e1 = c.basis("e1"), e2 = c.basis("e2");
  const Vec zero(nj);
  const Vec two = Scalar(2) * j.unit;

  std::vector<Vec> ambient = {
      t.from_der(inner_derivation(c, c.basis("v1"), c.basis("u2"))),
      t.from_der(inner_derivation(c, c.basis("u1"), c.basis("v2"))),
      t.from_der(inner_derivation(c, e1 - e2, c.basis("u0"))),
      t.from_der(inner_derivation(c, e2 - e1, c.basis("v0"))),
  };
  std::vector<Vec> images = {
      block_vector(3, zero, zero, 0),
      block_vector(0, zero, zero, 3),
      block_vector(0, two, zero, 0),
      block_vector(0, zero, two, 0),
  };
  for (const Vec& x : j.trace_zero.basis()) {
    ambient.push_back(t.from_tensor(c.basis("u0"), x));
    images.push_back(block_vector(0, x, zero, 0));
  }
  for (const Vec& x : j.trace_zero.basis()) {
    ambient.push_back(t.from_tensor(c.basis("v0"), x));
    images.push_back(block_vector(0, zero, x, 0));
  }

  InvolutionHomomorphism f;
  f.name = "T10 -> A(J) for " + j.name;
  f.source = ca.algebra;
  f.target = aj;
  f.matrix = map_from_images(ca, ambient, images, aj.dim(), f.name);
  finish(f);
  return f;
}

InvolutionHomomorphism phi_theorem41(const JordanAlgebra& j) {
  const TitsAlgebra t = tits_algebra(split_cayley(), j);
  return phi_theorem41(t, left_coordinate_algebra(t), a_of_j(j));
}

Mat d_iota(const JordanAlgebra& j, std::size_t i, const Vec& x) {
  return inner_jordan_derivation(j, j.e(i + 1) - j.e(i + 2), j.iota(i, x)).matrix;
}

InvolutionHomomorphism phi_theorem61(const TitsAlgebra& t, const CoordinateAlgebra& ca,
                                     const AlgebraWithInvolution& tp) {
  const CompositionAlgebra& c = t.c;
  const JordanAlgebra& j = t.j;
  if (j.kind != JordanKind::H3 || !j.hat) throw std::invalid_argument("phi_theorem61: J must be H3");
  const CompositionAlgebra& chat = *j.hat;
  const Scalar minus_half = Scalar::fraction(-1, 2);

  std::vector<Vec> ambient, images;
  for (const Vec& a : c.trace_zero.basis()) {
    for (std::size_t r = 0; r < chat.dim(); ++r) {
      const Vec x = chat.algebra.basis_vector(r);
      ambient.push_back(t.from_tensor(a, j.iota(0, x)));
      images.push_back(-kron(a, x));
    }
  }
  for (std::size_t r = 0; r < chat.dim(); ++r) {
    const Vec x = chat.algebra.basis_vector(r);
    ambient.push_back(t.from_inner(d_iota(j, 0, x)));
    images.push_back(minus_half * kron(c.unit, x));
  }

  InvolutionHomomorphism f;
  f.name = "T10 -> " + c.name + " (x) " + chat.name;
  f.source = ca.algebra;
  f.target = tp;
  f.matrix = map_from_images(ca, ambient, images, tp.dim(), f.name);
  finish(f);
  return f;
}

InvolutionHomomorphism phi_theorem61(const CompositionAlgebra& c, const CompositionAlgebra& chat) {
  const TitsAlgebra t = tits_algebra(c, h3(chat));
  return phi_theorem61(t, right_coordinate_algebra(t), tensor_product(c, chat));
}

CompositionAlgebra s4_invariant_quaternion() {
  const CompositionAlgebra c = split_cayley();
  std::vector<Vec> basis = {c.basis("e1") + c.basis("e2")};
  std::vector<std::string> labels = {"1"};
  for (int i = 0; i < 3; ++i) {
    const std::string s = std::to_string(i);
    basis.push_back(c.basis("u" + s) + c.basis("v" + s));
    labels.push_back("w" + s);
  }
  return composition_subalgebra(c, basis, labels, "quaternion-s4");
}

TqjMaps tqj_maps(const JordanAlgebra& j) {
  TqjMaps out;
  const std::size_t nj = j.dim();

  // J -> S inside A(J)
  const AlgebraWithInvolution aj = a_of_j(j);
  AlgebraWithInvolution jj{j.name, j.algebra, Mat::identity(nj), j.unit};
  const Scalar q3 = Scalar::fraction(3, 4), qm = Scalar::fraction(-1, 4), h = Scalar::fraction(1, 2);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < nj; ++i) {
    const Vec b = j.algebra.basis_vector(i);
    const Scalar alpha = j.t(b);
    const Vec x = b - alpha * j.unit;
    const Vec off = qm * alpha * j.unit + h * x;
    cols.push_back(block_vector(q3 * alpha, off, off, q3 * alpha));
  }
  out.jordan_to_s.name = "J -> S";
  out.jordan_to_s.source = jj;
  out.jordan_to_s.target = aj;
  out.jordan_to_s.matrix = Mat::from_columns(cols, aj.dim());
  Report r = out.jordan_to_s.verify(false);

  // The image must be Phi(T(Q,J)_(1,0)), with T(Q,J) sitting inside T(C,J).
  const TitsAlgebra tc = tits_algebra(split_cayley(), j);
  const CoordinateAlgebra ca = left_coordinate_algebra(tc);
  const InvolutionHomomorphism phi = phi_theorem41(tc, ca, aj);
  const CompositionAlgebra& c = tc.c;
  std::vector<Vec> tq = {tc.from_der(
      inner_derivation(c, c.basis("u1") + c.basis("v1"), c.basis("u2") + c.basis("v2")))};
  for (const Vec& x : j.trace_zero.basis()) tq.push_back(tc.from_tensor(c.basis("u0") + c.basis("v0"), x));
  SpanBuilder image(aj.dim()), both(aj.dim());
  for (const Vec& v : cols) {
    image.add(v);
    both.add(v);
  }
  for (const Vec& v : tq) both.add(phi.apply(ca.coordinates(v)));
  ++r.checked;
  if (image.rank() != nj || both.rank() != nj) {
    r.fail({{image.rank(), both.rank()}, "image of J differs from Phi(T(Q,J)_(1,0))"});
  }
  out.jordan_to_s.report = r;
  if (!r.passed) throw VerificationError(r);

  // T(Q,J) -> (Q^0 (x) J) + d_{J,J}
  const CompositionAlgebra q = s4_invariant_quaternion();
  const TitsAlgebra tq_alg = tits_algebra(q, j);
  LieIsomorphism& lie = out.lie;
  lie.name = "T(Q,J) -> (Q0 (x) J) + d_{J,J}";
  lie.source = tq_alg.algebra;
  lie.target = tits62_variant(q, j.algebra, tq_alg.inner);
  const std::size_t na = q.trace_zero.size(), nt = lie.target.dim();
  lie.matrix = Mat(nt, tq_alg.dim());
  auto put_tensor = [&](std::size_t col, const Vec& a0coords, const Vec& x) {
    for (std::size_t s = 0; s < na; ++s) {
      if (a0coords[s].is_zero()) continue;
      for (std::size_t k = 0; k < nj; ++k) lie.matrix(s * nj + k, col) += a0coords[s] * x[k];
    }
  };
  for (std::size_t i = 0; i < tq_alg.der_dim(); ++i) {
    const auto [a, b] = tq_alg.der.element(i).source;
    const Vec comm = q.commutator(q.algebra.basis_vector(a), q.algebra.basis_vector(b));
    put_tensor(i, q.trace_zero.coordinates(comm), j.unit);
  }
  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t k = 0; k < tq_alg.j0_dim(); ++k) {
      put_tensor(tq_alg.tensor_index(p, k), Vec::unit(na, p), j.trace_zero[k]);
    }
  }
  for (std::size_t k = 0; k < tq_alg.inner_dim(); ++k) lie.matrix(na * nj + k, tq_alg.inner_offset() + k) = 1;
  lie.report = lie.verify();
  if (!lie.report.passed) throw VerificationError(lie.report);
  return out;
}

InvolutionHomomorphism ak_to_ajv() {
  InvolutionHomomorphism f;
  f.name = "A(K) -> A(J(V,theta))";
  f.source = a_of_cubic(kaplansky());
  f.target = a_of_j(jordan_super_jvtheta());
  const std::pair<const char*, std::pair<const char*, int>> rows[] = {
      {"a", {"a", 1}},       {"b", {"b", 1}},       {"x[e]", {"x[1]", 1}}, {"x[x]", {"x[u]", -1}},
      {"x[y]", {"x[v]", 2}}, {"y[e]", {"y[1]", 1}}, {"y[x]", {"y[u]", 1}}, {"y[y]", {"y[v]", -2}},
  };
  f.matrix = Mat(f.target.dim(), f.source.dim());
  for (const auto& [src, img] : rows) {
    const auto si = f.source.algebra.index_of(src);
    const auto ti = f.target.algebra.index_of(img.first);
    if (!si || !ti) throw std::logic_error("ak_to_ajv: unexpected basis labels");
    f.matrix(*ti, *si) = img.second;
  }
  finish(f);
  return f;
}

}  // namespace tits
