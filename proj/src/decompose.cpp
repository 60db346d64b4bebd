#include "tits/decompose.hpp"

#include <stdexcept>

namespace tits {

namespace {

Mat unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Mat m(n, n);
  m(r, c) = 1;
  return m;
}

bool is_skew(const Mat& a) { return (a + a.transpose()).is_zero(); }
bool is_scalar(const Mat& a) { return (a - a(0, 0) * Mat::identity(a.rows())).is_zero(); }
bool is_traceless_symmetric(const Mat& a) { return (a - a.transpose()).is_zero() && a.trace().is_zero(); }

bool in_piece(Piece p, const Mat& a) {
  switch (p) {
    case Piece::So3: return is_skew(a);
    case Piece::H: return is_traceless_symmetric(a);
    case Piece::Z: return is_scalar(a);
  }
  return false;
}

std::vector<Mat> piece_basis(Piece p) {
  const auto& t = MatrixTriple::get();
  switch (p) {
    case Piece::So3: return {t.d.begin(), t.d.end()};
    case Piece::H: {
      auto h = t.h_basis();
      return {h.begin(), h.end()};
    }
    case Piece::Z: return {Mat::identity(3)};
  }
  return {};
}

const char* piece_name(Piece p) {
  switch (p) {
    case Piece::So3: return "so3";
    case Piece::H: return "h";
    case Piece::Z: return "z";
  }
  return "?";
}

// Matrices spanning a Lie algebra, with coordinates of flattened matrices.
struct MatrixLie {
  SuperAlgebra algebra;
  SubspaceBasis flat;
  std::size_t n = 0;

  Vec coordinates(const Mat& m) const { return flat.coordinates(m.flatten()); }
};

MatrixLie build_matrix_lie(const std::vector<Mat>& basis, std::vector<std::string> labels) {
  if (basis.empty()) throw std::invalid_argument("matrix_lie_algebra: empty basis");
  MatrixLie out;
  out.n = basis[0].rows();
  std::vector<Vec> flat;
  for (const auto& m : basis) flat.push_back(m.flatten());
  out.flat = SubspaceBasis(flat, out.n * out.n);
  if (out.flat.size() != basis.size()) throw std::invalid_argument("matrix_lie_algebra: basis is dependent");
  SuperAlgebra::Builder b(std::move(labels));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Mat c = commutator(basis[i], basis[j]);
      if (c.is_zero()) continue;
      auto coords = out.flat.try_coordinates(c.flatten());
      if (!coords) throw std::invalid_argument("matrix_lie_algebra: span is not closed under the commutator");
      b.add_product(i, j, *coords);
    }
  }
  b.claims({false, true, false});
  out.algebra = std::move(b).build();
  return out;
}

void require_rational(const SuperAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      for (const auto& t : g.product(i, j)) {
        if (t.coeff.is_modular()) throw std::invalid_argument("decompose: only algebras over Q are supported");
      }
    }
  }
}

// Expresses each target basis matrix as a combination of ad-words applied to
// an anchor in gl(W):  target_j = sum_w coeffs(w, j) word_w(anchor).
struct ModuleWords {
  std::vector<std::vector<int>> words;  // indices into D0, D1, D2, applied right to left
  Mat coeffs;
};

ModuleWords module_words(const Mat& anchor, const std::vector<Mat>& targets,
                         const std::function<Vec(const Mat&)>& coords) {
  const auto& t = MatrixTriple::get();
  const std::size_t dim = targets.size();
  ModuleWords out;
  std::vector<Vec> values;
  SpanBuilder span(dim);
  std::vector<std::pair<std::vector<int>, Mat>> frontier = {{{}, anchor}};
  while (!frontier.empty() && span.rank() < dim) {
    std::vector<std::pair<std::vector<int>, Mat>> next;
    for (auto& [w, m] : frontier) {
      Vec c = coords(m);
      if (span.add(c)) {
        out.words.push_back(w);
        values.push_back(c);
      }
      for (int i = 0; i < 3; ++i) {
        std::vector<int> w2 = {i};
        w2.insert(w2.end(), w.begin(), w.end());
        next.emplace_back(std::move(w2), commutator(t.d[i], m));
      }
    }
    if (out.words.size() == dim) break;
    frontier = std::move(next);
    if (!frontier.empty() && frontier.front().first.size() > 4) break;
  }
  if (out.words.size() != dim) throw std::logic_error("module_words: anchor does not generate the module");
  const Mat vals = Mat::from_columns(values, dim);
  const Mat inv = *inverse(vals);
  out.coeffs = Mat(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out.coeffs.set_column(j, inv * coords(targets[j]));
  return out;
}

Vec apply_word(const std::vector<int>& w, const std::array<Mat, 3>& ad, Vec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = ad[*it] * v;
  return v;
}

const char* const kHNames[5] = {"G0", "G1", "G2", "H01", "H12"};

struct GlTables {
  // so3 x so3, so3 x h, h x h with the pieces of the products that appear in
  // the bracket of g = (so3 x H) + (h x S) + d.
  Vec aa_comm[3][3], aa_sym[3][3];
  Scalar aa_tr[3][3];
  Vec ax_anti[3][5], ax_comm[3][5];
  Vec xx_comm[5][5], xx_sym[5][5];
  Scalar xx_tr[5][5];
};

Mat sym_part(const Mat& a, const Mat& b) {
  return a * b + b * a - Scalar::fraction(2, 3) * (a * b).trace() * Mat::identity(3);
}

const GlTables& gl_tables() {
  static const GlTables tables = [] {
    GlTables t;
    const auto& m = MatrixTriple::get();
    const auto h = m.h_basis();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        t.aa_comm[i][j] = m.so3_coordinates(commutator(m.d[i], m.d[j]));
        t.aa_sym[i][j] = m.h_coordinates(sym_part(m.d[i], m.d[j]));
        t.aa_tr[i][j] = (m.d[i] * m.d[j]).trace();
      }
      for (int j = 0; j < 5; ++j) {
        t.ax_anti[i][j] = m.so3_coordinates(m.d[i] * h[j] + h[j] * m.d[i]);
        t.ax_comm[i][j] = m.h_coordinates(commutator(m.d[i], h[j]));
      }
    }
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        t.xx_comm[i][j] = m.so3_coordinates(commutator(h[i], h[j]));
        t.xx_sym[i][j] = m.h_coordinates(sym_part(h[i], h[j]));
        t.xx_tr[i][j] = (h[i] * h[j]).trace();
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

const MatrixTriple& MatrixTriple::get() {
  static const MatrixTriple t = [] {
    MatrixTriple m;
    // positions: w1 -> 0, w2 -> 1, w0 -> 2
    m.h = {unit_matrix(3, 2, 2), unit_matrix(3, 0, 0), unit_matrix(3, 1, 1)};
    m.g = {unit_matrix(3, 0, 1) + unit_matrix(3, 1, 0), unit_matrix(3, 1, 2) + unit_matrix(3, 2, 1),
           unit_matrix(3, 0, 2) + unit_matrix(3, 2, 0)};
    m.d = {unit_matrix(3, 1, 0) - unit_matrix(3, 0, 1), unit_matrix(3, 2, 1) - unit_matrix(3, 1, 2),
           unit_matrix(3, 0, 2) - unit_matrix(3, 2, 0)};
    return m;
  }();
  return t;
}

std::array<Mat, 5> MatrixTriple::h_basis() const { return {g[0], g[1], g[2], h[0] - h[1], h[1] - h[2]}; }

Vec MatrixTriple::so3_coordinates(const Mat& a) const {
  Vec c{a(1, 0), a(2, 1), a(0, 2)};
  if (c[0] * d[0] + c[1] * d[1] + c[2] * d[2] != a) throw std::domain_error("matrix is not in so3");
  return c;
}

Vec MatrixTriple::h_coordinates(const Mat& x) const {
  Vec c{x(0, 1), x(1, 2), x(0, 2), x(2, 2), -x(1, 1)};
  const auto b = h_basis();
  Mat back(3, 3);
  for (std::size_t j = 0; j < 5; ++j) back += c[j] * b[j];
  if (back != x) throw std::domain_error("matrix is not traceless symmetric");
  return c;
}

GroupAction s4_on_w() {
  // (position of image, position of source, sign); w1 -> 0, w2 -> 1, w0 -> 2
  auto perm = [](std::initializer_list<std::array<int, 3>> entries) {
    Mat m(3, 3);
    for (const auto& e : entries) m(e[0], e[1]) = e[2];
    return m;
  };
  GroupAction g;
  g.tau1 = perm({{{2, 2, 1}}, {{0, 0, -1}}, {{1, 1, -1}}});
  g.tau2 = perm({{{2, 2, -1}}, {{0, 0, 1}}, {{1, 1, -1}}});
  g.phi = perm({{{0, 2, 1}}, {{1, 0, 1}}, {{2, 1, 1}}});
  g.tau = perm({{{2, 2, -1}}, {{1, 0, -1}}, {{0, 1, -1}}});
  return g;
}

SuperAlgebra matrix_lie_algebra(const std::vector<Mat>& basis, std::vector<std::string> labels) {
  return build_matrix_lie(basis, std::move(labels)).algebra;
}

SuperAlgebra gl_w() {
  const auto& t = MatrixTriple::get();
  return matrix_lie_algebra({t.d[0], t.d[1], t.d[2], t.g[0], t.g[1], t.g[2], t.h[0], t.h[1], t.h[2]},
                            {"D0", "D1", "D2", "G0", "G1", "G2", "H0", "H1", "H2"});
}

std::vector<InvariantMap> invariant_maps() {
  const Mat id = Mat::identity(3);
  auto comm = [](const Mat& a, const Mat& b) { return commutator(a, b); };
  auto sym = [](const Mat& a, const Mat& b) { return sym_part(a, b); };
  auto tr = [id](const Mat& a, const Mat& b) { return (a * b).trace() * id; };
  auto anti = [](const Mat& a, const Mat& b) { return a * b + b * a; };
  auto zero = [](const Mat&, const Mat&) { return Mat(3, 3); };
  return {
      {"so3 x so3 -> so3: [A,B]", Piece::So3, Piece::So3, Piece::So3, comm},
      {"so3 x so3 -> h: AB+BA-2/3 tr(AB) I", Piece::So3, Piece::So3, Piece::H, sym},
      {"so3 x so3 -> z: tr(AB) I", Piece::So3, Piece::So3, Piece::Z, tr},
      {"so3 x h -> so3: AX+XA", Piece::So3, Piece::H, Piece::So3, anti},
      {"so3 x h -> h: [A,X]", Piece::So3, Piece::H, Piece::H, comm},
      {"so3 x h -> z: 0", Piece::So3, Piece::H, Piece::Z, zero},
      {"h x h -> so3: [X,Y]", Piece::H, Piece::H, Piece::So3, comm},
      {"h x h -> h: XY+YX-2/3 tr(XY) I", Piece::H, Piece::H, Piece::H, sym},
      {"h x h -> z: tr(XY) I", Piece::H, Piece::H, Piece::Z, tr},
  };
}

Report invariant_maps_report() {
  Report r("invariant maps");
  const auto& t = MatrixTriple::get();
  const GroupAction w = s4_on_w();
  std::array<Mat, 4> inv;
  for (int g = 0; g < 4; ++g) inv[g] = *inverse(w.generator(g));
  for (const auto& f : invariant_maps()) {
    const auto lb = piece_basis(f.left), rb = piece_basis(f.right);
    for (std::size_t i = 0; i < lb.size(); ++i) {
      for (std::size_t j = 0; j < rb.size(); ++j) {
        const Mat v = f.apply(lb[i], rb[j]);
        ++r.checked;
        if (!in_piece(f.target, v)) r.fail({{i, j}, f.name + ": value outside " + piece_name(f.target)});
        for (std::size_t k = 0; k < 3; ++k) {
          ++r.checked;
          const Mat lhs = f.apply(commutator(t.d[k], lb[i]), rb[j]) + f.apply(lb[i], commutator(t.d[k], rb[j]));
          if (lhs != commutator(t.d[k], v)) r.fail({{i, j, k}, f.name + ": not so3-equivariant"});
        }
        for (int g = 0; g < 4; ++g) {
          ++r.checked;
          const Mat& p = w.generator(g);
          const Mat lhs = f.apply(p * lb[i] * inv[g], p * rb[j] * inv[g]);
          if (lhs != p * v * inv[g]) {
            r.fail({{i, j, static_cast<std::size_t>(g)}, f.name + ": not S4-equivariant"});
          }
        }
      }
    }
  }
  return r;
}

nlohmann::json DecompositionReport::to_json() const {
  auto basis_json = [](const std::vector<Vec>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : vs) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : v.data()) row.push_back(x.str());
      a.push_back(row);
    }
    return a;
  };
  nlohmann::json j;
  j["dim"] = dim;
  j["spans"] = spans;
  j["residual_dim"] = residual_dim;
  j["eigenvalues"] = eigenvalues;
  j["m_adjoint"] = m_adjoint;
  j["m_h"] = m_h;
  j["m_trivial"] = m_trivial;
  j["bases"] = {{"adjoint", basis_json(adjoint_basis)}, {"h", basis_json(h_basis)}, {"trivial", basis_json(trivial_basis)}};
  j["triple"] = basis_json({triple.begin(), triple.end()});
  j["checks"] = checks.to_json();
  return j;
}

DecompositionReport decompose(const SuperAlgebra& g, const std::array<Vec, 3>& triple) {
  require_rational(g);
  const std::size_t n = g.dim();
  for (const auto& t : triple) {
    if (t.size() != n) throw std::invalid_argument("decompose: triple vectors have the wrong length");
    for (const auto& x : t.data()) {
      if (x.is_modular()) throw std::invalid_argument("decompose: only algebras over Q are supported");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (g.multiply(triple[i], triple[(i + 1) % 3]) != triple[(i + 2) % 3]) {
      throw std::invalid_argument("decompose: triple does not satisfy [t_i, t_{i+1}] = t_{i+2}");
    }
  }

  DecompositionReport rep;
  rep.dim = n;
  rep.triple = triple;
  rep.checks = Report("decomposition");
  const std::array<Mat, 3> ad = {adjoint(g, triple[0]), adjoint(g, triple[1]), adjoint(g, triple[2])};
  const Mat omega = ad[0] * ad[0] + ad[1] * ad[1] + ad[2] * ad[2];
  const Mat id = Mat::identity(n);
  rep.adjoint_basis = kernel_basis(omega + Scalar(2) * id);
  rep.h_basis = kernel_basis(omega + Scalar(6) * id);
  rep.trivial_basis = kernel_basis(omega);
  const std::size_t covered = rep.adjoint_basis.size() + rep.h_basis.size() + rep.trivial_basis.size();
  rep.residual_dim = n - covered;
  rep.spans = rep.residual_dim == 0;
  if (!rep.adjoint_basis.empty()) rep.eigenvalues.push_back(-2);
  if (!rep.h_basis.empty()) rep.eigenvalues.push_back(-6);
  if (!rep.trivial_basis.empty()) rep.eigenvalues.push_back(0);

  ++rep.checks.checked;
  if (!rep.spans) rep.checks.fail({{rep.residual_dim}, "Casimir eigenvalues outside {0, -2, -6} occur"});
  ++rep.checks.checked;
  if (rep.adjoint_basis.size() % 3 != 0 || rep.h_basis.size() % 5 != 0) {
    rep.checks.fail({{rep.adjoint_basis.size(), rep.h_basis.size()}, "isotypic dimensions are not multiples of 3 and 5"});
  }
  rep.m_adjoint = rep.adjoint_basis.size() / 3;
  rep.m_h = rep.h_basis.size() / 5;
  rep.m_trivial = rep.trivial_basis.size();
  if (!rep.checks.passed) return rep;

  // Anchors: vectors of each isotypic component killed by ad(t0).
  auto anchors = [&](const std::vector<Vec>& comp, std::vector<Vec> seed) {
    const Mat b = Mat::from_columns(comp, n);
    SpanBuilder span(n);
    std::vector<Vec> out;
    for (auto& s : seed) {
      if (span.add(s)) out.push_back(s);
    }
    for (const auto& c : kernel_basis(ad[0] * b)) {
      Vec v = b * c;
      if (span.add(v)) out.push_back(v);
    }
    return out;
  };
  rep.h_anchors = anchors(rep.adjoint_basis, {triple[0]});
  rep.s_anchors = anchors(rep.h_basis, {});
  ++rep.checks.checked;
  if (rep.h_anchors.size() != rep.m_adjoint || rep.s_anchors.size() != rep.m_h) {
    rep.checks.fail({{rep.h_anchors.size(), rep.s_anchors.size()}, "zero-weight spaces have unexpected dimensions"});
    return rep;
  }

  const auto& mt = MatrixTriple::get();
  const auto so3 = mt.so3_basis();
  const auto hb = mt.h_basis();
  const ModuleWords adj_words = module_words(mt.d[0], {so3.begin(), so3.end()},
                                             [&](const Mat& m) { return mt.so3_coordinates(m); });
  const ModuleWords h_words = module_words(mt.h[1] + mt.h[2] - Scalar(2) * mt.h[0], {hb.begin(), hb.end()},
                                           [&](const Mat& m) { return mt.h_coordinates(m); });
  auto expand = [&](const ModuleWords& mw, const Vec& anchor, std::size_t j) {
    Vec v(n);
    for (std::size_t w = 0; w < mw.words.size(); ++w) {
      if (!mw.coeffs(w, j).is_zero()) v.axpy(mw.coeffs(w, j), apply_word(mw.words[w], ad, anchor));
    }
    return v;
  };
  std::vector<Vec> cols;
  for (const auto& a : rep.h_anchors) {
    for (std::size_t i = 0; i < 3; ++i) cols.push_back(expand(adj_words, a, i));
  }
  for (const auto& s : rep.s_anchors) {
    for (std::size_t j = 0; j < 5; ++j) cols.push_back(expand(h_words, s, j));
  }
  for (const auto& d : rep.trivial_basis) cols.push_back(d);
  rep.adapted = Mat::from_columns(cols, n);
  ++rep.checks.checked;
  if (rank(rep.adapted) != n) rep.checks.fail({{rank(rep.adapted)}, "adapted basis is not a basis"});
  rep.checks.checked += 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (cols[i] != triple[i]) rep.checks.fail({{i}, "D_i (x) 1 differs from the triple"});
  }
  return rep;
}

namespace {

void require_fresh(const SuperAlgebra& g, const DecompositionReport& r) {
  if (r.dim != g.dim() || !r.spans || !r.checks.passed || r.adapted.rows() != g.dim()) {
    throw std::invalid_argument("decomposition report does not describe this algebra");
  }
}

}  // namespace

GroupAction synthesize_s4(const SuperAlgebra& g, const DecompositionReport& report) {
  require_fresh(g, report);
  const std::size_t n = g.dim(), ma = report.m_adjoint, mh = report.m_h;
  const auto& mt = MatrixTriple::get();
  const auto hb = mt.h_basis();
  const Mat p = report.adapted;
  const Mat p_inv = *inverse(p);
  const GroupAction w = s4_on_w();
  std::array<Mat, 4> gens;
  for (int gi = 0; gi < 4; ++gi) {
    const Mat& psi = w.generator(gi);
    const Mat psi_inv = *inverse(psi);
    Mat m = Mat::identity(n);
    for (std::size_t i = 0; i < 3; ++i) {
      const Vec c = mt.so3_coordinates(psi * mt.d[i] * psi_inv);
      for (std::size_t k = 0; k < ma; ++k) {
        for (std::size_t r = 0; r < 3; ++r) m(3 * k + r, 3 * k + i) = c[r];
      }
    }
    for (std::size_t j = 0; j < 5; ++j) {
      const Vec c = mt.h_coordinates(psi * hb[j] * psi_inv);
      for (std::size_t l = 0; l < mh; ++l) {
        const std::size_t off = 3 * ma + 5 * l;
        for (std::size_t r = 0; r < 5; ++r) m(off + r, off + j) = c[r];
      }
    }
    gens[gi] = p * m * p_inv;
  }
  return GroupAction{gens[0], gens[1], gens[2], gens[3]};
}

B1Data extract_b1(const SuperAlgebra& g, const DecompositionReport& report) {
  require_fresh(g, report);
  const std::size_t ma = report.m_adjoint, mh = report.m_h, mt = report.m_trivial;
  const Mat& p = report.adapted;
  const Mat p_inv = *inverse(p);
  auto ia = [](std::size_t k, std::size_t i) { return 3 * k + i; };
  auto ih = [ma](std::size_t l, std::size_t j) { return 3 * ma + 5 * l + j; };
  auto id = [ma, mh](std::size_t r) { return 3 * ma + 5 * mh + r; };
  auto br = [&](std::size_t u, std::size_t v) { return p_inv * g.multiply(p.column(u), p.column(v)); };
  auto d0_part = [&](const Vec& c, const Scalar& s) {
    Vec v(ma);
    for (std::size_t k = 0; k < ma; ++k) v[k] = s * c[ia(k, 0)];
    return v;
  };
  auto g0_part = [&](const Vec& c, const Scalar& s) {
    Vec v(mh);
    for (std::size_t l = 0; l < mh; ++l) v[l] = s * c[ih(l, 0)];
    return v;
  };
  auto d_part = [&](const Vec& c, const Scalar& s) {
    Vec v(mt);
    for (std::size_t r = 0; r < mt; ++r) v[r] = s * c[id(r)];
    return v;
  };
  const Scalar half = Scalar::fraction(1, 2), mhalf = Scalar::fraction(-1, 2);

  B1Data b;
  b.h_dim = ma;
  b.s_dim = mh;
  b.unit = 0;
  for (std::size_t k = 0; k < ma; ++k) b.h_labels.push_back(k == 0 ? "1" : "a" + std::to_string(k));
  for (std::size_t l = 0; l < mh; ++l) b.s_labels.push_back("s" + std::to_string(l));

  for (std::size_t k = 0; k < ma; ++k) {
    for (std::size_t l = 0; l < ma; ++l) {
      // [D1 a, D2 b] = D0 (a o b) - G0 (1/2 [a,b]);  [D0 a, D0 b] has d-part -2 d_{a,b}
      const Vec c = br(ia(k, 1), ia(l, 2));
      b.hh_circ.push_back(d0_part(c, 1));
      b.hh_bracket.push_back(g0_part(c, -2));
      b.hh_d.push_back(d_part(br(ia(k, 0), ia(l, 0)), mhalf));
    }
    for (std::size_t l = 0; l < mh; ++l) {
      // [D1 a, G2 x] = D0 (1/2 [a,x]) - G0 (a o x)
      const Vec c = br(ia(k, 1), ih(l, 2));
      b.hs_bracket.push_back(d0_part(c, 2));
      b.hs_circ.push_back(g0_part(c, -1));
    }
  }
  for (std::size_t k = 0; k < mh; ++k) {
    for (std::size_t l = 0; l < mh; ++l) {
      // [G1 x, G2 y] = D0 (x o y) - G0 (1/2 [x,y]);  [G0 x, G0 y] has d-part 2 d_{x,y}
      const Vec c = br(ih(k, 1), ih(l, 2));
      b.ss_circ.push_back(d0_part(c, 1));
      b.ss_bracket.push_back(g0_part(c, -2));
      b.ss_d.push_back(d_part(br(ih(k, 0), ih(l, 0)), half));
    }
  }

  std::vector<std::string> dl;
  for (const auto& v : report.trivial_basis) dl.push_back(format_vector(g, v));
  SuperAlgebra::Builder db(dl);
  for (std::size_t r = 0; r < mt; ++r) {
    for (std::size_t s = 0; s < mt; ++s) db.add_product(r, s, d_part(br(id(r), id(s)), 1));
    Mat on_h(ma, ma), on_s(mh, mh);
    for (std::size_t k = 0; k < ma; ++k) on_h.set_column(k, d0_part(br(id(r), ia(k, 0)), 1));
    for (std::size_t l = 0; l < mh; ++l) on_s.set_column(l, g0_part(br(id(r), ih(l, 0)), 1));
    b.d_on_h.push_back(std::move(on_h));
    b.d_on_s.push_back(std::move(on_s));
  }
  db.claims({false, true, false});
  b.d = std::move(db).build();
  return b;
}

SuperAlgebra assemble_b1(const B1Data& data) {
  const std::size_t ma = data.h_dim, mh = data.s_dim, mt = data.d.dim();
  const GlTables& t = gl_tables();
  auto ia = [](std::size_t k, std::size_t i) { return 3 * k + i; };
  auto ih = [ma](std::size_t l, std::size_t j) { return 3 * ma + 5 * l + j; };
  auto id = [ma, mh](std::size_t r) { return 3 * ma + 5 * mh + r; };

  std::vector<std::string> labels;
  for (std::size_t k = 0; k < ma; ++k) {
    for (int i = 0; i < 3; ++i) labels.push_back("D" + std::to_string(i) + "*" + data.h_labels[k]);
  }
  for (std::size_t l = 0; l < mh; ++l) {
    for (int j = 0; j < 5; ++j) labels.push_back(std::string(kHNames[j]) + "*" + data.s_labels[l]);
  }
  for (std::size_t r = 0; r < mt; ++r) labels.push_back(data.d.label(r));
  SuperAlgebra::Builder b(labels);

  // c * (piece (x) v) added to the product of u and w
  auto add_so3 = [&](std::size_t u, std::size_t w, const Vec& piece, const Vec& v, const Scalar& c) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (piece[i].is_zero()) continue;
      for (std::size_t k = 0; k < ma; ++k) {
        if (!v[k].is_zero()) b.add(u, w, ia(k, i), c * piece[i] * v[k]);
      }
    }
  };
  auto add_h = [&](std::size_t u, std::size_t w, const Vec& piece, const Vec& v, const Scalar& c) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (piece[j].is_zero()) continue;
      for (std::size_t l = 0; l < mh; ++l) {
        if (!v[l].is_zero()) b.add(u, w, ih(l, j), c * piece[j] * v[l]);
      }
    }
  };
  auto add_d = [&](std::size_t u, std::size_t w, const Vec& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (std::size_t r = 0; r < mt; ++r) {
      if (!v[r].is_zero()) b.add(u, w, id(r), c * v[r]);
    }
  };
  const Scalar half = Scalar::fraction(1, 2), mhalf = Scalar::fraction(-1, 2);

  for (std::size_t k = 0; k < ma; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      // [A a, B b] = [A,B] (a o b) - sym(A,B) (1/2 [a,b]) + tr(AB) d_{a,b}
      for (std::size_t l = 0; l < ma; ++l) {
        const std::size_t kl = k * ma + l;
        for (std::size_t j = 0; j < 3; ++j) {
          add_so3(ia(k, i), ia(l, j), t.aa_comm[i][j], data.hh_circ[kl], 1);
          if (mh) add_h(ia(k, i), ia(l, j), t.aa_sym[i][j], data.hh_bracket[kl], mhalf);
          if (mt) add_d(ia(k, i), ia(l, j), data.hh_d[kl], t.aa_tr[i][j]);
        }
      }
      // [A a, X x] = -(AX+XA) (1/2 [a,x]) + [A,X] (a o x), and the opposite order
      for (std::size_t l = 0; l < mh; ++l) {
        const std::size_t kl = k * mh + l;
        for (std::size_t j = 0; j < 5; ++j) {
          add_so3(ia(k, i), ih(l, j), t.ax_anti[i][j], data.hs_bracket[kl], mhalf);
          add_h(ia(k, i), ih(l, j), t.ax_comm[i][j], data.hs_circ[kl], 1);
          add_so3(ih(l, j), ia(k, i), t.ax_anti[i][j], data.hs_bracket[kl], half);
          add_h(ih(l, j), ia(k, i), t.ax_comm[i][j], data.hs_circ[kl], -1);
        }
      }
      // [d, A a] = A d(a)
      for (std::size_t r = 0; r < mt; ++r) {
        const Vec da = data.d_on_h[r].column(k);
        for (std::size_t kk = 0; kk < ma; ++kk) {
          if (da[kk].is_zero()) continue;
          b.add(id(r), ia(k, i), ia(kk, i), da[kk]);
          b.add(ia(k, i), id(r), ia(kk, i), -da[kk]);
        }
      }
    }
  }
  for (std::size_t k = 0; k < mh; ++k) {
    for (std::size_t i = 0; i < 5; ++i) {
      // [X x, Y y] = [X,Y] (x o y) - sym(X,Y) (1/2 [x,y]) + tr(XY) d_{x,y}
      for (std::size_t l = 0; l < mh; ++l) {
        const std::size_t kl = k * mh + l;
        for (std::size_t j = 0; j < 5; ++j) {
          if (ma) add_so3(ih(k, i), ih(l, j), t.xx_comm[i][j], data.ss_circ[kl], 1);
          add_h(ih(k, i), ih(l, j), t.xx_sym[i][j], data.ss_bracket[kl], mhalf);
          if (mt) add_d(ih(k, i), ih(l, j), data.ss_d[kl], t.xx_tr[i][j]);
        }
      }
      for (std::size_t r = 0; r < mt; ++r) {
        const Vec dx = data.d_on_s[r].column(k);
        for (std::size_t kk = 0; kk < mh; ++kk) {
          if (dx[kk].is_zero()) continue;
          b.add(id(r), ih(k, i), ih(kk, i), dx[kk]);
          b.add(ih(k, i), id(r), ih(kk, i), -dx[kk]);
        }
      }
    }
  }
  for (std::size_t r = 0; r < mt; ++r) {
    for (std::size_t s = 0; s < mt; ++s) {
      for (const auto& term : data.d.product(r, s)) b.add(id(r), id(s), id(term.index), term.coeff);
    }
  }
  b.claims({false, true, false});
  return std::move(b).build();
}

Report B1Data::invariants() const {
  Report r("B1 data");
  auto check = [&r](bool ok, std::vector<std::size_t> idx, const std::string& what) {
    ++r.checked;
    if (!ok) r.fail({std::move(idx), what});
  };
  const std::size_t mt = d.dim();
  if (unit) {
    const std::size_t u = *unit;
    for (std::size_t a = 0; a < h_dim; ++a) {
      check(hh_circ[u * h_dim + a] == Vec::unit(h_dim, a), {a}, "1 o a != a");
      check(hh_bracket[u * h_dim + a].is_zero(), {a}, "[1, a] != 0");
    }
    for (std::size_t x = 0; x < s_dim; ++x) {
      check(hs_bracket[u * s_dim + x].is_zero(), {x}, "[1, x] != 0");
      check(hs_circ[u * s_dim + x] == Vec::unit(s_dim, x), {x}, "1 o x != x");
    }
  }
  for (std::size_t a = 0; a < h_dim; ++a) {
    for (std::size_t c = 0; c < h_dim; ++c) {
      check(hh_circ[a * h_dim + c] == hh_circ[c * h_dim + a], {a, c}, "a o b is not symmetric");
      if (s_dim) check(hh_bracket[a * h_dim + c] == -hh_bracket[c * h_dim + a], {a, c}, "[a, b] is not skew");
      if (mt) check(hh_d[a * h_dim + c] == -hh_d[c * h_dim + a], {a, c}, "d_{a,b} is not skew");
    }
  }
  for (std::size_t x = 0; x < s_dim; ++x) {
    for (std::size_t y = 0; y < s_dim; ++y) {
      check(ss_circ[x * s_dim + y] == ss_circ[y * s_dim + x], {x, y}, "x o y is not symmetric");
      check(ss_bracket[x * s_dim + y] == -ss_bracket[y * s_dim + x], {x, y}, "[x, y] is not skew");
      if (mt) check(ss_d[x * s_dim + y] == -ss_d[y * s_dim + x], {x, y}, "d_{x,y} is not skew");
    }
  }
  for (std::size_t p = 0; p < mt; ++p) {
    for (std::size_t q = 0; q < mt; ++q) {
      Mat lh(h_dim, h_dim), ls(s_dim, s_dim);
      for (const auto& term : d.product(p, q)) {
        lh += term.coeff * d_on_h[term.index];
        ls += term.coeff * d_on_s[term.index];
      }
      check(lh == commutator(d_on_h[p], d_on_h[q]), {p, q}, "d does not act on H as a representation");
      check(ls == commutator(d_on_s[p], d_on_s[q]), {p, q}, "d does not act on S as a representation");
    }
  }
  return r;
}

B1Data b1_from_jordan(const SuperAlgebra& j, const MapAlgebra& d) {
  if (j.is_super()) throw std::invalid_argument("b1_from_jordan: J must be an ordinary algebra");
  if (d.space_dim() != j.dim()) throw std::invalid_argument("b1_from_jordan: d does not act on J");
  const std::size_t n = j.dim();
  B1Data b;
  b.h_dim = n;
  b.h_labels = j.labels();
  b.d = d.lie();
  std::vector<Mat> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = j.left_multiplication(j.basis_vector(i));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      b.hh_circ.push_back(j.basis_product(a, c));
      b.hh_bracket.push_back(Vec(0));
      auto coords = d.try_coordinates(Scalar::fraction(1, 2) * commutator(left[a], left[c]));
      if (!coords) throw std::invalid_argument("b1_from_jordan: d lacks an inner derivation");
      b.hh_d.push_back(*coords);
    }
  }
  for (std::size_t r = 0; r < d.dim(); ++r) {
    b.d_on_h.push_back(d.map(r));
    b.d_on_s.push_back(Mat(0, 0));
  }
  if (auto u = find_unit(j)) {
    for (std::size_t i = 0; i < n; ++i) {
      if (*u == j.basis_vector(i)) b.unit = i;
    }
  }
  return b;
}

bool bc1_probe(const B1Data& data) {
  const std::size_t mt = data.d.dim();
  SpanBuilder span(mt);
  for (const auto& v : data.hh_d) span.add(v);
  for (const auto& v : data.ss_d) span.add(v);
  return span.rank() == mt;
}

namespace {

ClassicalExample finish_example(std::string name, const std::vector<Mat>& basis, std::vector<std::string> labels,
                                const std::array<Mat, 3>& so3) {
  const MatrixLie ml = build_matrix_lie(basis, std::move(labels));
  ClassicalExample ex;
  ex.name = std::move(name);
  ex.g = ml.algebra;
  for (std::size_t i = 0; i < 3; ++i) ex.triple[i] = ml.coordinates(so3[i]);
  return ex;
}

Mat embed_block(const Mat& a, std::size_t n, std::size_t offset) {
  Mat m(n, n);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(offset + r, offset + c) = a(r, c);
  }
  return m;
}

}  // namespace

ClassicalExample classical_example(ClassicalKind kind, std::size_t dim_u) {
  const auto& mt = MatrixTriple::get();
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  std::array<Mat, 3> so3;
  const std::string u = std::to_string(dim_u);
  switch (kind) {
    case ClassicalKind::Orthogonal: {
      const std::size_t n = 3 + dim_u;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          basis.push_back(unit_matrix(n, i, j) - unit_matrix(n, j, i));
          labels.push_back("F[" + std::to_string(i) + "," + std::to_string(j) + "]");
        }
      }
      for (std::size_t i = 0; i < 3; ++i) so3[i] = embed_block(mt.d[i], n, 0);
      return finish_example("so(W+U):" + u, basis, labels, so3);
    }
    case ClassicalKind::Special: {
      const std::size_t n = 3 + dim_u;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          basis.push_back(unit_matrix(n, i, j));
          labels.push_back("E[" + std::to_string(i) + "," + std::to_string(j) + "]");
        }
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
        labels.push_back("K[" + std::to_string(i) + "]");
      }
      for (std::size_t i = 0; i < 3; ++i) so3[i] = embed_block(mt.d[i], n, 0);
      return finish_example("sl(W+U):" + u, basis, labels, so3);
    }
    case ClassicalKind::Symplectic: {
      if (dim_u % 2 != 0) throw std::invalid_argument("classical_example: symplectic U needs even dimension");
      const std::size_t n = 6 + dim_u;
      // B(f_i, w_i) = 1 on W + W*, standard symplectic pairs on U
      Mat omega(n, n);
      for (std::size_t i = 0; i < 3; ++i) {
        omega(3 + i, i) = 1;
        omega(i, 3 + i) = -1;
      }
      for (std::size_t k = 0; 6 + 2 * k < n; ++k) {
        omega(6 + 2 * k, 7 + 2 * k) = 1;
        omega(7 + 2 * k, 6 + 2 * k) = -1;
      }
      Mat sys(n * n, n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
          const Mat e = unit_matrix(n, a, c);
          sys.set_column(a * n + c, (e.transpose() * omega + omega * e).flatten());
        }
      }
      for (const auto& v : kernel_basis(sys)) {
        basis.push_back(Mat::unflatten(v, n, n));
        labels.push_back("X" + std::to_string(labels.size()));
      }
      // A -> diag(A, -A^T, 0)
      for (std::size_t i = 0; i < 3; ++i) {
        so3[i] = embed_block(mt.d[i], n, 0) + embed_block(Scalar(-1) * mt.d[i].transpose(), n, 3);
      }
      return finish_example("sp(W+W*+U):" + u, basis, labels, so3);
    }
  }
  throw std::invalid_argument("classical_example: unknown kind");
}

ClassicalExample gl_of_h_example() {
  const auto& mt = MatrixTriple::get();
  const auto hb = mt.h_basis();
  std::array<Mat, 3> rho;
  for (std::size_t i = 0; i < 3; ++i) {
    rho[i] = Mat(5, 5);
    for (std::size_t j = 0; j < 5; ++j) rho[i].set_column(j, mt.h_coordinates(commutator(mt.d[i], hb[j])));
  }
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t c = 0; c < 5; ++c) {
      basis.push_back(unit_matrix(5, a, c));
      labels.push_back("E[" + std::to_string(a) + "," + std::to_string(c) + "]");
    }
  }
  return finish_example("gl(h)", basis, labels, rho);
}

}  // namespace tits
