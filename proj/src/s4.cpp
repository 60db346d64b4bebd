#include "tits/s4.hpp"

#include <stdexcept>

namespace tits {

namespace {

Mat inverse_or_throw(const Mat& m) {
  auto inv = inverse(m);
  if (!inv) throw std::domain_error("group element is not invertible");
  return *inv;
}

// Lifts an action on one factor of T(C,J) to T.  `left` selects which factor
// the matrices act on.
GroupAction lift_to_tits(const TitsAlgebra& t, const GroupAction& factor, bool left) {
  const std::size_t n = t.dim();
  std::array<Mat, 4> gens;
  for (int gi = 0; gi < 4; ++gi) {
    const Mat& psi = factor.generator(gi);
    const Mat psi_inv = inverse_or_throw(psi);
    Mat& m = gens[gi];
    m = Mat(n, n);

    for (std::size_t i = 0; i < t.der_dim(); ++i) {
      const Mat& d = t.der.map(i);
      m.set_column(i, t.from_der(left ? psi * d * psi_inv : d));
    }
    for (std::size_t i = 0; i < t.inner_dim(); ++i) {
      const Mat& d = t.inner.map(i);
      m.set_column(t.inner_offset() + i, t.from_inner(left ? d : psi * d * psi_inv));
    }
    for (std::size_t p = 0; p < t.c0_dim(); ++p) {
      const Vec& a = t.c.trace_zero[p];
      for (std::size_t q = 0; q < t.j0_dim(); ++q) {
        const Vec& x = t.j.trace_zero[q];
        m.set_column(t.tensor_index(p, q), left ? t.from_tensor(psi * a, x) : t.from_tensor(a, psi * x));
      }
    }
  }
  return GroupAction{gens[0], gens[1], gens[2], gens[3]};
}

}  // namespace

GroupAction s4_on_h3(const JordanAlgebra& j) {
  if (j.kind != JordanKind::H3 || !j.hat) throw std::invalid_argument("s4_on_h3: not an H3 algebra");
  const CompositionAlgebra& c = *j.hat;
  const std::size_t n = j.dim(), m = c.dim();
  auto io = [m](std::size_t i, std::size_t p) { return 3 + (i % 3) * m + p; };
  GroupAction g{Mat(n, n), Mat(n, n), Mat(n, n), Mat(n, n)};

  const int t1[3] = {1, -1, -1};
  const int t2[3] = {-1, 1, -1};
  const std::size_t swap12[3] = {0, 2, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    g.tau1(i, i) = g.tau2(i, i) = 1;
    g.phi((i + 1) % 3, i) = 1;
    g.tau(swap12[i], i) = 1;
    for (std::size_t p = 0; p < m; ++p) {
      g.tau1(io(i, p), io(i, p)) = t1[i];
      g.tau2(io(i, p), io(i, p)) = t2[i];
      g.phi(io(i + 1, p), io(i, p)) = 1;
      // iota_i(b_p) -> iota_{swap(i)}(conj b_p)
      for (std::size_t r = 0; r < m; ++r) g.tau(io(swap12[i], r), io(i, p)) = c.conjugation(r, p);
    }
  }
  return g;
}

GroupAction s4_on_tits_left(const TitsAlgebra& t) {
  if (t.c.name != "cayley" || t.c.dim() != 8) {
    throw std::invalid_argument("s4_on_tits_left: left factor must be the split Cayley algebra");
  }
  return lift_to_tits(t, s4_on_cayley(), true);
}

GroupAction s4_on_tits_right(const TitsAlgebra& t) {
  return lift_to_tits(t, s4_on_h3(t.j), false);
}

KleinGrading klein_grading(const GroupAction& action, const std::vector<Parity>& parity) {
  const std::size_t n = action.dim();
  if (!parity.empty() && parity.size() != n) throw std::invalid_argument("klein_grading: parity has the wrong length");
  const Mat id = Mat::identity(n);
  KleinGrading out;
  std::size_t total = 0;
  for (const KleinDegree& d : KleinGrading::kDegrees) {
    const Scalar e1 = d.second ? -1 : 1;
    const Scalar e2 = d.first ? -1 : 1;
    std::vector<Vec> basis;
    const int blocks = parity.empty() ? 1 : 2;
    for (int pb = 0; pb < blocks; ++pb) {
      std::vector<Mat> rows = {action.tau1 - e1 * id, action.tau2 - e2 * id};
      if (!parity.empty()) {
        // restrict to the parity block pb
        std::vector<Vec> other;
        for (std::size_t k = 0; k < n; ++k) {
          if (bit(parity[k]) != pb) other.push_back(Vec::unit(n, k));
        }
        if (other.size() == n) continue;
        if (!other.empty()) rows.push_back(Mat::from_rows(other, n));
      }
      for (auto& v : kernel_basis(vstack(rows))) basis.push_back(std::move(v));
    }
    total += basis.size();
    out.components[KleinGrading::slot(d)] = SubspaceBasis(std::move(basis), n);
  }
  if (total != n) throw std::domain_error("klein_grading: tau1 and tau2 are not simultaneously diagonalizable");
  return out;
}

Report klein_grading_report(const SuperAlgebra& g, const GroupAction& action, const KleinGrading& grading) {
  Report r("klein grading");
  const std::size_t n = g.dim();

  SpanBuilder all(n);
  std::size_t total = 0;
  for (const auto& comp : grading.components) {
    for (const auto& v : comp.basis()) {
      all.add(v);
      ++total;
    }
  }
  ++r.checked;
  if (total != n || all.rank() != n) r.fail({{total, all.rank()}, "components do not form a direct sum decomposition"});

  for (int gi = 0; gi < 4; ++gi) {
    for (const KleinDegree& d : KleinGrading::kDegrees) {
      const auto& target = grading.component(permute_degree(gi, d));
      const auto& src = grading.component(d);
      for (std::size_t i = 0; i < src.size(); ++i) {
        ++r.checked;
        if (!target.contains(action.generator(gi) * src[i])) {
          r.fail({{static_cast<std::size_t>(gi), KleinGrading::slot(d), i},
                  std::string(GroupAction::generator_names()[gi]) + " does not permute the components"});
        }
      }
    }
  }

  for (const KleinDegree& a : KleinGrading::kDegrees) {
    for (const KleinDegree& b : KleinGrading::kDegrees) {
      const KleinDegree sum{a.first ^ b.first, a.second ^ b.second};
      const auto& ca = grading.component(a);
      const auto& cb = grading.component(b);
      const auto& cs = grading.component(sum);
      for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t k = 0; k < cb.size(); ++k) {
          ++r.checked;
          if (!cs.contains(g.multiply(ca[i], cb[k]))) {
            r.fail({{KleinGrading::slot(a), i, KleinGrading::slot(b), k}, "product leaves the expected component"});
          }
        }
      }
    }
  }
  return r;
}

CoordinateAlgebra coordinate_algebra(const SuperAlgebra& g, const GroupAction& action) {
  const KleinGrading grading = klein_grading(action, g.parities());
  const SubspaceBasis& comp = grading.component({1, 0});
  const std::size_t m = comp.size();

  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (const auto& v : comp.basis()) {
    labels.push_back(format_vector(g, v));
    auto p = g.parity_of(v);
    parity.push_back(p.value_or(Parity::Even));
  }

  const Mat phi2 = action.phi * action.phi;
  std::vector<Vec> phi_x, phi2_y;
  for (const auto& v : comp.basis()) {
    phi_x.push_back(action.phi * v);
    phi2_y.push_back(phi2 * v);
  }
  SuperAlgebra::Builder b(labels, parity);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      Vec prod = -(action.tau * g.multiply(phi_x[i], phi2_y[k]));
      if (prod.is_zero()) continue;
      b.add_product(i, k, comp.coordinates(prod));
    }
  }

  CoordinateAlgebra ca;
  ca.component = comp;
  ca.embedding = Mat::from_columns(comp.basis(), g.dim());
  ca.algebra.name = "coordinate";
  ca.algebra.algebra = std::move(b).build();
  ca.algebra.involution = Mat(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    ca.algebra.involution.set_column(i, comp.coordinates(-(action.tau * comp[i])));
  }
  if (auto u = find_unit(ca.algebra.algebra)) ca.algebra.unit = *u;
  return ca;
}

std::array<Mat, 3> iota_maps(const CoordinateAlgebra& ca, const GroupAction& action) {
  const Mat i1 = action.phi * ca.embedding;
  return {ca.embedding, i1, action.phi * i1};
}

std::array<Vec, 3> left_so3_triple(const TitsAlgebra& t) {
  const GroupAction act = s4_on_tits_left(t);
  const CoordinateAlgebra ca = coordinate_algebra(t.algebra, act);
  const auto iota = iota_maps(ca, act);
  return {iota[0] * ca.algebra.unit, iota[1] * ca.algebra.unit, iota[2] * ca.algebra.unit};
}

}  // namespace tits
