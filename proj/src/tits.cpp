#include "tits/tits.hpp"

#include <stdexcept>

namespace tits {

namespace {

std::string wrap(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

// Bilinear extension of a table of coordinate vectors indexed by basis pairs.
Vec bilinear(const std::vector<Vec>& table, std::size_t n, std::size_t out_dim, const Vec& x, const Vec& y) {
  Vec out(out_dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (y[k].is_zero()) continue;
      out.axpy(x[i] * y[k], table[i * n + k]);
    }
  }
  return out;
}

std::vector<Vec> der_coordinate_table(const CompositionAlgebra& c, const MapAlgebra& der) {
  const std::size_t n = c.dim();
  std::vector<Vec> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      t[i * n + k] = der.coordinates(inner_derivation(c, c.algebra.basis_vector(i), c.algebra.basis_vector(k)));
    }
  }
  return t;
}

std::vector<Vec> inner_coordinate_table(const SuperAlgebra& j, const MapAlgebra& inner) {
  auto maps = inner_derivation_table(j);
  std::vector<Vec> t(maps.size());
  for (std::size_t p = 0; p < maps.size(); ++p) t[p] = inner.coordinates(maps[p]);
  return t;
}

// d_{x,y}(z) = x(yz) - (-1)^{|x||y|} y(xz) for homogeneous x, y.
Vec apply_inner(const SuperAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec out = a.multiply(x, a.multiply(y, z));
  const Parity px = a.parity_of(x).value_or(Parity::Even);
  const Parity py = a.parity_of(y).value_or(Parity::Even);
  out.axpy(Scalar(-koszul(px, py)), a.multiply(y, a.multiply(x, z)));
  return out;
}

struct Sparse {
  std::vector<std::pair<std::size_t, Scalar>> entries;
  explicit Sparse(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) entries.emplace_back(i, v[i]);
    }
  }
};

// First [d_{b_i,b_k}, d_{b_p,b_q}] outside the span of all d_{b,b'}.
Witness unclosed_inner_witness(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  const auto table = inner_derivation_table(a);
  SpanBuilder span(n * n);
  for (const auto& d : table) span.add(d.flatten());
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t s = r + 1; s < table.size(); ++s) {
      const std::size_t i = r / n, k = r % n, p = s / n, q = s % n;
      Mat c = supercommutator(table[r], a.parity(i) + a.parity(k), table[s], a.parity(p) + a.parity(q));
      if (!span.contains(c.flatten())) {
        return {{i, k, p, q}, "[d(" + a.label(i) + "," + a.label(k) + "), d(" + a.label(p) + "," + a.label(q) +
                                  ")] is not in d_{J,J}"};
      }
    }
  }
  return {{}, "d_{J,J} is not closed under the commutator"};
}

}  // namespace

Vec TitsAlgebra::from_der(const Mat& d) const {
  Vec v(dim());
  Vec c0 = der.coordinates(d);
  for (std::size_t i = 0; i < der_dim(); ++i) v[i] = c0[i];
  return v;
}

Vec TitsAlgebra::from_tensor(const Vec& a, const Vec& x) const {
  Vec v(dim());
  Vec ca = c.trace_zero.coordinates(a);
  Vec cx = j.trace_zero.coordinates(x);
  for (std::size_t p = 0; p < c0_dim(); ++p) {
    if (ca[p].is_zero()) continue;
    for (std::size_t q = 0; q < j0_dim(); ++q) v[tensor_index(p, q)] = ca[p] * cx[q];
  }
  return v;
}

Vec TitsAlgebra::from_inner(const Mat& d) const {
  Vec v(dim());
  Vec ci = inner.coordinates(d);
  for (std::size_t i = 0; i < inner_dim(); ++i) v[inner_offset() + i] = ci[i];
  return v;
}

Mat TitsAlgebra::der_part(const Vec& v) const { return der.combine(v.slice(0, der_dim())); }

Mat TitsAlgebra::inner_part(const Vec& v) const { return inner.combine(v.slice(inner_offset(), inner_dim())); }

Mat TitsAlgebra::tensor_part(const Vec& v) const {
  Mat m(c0_dim(), j0_dim());
  for (std::size_t p = 0; p < c0_dim(); ++p) {
    for (std::size_t q = 0; q < j0_dim(); ++q) m(p, q) = v[tensor_index(p, q)];
  }
  return m;
}

TitsAlgebra tits_algebra(const CompositionAlgebra& c, const JordanAlgebra& j) {
  TitsAlgebra t;
  t.name = "tits:" + c.name + ":" + j.name;
  t.c = c;
  t.j = j;
  t.der = derivation_algebra(c);
  t.inner = inner_derivations(j);
  const auto& ja = j.algebra;
  const std::size_t nc = c.dim(), nj = j.dim();
  const std::size_t nd = t.der_dim(), na = t.c0_dim(), nx = t.j0_dim(), ni = t.inner_dim();
  const std::size_t off_i = t.inner_offset();

  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (std::size_t i = 0; i < nd; ++i) {
    labels.push_back(t.der.element(i).label);
    parity.push_back(Parity::Even);
  }
  std::vector<Parity> xpar(nx);
  for (std::size_t q = 0; q < nx; ++q) xpar[q] = ja.parity_of(j.trace_zero[q]).value_or(Parity::Even);
  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t q = 0; q < nx; ++q) {
      labels.push_back(wrap(c.trace_zero_labels[p]) + "*" + wrap(j.trace_zero_labels[q]));
      parity.push_back(xpar[q]);
    }
  }
  for (std::size_t k = 0; k < ni; ++k) {
    labels.push_back(t.inner.element(k).label);
    parity.push_back(t.inner.element(k).parity);
  }

  const auto der_table = der_coordinate_table(c, t.der);
  const auto inner_table = inner_coordinate_table(ja, t.inner);
  SuperAlgebra::Builder b(labels, parity);
  auto add_vec = [&](std::size_t r, std::size_t s, std::size_t offset, const Vec& v, const Scalar& scale) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) b.add(r, s, offset + k, scale * v[k]);
    }
  };
  // Adds scale * (a (x) x) given C^0 and J^0 coordinates.
  auto add_tensor = [&](std::size_t r, std::size_t s, const Vec& ca, const Vec& cx, const Scalar& scale) {
    for (std::size_t p = 0; p < na; ++p) {
      if (ca[p].is_zero()) continue;
      for (std::size_t q = 0; q < nx; ++q) {
        if (!cx[q].is_zero()) b.add(r, s, t.tensor_index(p, q), scale * ca[p] * cx[q]);
      }
    }
  };

  // der C and d_{J,J} are subalgebras
  for (std::size_t r = 0; r < nd; ++r) {
    for (std::size_t s = 0; s < nd; ++s) add_vec(r, s, 0, t.der.lie().basis_product(r, s), 1);
  }
  for (std::size_t r = 0; r < ni; ++r) {
    for (std::size_t s = 0; s < ni; ++s) add_vec(off_i + r, off_i + s, off_i, t.inner.lie().basis_product(r, s), 1);
  }
  // [D, a x] = D(a) x ; [d, a x] = a d(x)
  for (std::size_t r = 0; r < nd; ++r) {
    for (std::size_t p = 0; p < na; ++p) {
      Vec da = c.trace_zero.coordinates(t.der.map(r) * c.trace_zero[p]);
      for (std::size_t q = 0; q < nx; ++q) {
        Vec ex = Vec::unit(nx, q);
        add_tensor(r, t.tensor_index(p, q), da, ex, 1);
        add_tensor(t.tensor_index(p, q), r, da, ex, -1);
      }
    }
  }
  for (std::size_t k = 0; k < ni; ++k) {
    const auto& d = t.inner.element(k);
    for (std::size_t q = 0; q < nx; ++q) {
      Vec dx = j.trace_zero.coordinates(d.matrix * j.trace_zero[q]);
      const Scalar back(-koszul(xpar[q], d.parity));
      for (std::size_t p = 0; p < na; ++p) {
        Vec ea = Vec::unit(na, p);
        add_tensor(off_i + k, t.tensor_index(p, q), ea, dx, 1);
        add_tensor(t.tensor_index(p, q), off_i + k, ea, dx, back);
      }
    }
  }
  // [a x, b y] = t_J(xy) D_{a,b} + [a,b] (x) x*y + 2 t(ab) d_{x,y}
  for (std::size_t p = 0; p < na; ++p) {
    const Vec& a = c.trace_zero[p];
    for (std::size_t pr = 0; pr < na; ++pr) {
      const Vec& bb = c.trace_zero[pr];
      const Vec dab = bilinear(der_table, nc, nd, a, bb);
      const Vec comm = c.trace_zero.coordinates(c.commutator(a, bb));
      const Scalar tab = c.t(c.mul(a, bb));
      for (std::size_t q = 0; q < nx; ++q) {
        const Vec& x = j.trace_zero[q];
        for (std::size_t qs = 0; qs < nx; ++qs) {
          const Vec& y = j.trace_zero[qs];
          const std::size_t r = t.tensor_index(p, q), s = t.tensor_index(pr, qs);
          const Scalar txy = j.t(j.mul(x, y));
          if (!txy.is_zero()) add_vec(r, s, 0, dab, txy);
          add_tensor(r, s, comm, j.trace_zero.coordinates(star(j, x, y)), 1);
          if (!tab.is_zero()) add_vec(r, s, off_i, bilinear(inner_table, nj, ni, x, y), Scalar(2) * tab);
        }
      }
    }
  }
  b.claims({false, true, false});
  t.algebra = std::move(b).build();
  return t;
}

Report verify_lie_conditions(const CompositionAlgebra& c, const JordanAlgebra& j) {
  Report all{"Lie conditions for T(" + c.name + "," + j.name + ")"};
  const auto& ja = j.algebra;
  const std::size_t nc = c.dim(), nj = j.dim();
  const std::size_t na = c.trace_zero.size(), nx = j.trace_zero.size();
  if (na == 0 || nx == 0) return all;
  MapAlgebra inner;
  try {
    inner = inner_derivations(j);
  } catch (const std::domain_error&) {
    // Without a closed d_{J,J} there is no bracket to test the conditions
    // against; name the first pair of generators whose bracket escapes.
    all.fail(unclosed_inner_witness(ja));
    return all;
  }
  const auto inner_table = inner_coordinate_table(ja, inner);
  const std::vector<Vec>& A = c.trace_zero.basis();
  const std::vector<Vec>& X = j.trace_zero.basis();
  std::vector<Parity> px(nx);
  for (std::size_t q = 0; q < nx; ++q) px[q] = ja.parity_of(X[q]).value_or(Parity::Even);

  // Cyclic orderings and their Koszul signs.
  const std::size_t perm[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto cyc_sign = [&](const std::size_t (&q)[3], int s) -> Scalar {
    Parity p0 = px[q[0]], p1 = px[q[1]], p2 = px[q[2]];
    if (s == 1) return Scalar(koszul(p0, p1 + p2));
    if (s == 2) return Scalar(koszul(p2, p0 + p1));
    return Scalar(1);
  };
  auto triple_label = [](const std::vector<std::string>& l, std::size_t a, std::size_t b, std::size_t c3) {
    return "(" + l[a] + "; " + l[b] + "; " + l[c3] + ")";
  };

  // Basis of the span of the given vectors, keeping originals.
  auto reduce = [](const std::vector<Vec>& vs, std::size_t dim) {
    SpanBuilder span(dim);
    std::vector<Vec> out;
    for (const auto& v : vs) {
      if (!v.is_zero() && span.add(v)) out.push_back(v);
    }
    return out;
  };

  // (i) sum t([a1,a2]a3) d_{x1*x2, x3} = 0
  {
    Report r{"condition (i)"};
    std::vector<Vec> stacks;
    for (std::size_t p1 = 0; p1 < na; ++p1) {
      for (std::size_t p2 = 0; p2 < na; ++p2) {
        for (std::size_t p3 = 0; p3 < na; ++p3) {
          const Vec* a[3] = {&A[p1], &A[p2], &A[p3]};
          Vec v(3);
          for (int s = 0; s < 3; ++s) {
            v[s] = c.t(c.mul(c.commutator(*a[perm[s][0]], *a[perm[s][1]]), *a[perm[s][2]]));
          }
          stacks.push_back(v);
        }
      }
    }
    const auto basis = reduce(stacks, 3);
    for (std::size_t q1 = 0; q1 < nx; ++q1) {
      for (std::size_t q2 = 0; q2 < nx; ++q2) {
        for (std::size_t q3 = 0; q3 < nx; ++q3) {
          const std::size_t q[3] = {q1, q2, q3};
          Vec m[3];
          for (int s = 0; s < 3; ++s) {
            const Vec& x1 = X[q[perm[s][0]]];
            const Vec& x2 = X[q[perm[s][1]]];
            const Vec& x3 = X[q[perm[s][2]]];
            m[s] = cyc_sign(q, s) * bilinear(inner_table, nj, inner.dim(), star(j, x1, x2), x3);
          }
          for (const auto& v : basis) {
            ++r.checked;
            Vec sum(inner.dim());
            for (int s = 0; s < 3; ++s) sum.axpy(v[s], m[s]);
            if (!sum.is_zero()) {
              r.fail({{q1, q2, q3}, "(i) fails at x = " + triple_label(j.trace_zero_labels, q1, q2, q3) +
                                        " with a-weights " + v.str()});
            }
          }
        }
      }
    }
    all.merge(r);
  }

  // (ii) sum t_J((x1*x2)x3) D_{[a1,a2],a3} = 0
  {
    Report r{"condition (ii)"};
    std::vector<Vec> stacks;
    for (std::size_t q1 = 0; q1 < nx; ++q1) {
      for (std::size_t q2 = 0; q2 < nx; ++q2) {
        for (std::size_t q3 = 0; q3 < nx; ++q3) {
          const std::size_t q[3] = {q1, q2, q3};
          Vec v(3);
          for (int s = 0; s < 3; ++s) {
            v[s] = cyc_sign(q, s) *
                   j.t(j.mul(star(j, X[q[perm[s][0]]], X[q[perm[s][1]]]), X[q[perm[s][2]]]));
          }
          stacks.push_back(v);
        }
      }
    }
    const auto basis = reduce(stacks, 3);
    for (std::size_t p1 = 0; p1 < na; ++p1) {
      for (std::size_t p2 = 0; p2 < na; ++p2) {
        for (std::size_t p3 = 0; p3 < na; ++p3) {
          const Vec* a[3] = {&A[p1], &A[p2], &A[p3]};
          Mat m[3];
          for (int s = 0; s < 3; ++s) {
            m[s] = inner_derivation(c, c.commutator(*a[perm[s][0]], *a[perm[s][1]]), *a[perm[s][2]]);
          }
          for (const auto& v : basis) {
            ++r.checked;
            Mat sum(nc, nc);
            for (int s = 0; s < 3; ++s) sum += v[s] * m[s];
            if (!sum.is_zero()) {
              r.fail({{p1, p2, p3}, "(ii) fails at a = " + triple_label(c.trace_zero_labels, p1, p2, p3) +
                                        " with x-weights " + v.str()});
            }
          }
        }
      }
    }
    all.merge(r);
  }

  // (iii) sum D_{a1,a2}(a3) t_J(x1x2)x3 + [[a1,a2],a3] (x1*x2)*x3 + 2t(a1a2) a3 d_{x1,x2}(x3) = 0
  {
    Report r{"condition (iii)"};
    std::vector<Vec> stacks;
    for (std::size_t p1 = 0; p1 < na; ++p1) {
      for (std::size_t p2 = 0; p2 < na; ++p2) {
        for (std::size_t p3 = 0; p3 < na; ++p3) {
          const Vec* a[3] = {&A[p1], &A[p2], &A[p3]};
          Vec stack;
          for (int s = 0; s < 3; ++s) {
            const Vec& a1 = *a[perm[s][0]];
            const Vec& a2 = *a[perm[s][1]];
            const Vec& a3 = *a[perm[s][2]];
            Vec k0 = inner_derivation(c, a1, a2) * a3;
            Vec k1 = c.commutator(c.commutator(a1, a2), a3);
            Vec k2 = (Scalar(2) * c.t(c.mul(a1, a2))) * a3;
            stack = Vec::concat(Vec::concat(stack, k0), Vec::concat(k1, k2));
          }
          stacks.push_back(stack);
        }
      }
    }
    const auto basis = reduce(stacks, 9 * nc);
    std::vector<std::vector<Sparse>> abasis;
    for (const auto& v : basis) {
      std::vector<Sparse> parts;
      for (std::size_t i = 0; i < 9; ++i) parts.emplace_back(v.slice(i * nc, nc));
      abasis.push_back(std::move(parts));
    }
    Mat acc(nc, nj);
    for (std::size_t q1 = 0; q1 < nx; ++q1) {
      for (std::size_t q2 = 0; q2 < nx; ++q2) {
        for (std::size_t q3 = 0; q3 < nx; ++q3) {
          const std::size_t q[3] = {q1, q2, q3};
          std::vector<Sparse> xs;
          for (int s = 0; s < 3; ++s) {
            const Vec& x1 = X[q[perm[s][0]]];
            const Vec& x2 = X[q[perm[s][1]]];
            const Vec& x3 = X[q[perm[s][2]]];
            const Scalar e = cyc_sign(q, s);
            xs.emplace_back((e * j.t(j.mul(x1, x2))) * x3);
            xs.emplace_back(e * star(j, star(j, x1, x2), x3));
            xs.emplace_back(e * apply_inner(ja, x1, x2, x3));
          }
          for (const auto& parts : abasis) {
            ++r.checked;
            std::vector<std::pair<std::size_t, std::size_t>> touched;
            for (std::size_t i = 0; i < 9; ++i) {
              for (const auto& [ia, va] : parts[i].entries) {
                for (const auto& [ix, vx] : xs[i].entries) {
                  acc(ia, ix) += va * vx;
                  touched.emplace_back(ia, ix);
                }
              }
            }
            bool zero = true;
            for (const auto& [ia, ix] : touched) {
              if (!acc(ia, ix).is_zero()) zero = false;
              acc(ia, ix) = 0;
            }
            if (!zero) {
              r.fail({{q1, q2, q3}, "(iii) fails at x = " + triple_label(j.trace_zero_labels, q1, q2, q3)});
            }
          }
        }
      }
    }
    all.merge(r);
  }
  return all;
}

SuperAlgebra tits62_variant(const CompositionAlgebra& q, const SuperAlgebra& j, const MapAlgebra& d) {
  const std::size_t na = q.trace_zero.size(), nj = j.dim(), nd = d.dim();
  if (d.space_dim() != nj) throw std::invalid_argument("tits62_variant: D does not act on J");
  const auto table = inner_derivation_table(j);
  std::vector<Vec> dcoords(table.size());
  for (std::size_t p = 0; p < table.size(); ++p) {
    auto cc = d.try_coordinates(table[p]);
    if (!cc) throw std::invalid_argument("tits62_variant: D does not contain every inner derivation");
    dcoords[p] = *cc;
  }
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t x = 0; x < nj; ++x) {
      labels.push_back(wrap(q.trace_zero_labels[p]) + "*" + j.label(x));
      parity.push_back(j.parity(x));
    }
  }
  for (std::size_t k = 0; k < nd; ++k) {
    labels.push_back(d.element(k).label);
    parity.push_back(d.element(k).parity);
  }
  auto ti = [nj](std::size_t p, std::size_t x) { return p * nj + x; };
  const std::size_t off = na * nj;
  SuperAlgebra::Builder b(labels, parity);
  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t pr = 0; pr < na; ++pr) {
      const Vec comm = q.trace_zero.coordinates(q.commutator(q.trace_zero[p], q.trace_zero[pr]));
      const Scalar tab = Scalar(2) * q.t(q.mul(q.trace_zero[p], q.trace_zero[pr]));
      for (std::size_t x = 0; x < nj; ++x) {
        for (std::size_t y = 0; y < nj; ++y) {
          for (const auto& term : j.product(x, y)) {
            for (std::size_t s = 0; s < na; ++s) {
              if (!comm[s].is_zero()) b.add(ti(p, x), ti(pr, y), ti(s, term.index), comm[s] * term.coeff);
            }
          }
          if (tab.is_zero()) continue;
          const Vec& dc = dcoords[x * nj + y];
          for (std::size_t k = 0; k < nd; ++k) {
            if (!dc[k].is_zero()) b.add(ti(p, x), ti(pr, y), off + k, tab * dc[k]);
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < nd; ++k) {
    const auto& g = d.element(k);
    for (std::size_t x = 0; x < nj; ++x) {
      const Vec dx = g.matrix.column(x);
      const Scalar back(-koszul(j.parity(x), g.parity));
      for (std::size_t p = 0; p < na; ++p) {
        for (std::size_t y = 0; y < nj; ++y) {
          if (dx[y].is_zero()) continue;
          b.add(off + k, ti(p, x), ti(p, y), dx[y]);
          b.add(ti(p, x), off + k, ti(p, y), back * dx[y]);
        }
      }
    }
    for (std::size_t m = 0; m < nd; ++m) {
      const Vec br = d.lie().basis_product(k, m);
      for (std::size_t s = 0; s < nd; ++s) {
        if (!br[s].is_zero()) b.add(off + k, off + m, off + s, br[s]);
      }
    }
  }
  b.claims({false, true, false});
  return std::move(b).build();
}

}  // namespace tits
