#include "tits/structurable.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tits {

Vec AlgebraWithInvolution::basis(const std::string& label) const {
  auto i = algebra.index_of(label);
  if (!i) throw std::invalid_argument(name + ": no basis element '" + label + "'");
  return algebra.basis_vector(*i);
}

Vec block_vector(const Scalar& alpha, const Vec& x, const Vec& y, const Scalar& beta) {
  if (x.size() != y.size()) throw std::invalid_argument("block_vector: x and y differ in length");
  Vec v(2 * x.size() + 2);
  v[0] = alpha;
  for (std::size_t i = 0; i < x.size(); ++i) {
    v[1 + i] = x[i];
    v[1 + x.size() + i] = y[i];
  }
  v[2 * x.size() + 1] = beta;
  return v;
}

namespace {

// Layout [alpha | x | y | beta] over an n-dimensional J.
struct BlockLayout {
  std::size_t n;
  std::size_t alpha() const { return 0; }
  std::size_t x(std::size_t i) const { return 1 + i; }
  std::size_t y(std::size_t i) const { return 1 + n + i; }
  std::size_t beta() const { return 2 * n + 1; }
};

SuperAlgebra::Builder block_builder(const SuperAlgebra& j) {
  const std::size_t n = j.dim();
  std::vector<std::string> labels = {"a"};
  std::vector<Parity> par = {Parity::Even};
  for (const char* side : {"x", "y"}) {
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::string(side) + "[" + j.label(i) + "]");
      par.push_back(j.parity(i));
    }
  }
  labels.push_back("b");
  par.push_back(Parity::Even);
  return SuperAlgebra::Builder(std::move(labels), std::move(par));
}

// Adds the part of the block product shared by A(J) and A(A).  `pair(i, k)` is
// the scalar in the corner (3 t_J(b_i b_k) or 3 <b_i|b_k>), `off(i, k)` the
// vector replacing the cross product.
template <class Pair, class Off>
AlgebraWithInvolution block_algebra(std::string name, const SuperAlgebra& j, Pair pair, Off off) {
  const std::size_t n = j.dim();
  const BlockLayout l{n};
  auto b = block_builder(j);
  b.add(l.alpha(), l.alpha(), l.alpha(), 1);
  b.add(l.beta(), l.beta(), l.beta(), 1);
  for (std::size_t i = 0; i < n; ++i) {
    // alpha x' + beta' x ; alpha' y + beta y'
    b.add(l.alpha(), l.x(i), l.x(i), 1).add(l.x(i), l.beta(), l.x(i), 1);
    b.add(l.y(i), l.alpha(), l.y(i), 1).add(l.beta(), l.y(i), l.y(i), 1);
    for (std::size_t k = 0; k < n; ++k) {
      Scalar s = pair(i, k);
      if (!s.is_zero()) {
        b.add(l.x(i), l.y(k), l.alpha(), s);
        b.add(l.y(i), l.x(k), l.beta(), s);
      }
      Vec c = off(i, k);
      for (std::size_t r = 0; r < n; ++r) {
        if (c[r].is_zero()) continue;
        b.add(l.y(i), l.y(k), l.x(r), c[r]);
        b.add(l.x(i), l.x(k), l.y(r), c[r]);
      }
    }
  }
  AlgebraWithInvolution a;
  a.name = std::move(name);
  a.algebra = std::move(b).build();
  const std::size_t d = a.algebra.dim();
  a.involution = Mat::identity(d);
  a.involution(l.alpha(), l.alpha()) = 0;
  a.involution(l.beta(), l.beta()) = 0;
  a.involution(l.alpha(), l.beta()) = 1;
  a.involution(l.beta(), l.alpha()) = 1;
  a.unit = Vec(d);
  a.unit[l.alpha()] = a.unit[l.beta()] = 1;
  return a;
}

}  // namespace

AlgebraWithInvolution a_of_j(const JordanAlgebra& j) {
  const std::size_t n = j.dim();
  return block_algebra(
      "aj:" + j.name, j.algebra,
      [&](std::size_t i, std::size_t k) { return Scalar(3) * j.t(j.algebra.basis_product(i, k)); },
      [&](std::size_t i, std::size_t k) { return cross(j, Vec::unit(n, i), Vec::unit(n, k)); });
}

AlgebraWithInvolution a_of_cubic(const CubicAdmissible& a) {
  return block_algebra(
      "a:" + a.name, a.algebra, [&](std::size_t i, std::size_t k) { return Scalar(3) * a.form(i, k); },
      [&](std::size_t i, std::size_t k) { return Scalar(2) * a.algebra.basis_product(i, k); });
}

AlgebraWithInvolution tensor_product(const CompositionAlgebra& c, const CompositionAlgebra& chat) {
  const std::size_t m = c.dim(), n = chat.dim();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t x = 0; x < n; ++x) labels.push_back(c.algebra.label(a) + "*" + chat.algebra.label(x));
  }
  SuperAlgebra::Builder b(labels);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t bb = 0; bb < m; ++bb) {
        for (std::size_t y = 0; y < n; ++y) {
          for (const auto& s : c.algebra.product(a, bb)) {
            for (const auto& t : chat.algebra.product(x, y)) {
              b.add(a * n + x, bb * n + y, s.index * n + t.index, s.coeff * t.coeff);
            }
          }
        }
      }
    }
  }
  AlgebraWithInvolution out;
  out.name = "tensor:" + c.name + ":" + chat.name;
  out.algebra = std::move(b).build();
  out.involution = Mat(m * n, m * n);
  out.unit = Vec(m * n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      out.unit[a * n + x] = c.unit[a] * chat.unit[x];
      for (std::size_t bb = 0; bb < m; ++bb) {
        for (std::size_t y = 0; y < n; ++y) {
          out.involution(bb * n + y, a * n + x) = c.conjugation(bb, a) * chat.conjugation(y, x);
        }
      }
    }
  }
  return out;
}

Report involution_report(const AlgebraWithInvolution& a) {
  Report r{"involution " + a.name};
  const std::size_t n = a.dim();
  const auto& alg = a.algebra;
  ++r.checked;
  if (a.involution * a.involution != Mat::identity(n)) r.fail({{}, "sigma^2 is not the identity"});
  ++r.checked;
  if (a.bar(a.unit) != a.unit) r.fail({{}, "sigma(1) != 1"});
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = a.involution.column(i);
    ++r.checked;
    auto p = alg.parity_of(img[i]);
    if (p && *p != alg.parity(i) && !img[i].is_zero()) r.fail({{i}, "sigma changes parity"});
    if (!p) r.fail({{i}, "sigma(b_i) is not homogeneous"});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked;
      Vec lhs = a.bar(alg.basis_product(i, j));
      Vec rhs = Scalar(koszul(alg.parity(i), alg.parity(j))) * alg.multiply(img[j], img[i]);
      if (lhs != rhs) r.fail({{i, j}, "sigma(xy) = " + format_vector(alg, lhs) + " but sign*sigma(y)sigma(x) = " +
                                          format_vector(alg, rhs)});
    }
  }
  return r;
}

std::vector<Vec> hermitian_part(const AlgebraWithInvolution& a) {
  return kernel_basis(a.involution - Mat::identity(a.dim()));
}

namespace {

// Sparse vectors and a dense scratch accumulator over a number type T
// (__int128 for integer tables, Scalar otherwise).
template <class T>
using Sparse = std::vector<std::pair<std::uint32_t, T>>;

inline bool is_zero_value(__int128 v) { return v == 0; }
inline bool is_zero_value(const Scalar& v) { return v.is_zero(); }

template <class T>
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : value_(n), mark_(n, 0) {}

  void add(std::uint32_t k, const T& c) {
    if (!mark_[k]) {
      mark_[k] = 1;
      touched_.push_back(k);
      value_[k] = c;
    } else {
      value_[k] += c;
    }
  }
  void add(const Sparse<T>& v, const T& c) {
    for (const auto& [k, x] : v) add(k, x * c);
  }
  Sparse<T> take() {
    Sparse<T> out;
    std::sort(touched_.begin(), touched_.end());
    for (auto k : touched_) {
      if (!is_zero_value(value_[k])) out.emplace_back(k, value_[k]);
      mark_[k] = 0;
      value_[k] = T{};
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<T> value_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

template <class T>
struct Tables {
  std::size_t n = 0;
  std::vector<Sparse<T>> prod;   // b_i b_j
  std::vector<Sparse<T>> sigma;  // sigma(b_j)
  Sparse<T> unit;
  std::vector<int> parity;
};

template <class T>
Report structurable_check(const Tables<T>& t, const SuperAlgebra& alg, std::string name) {
  Report r{"structurable identity " + name};
  const std::size_t n = t.n;
  Accumulator<T> acc(n);
  Accumulator<T> macc(n);  // private to mul
  const T one = T{1};
  auto sign = [](int e) { return (e & 1) ? T{-1} : T{1}; };
  auto mul = [&](const Sparse<T>& x, const Sparse<T>& y) {
    for (const auto& [i, a] : x) {
      for (const auto& [j, b] : y) macc.add(t.prod[i * n + j], a * b);
    }
    return macc.take();
  };
  auto e = [&](std::size_t i) { return Sparse<T>{{static_cast<std::uint32_t>(i), one}}; };
  auto par = [&](std::size_t i) { return t.parity[i]; };

  // A[x][y] = x sigma(y)
  std::vector<Sparse<T>> A(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) A[x * n + y] = mul(e(x), t.sigma[y]);
  }
  // W[x][y][z] = V_{x,y} z
  std::vector<Sparse<T>> W(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        acc.add(mul(A[x * n + y], e(z)), one);
        acc.add(mul(A[z * n + y], e(x)), sign(par(x) * par(y) + par(x) * par(z) + par(y) * par(z)));
        acc.add(mul(A[z * n + x], e(y)), -sign(par(z) * (par(x) + par(y))));
        W[(x * n + y) * n + z] = acc.take();
      }
    }
  }
  // T[u][z] = V_{u,1} z, written with the unit vector so that scaling stays homogeneous.
  const Sparse<T> sigma_unit = [&] {
    for (const auto& [k, c] : t.unit) acc.add(t.sigma[k], c);
    return acc.take();
  }();
  std::vector<Sparse<T>> Tm(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const Sparse<T> us = mul(e(u), sigma_unit);
    for (std::size_t z = 0; z < n; ++z) {
      const T s = sign(par(u) * par(z));
      acc.add(mul(us, e(z)), one);
      acc.add(mul(mul(e(z), sigma_unit), e(u)), s);
      acc.add(mul(A[z * n + u], t.unit), -s);
      Tm[u * n + z] = acc.take();
    }
  }
  auto apply_T = [&](std::size_t u, const Sparse<T>& v, const T& c) {
    for (const auto& [k, a] : v) acc.add(Tm[u * n + k], a * c);
  };
  auto W_at = [&](std::size_t x, std::size_t y, std::size_t z) -> const Sparse<T>& {
    return W[(x * n + y) * n + z];
  };

  for (std::size_t u = 0; u < n; ++u) {
    // T_{sigma u} y for every y
    std::vector<Sparse<T>> Ts(n);
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& [m, c] : t.sigma[u]) acc.add(Tm[m * n + y], c);
      Ts[y] = acc.take();
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const T s_comm = sign(par(u) * (par(x) + par(y)));
        const T s_ux = sign(par(u) * par(x));
        for (std::size_t z = 0; z < n; ++z) {
          ++r.checked;
          // T_u V_{x,y} z - sign V_{x,y} T_u z - V_{T_u x, y} z + sign V_{x, T_{sigma u} y} z
          apply_T(u, W_at(x, y, z), one);
          for (const auto& [k, c] : Tm[u * n + z]) acc.add(W_at(x, y, k), -s_comm * c);
          for (const auto& [k, c] : Tm[u * n + x]) acc.add(W_at(k, y, z), -c);
          for (const auto& [k, c] : Ts[y]) acc.add(W_at(x, k, z), s_ux * c);
          Sparse<T> res = acc.take();
          if (!res.empty()) {
            r.fail({{u, x, y, z}, "residual at (u,x,y,z) = (" + alg.label(u) + "," + alg.label(x) + "," +
                                      alg.label(y) + "," + alg.label(z) + ")"});
          }
        }
      }
    }
  }
  return r;
}

template <class T, class Convert>
Tables<T> make_tables(const AlgebraWithInvolution& a, Convert conv) {
  Tables<T> t;
  const std::size_t n = a.dim();
  t.n = n;
  t.prod.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    t.parity.push_back(bit(a.algebra.parity(i)));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& term : a.algebra.product(i, j)) {
        t.prod[i * n + j].emplace_back(static_cast<std::uint32_t>(term.index), conv(term.coeff, true));
      }
    }
  }
  t.sigma.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!a.involution(i, j).is_zero()) t.sigma[j].emplace_back(static_cast<std::uint32_t>(i), conv(a.involution(i, j), false));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.unit[i].is_zero()) t.unit.emplace_back(static_cast<std::uint32_t>(i), conv(a.unit[i], false));
  }
  return t;
}

// Integer tables after scaling the product by the common denominator.  The
// identity has degree four in the product, one in the unit and zero or one
// in sigma per term pair, so sigma and the unit must already be integral.
std::optional<Tables<__int128>> integer_tables(const AlgebraWithInvolution& a) {
  constexpr long kLimit = 1L << 20;
  mpz_class lcm = 1;
  const std::size_t n = a.dim();
  for (std::size_t p = 0; p < n * n; ++p) {
    for (const auto& term : a.algebra.product(p / n, p % n)) {
      if (term.coeff.is_modular()) return std::nullopt;
      mpz_class d = term.coeff.denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
  }
  bool ok = true;
  auto conv = [&](const Scalar& s, bool scale) -> __int128 {
    if (s.is_modular()) {
      ok = false;
      return 0;
    }
    mpq_class q = s.to_mpq();
    if (scale) q *= lcm;
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
      ok = false;
      return 0;
    }
    long v = q.get_num().get_si();
    if (v >= kLimit || v <= -kLimit) ok = false;
    return v;
  };
  auto t = make_tables<__int128>(a, conv);
  if (!ok) return std::nullopt;
  return t;
}

}  // namespace

Report check_structurable(const AlgebraWithInvolution& a) {
  if (auto t = integer_tables(a)) return structurable_check(*t, a.algebra, a.name);
  auto t = make_tables<Scalar>(a, [](const Scalar& s, bool) { return s; });
  return structurable_check(t, a.algebra, a.name);
}

}  // namespace tits
