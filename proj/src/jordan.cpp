#include "tits/jordan.hpp"

#include <random>
#include <stdexcept>

namespace tits {

namespace {

std::pair<Vec, Vec> split_parity(const SuperAlgebra& a, const Vec& v) {
  Vec even(v.size()), odd(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    (a.parity(i) == Parity::Even ? even : odd)[i] = v[i];
  }
  return {even, odd};
}

}  // namespace

Vec JordanAlgebra::basis(const std::string& label) const {
  auto i = algebra.index_of(label);
  if (!i) throw std::invalid_argument("JordanAlgebra " + name + ": no basis element '" + label + "'");
  return algebra.basis_vector(*i);
}

Vec JordanAlgebra::e(std::size_t i) const {
  if (kind != JordanKind::H3) throw std::logic_error("e(i) is only defined on H3");
  return algebra.basis_vector(i % 3);
}

Vec JordanAlgebra::iota(std::size_t i, const Vec& x) const {
  if (kind != JordanKind::H3 || !hat) throw std::logic_error("iota(i, x) is only defined on H3");
  const std::size_t m = hat->dim();
  if (x.size() != m) throw std::invalid_argument("iota: vector is not in the coordinate algebra");
  Vec v(dim());
  for (std::size_t p = 0; p < m; ++p) v[3 + (i % 3) * m + p] = x[p];
  return v;
}

JordanAlgebra make_jordan(std::string name, SuperAlgebra algebra, Vec unit, Vec trace, JordanKind kind) {
  JordanAlgebra j;
  j.name = std::move(name);
  j.algebra = std::move(algebra);
  j.unit = std::move(unit);
  j.trace = std::move(trace);
  j.kind = kind;
  const std::size_t n = j.algebra.dim();
  if (j.unit.size() != n || j.trace.size() != n) {
    throw std::invalid_argument("make_jordan: unit or trace has the wrong length");
  }
  // Homogeneous basis of J^0: odd basis vectors are trace-free, the even part is a kernel.
  std::vector<Vec> kernel;
  for (const auto& k : kernel_basis(Mat::from_rows({j.trace}, n))) {
    auto [even, odd] = split_parity(j.algebra, k);
    if (!even.is_zero()) kernel.push_back(even);
    if (!odd.is_zero()) kernel.push_back(odd);
  }
  SpanBuilder span(n);
  std::vector<Vec> basis;
  for (auto& k : kernel) {
    if (span.add(k)) basis.push_back(k);
  }
  for (const auto& b : basis) j.trace_zero_labels.push_back(format_vector(j.algebra, b));
  j.trace_zero = SubspaceBasis(basis, n);
  return j;
}

JordanAlgebra h3(const CompositionAlgebra& chat) {
  const std::size_t m = chat.dim();
  std::vector<std::string> labels = {"e0", "e1", "e2"};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t p = 0; p < m; ++p) {
      labels.push_back("i" + std::to_string(i) + "[" + chat.algebra.label(p) + "]");
    }
  }
  const std::size_t n = labels.size();
  auto io = [m](std::size_t i, std::size_t p) { return 3 + (i % 3) * m + p; };
  const Scalar half = Scalar::fraction(1, 2);

  SuperAlgebra::Builder b(labels);
  for (std::size_t i = 0; i < 3; ++i) {
    b.add(i, i, i, 1);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      for (std::size_t p = 0; p < m; ++p) {
        b.add(j, io(i, p), io(i, p), half).add(io(i, p), j, io(i, p), half);
      }
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t p = 0; p < m; ++p) {
      const Vec x = chat.algebra.basis_vector(p);
      for (std::size_t q = 0; q < m; ++q) {
        const Vec y = chat.algebra.basis_vector(q);
        // iota_i(x) iota_{i+1}(y) = 1/2 iota_{i+2}(conj(xy)), both orders
        Vec c = chat.conj(chat.mul(x, y));
        for (std::size_t r = 0; r < m; ++r) {
          if (c[r].is_zero()) continue;
          b.add(io(i, p), io(i + 1, q), io(i + 2, r), half * c[r]);
          b.add(io(i + 1, q), io(i, p), io(i + 2, r), half * c[r]);
        }
        // iota_i(x) iota_i(y) = 1/2 t(x conj(y)) (e_{i+1} + e_{i+2})
        Scalar s = half * chat.t(chat.mul(x, chat.conj(y)));
        if (!s.is_zero()) {
          b.add(io(i, p), io(i, q), (i + 1) % 3, s).add(io(i, p), io(i, q), (i + 2) % 3, s);
        }
      }
    }
  }
  b.claims({false, false, true});
  Vec unit(n), trace(n);
  for (std::size_t i = 0; i < 3; ++i) {
    unit[i] = 1;
    trace[i] = Scalar::fraction(1, 3);
  }
  JordanAlgebra j = make_jordan("h3:" + chat.name, std::move(b).build(), std::move(unit), std::move(trace),
                                JordanKind::H3);
  j.hat = std::make_shared<const CompositionAlgebra>(chat);
  return j;
}

JordanAlgebra jordan_super_jvtheta() {
  SuperAlgebra::Builder b({"1", "u", "v"}, {Parity::Even, Parity::Odd, Parity::Odd});
  for (std::size_t i = 0; i < 3; ++i) {
    b.add(0, i, i, 1);
    if (i) b.add(i, 0, i, 1);
  }
  b.add(1, 2, 0, 1).add(2, 1, 0, -1);
  b.claims({false, false, true});
  return make_jordan("jvtheta", std::move(b).build(), Vec{1, 0, 0}, Vec{1, 0, 0}, JordanKind::JVTheta);
}

SuperAlgebra dt_superalgebra(const Scalar& t) {
  if (t.is_zero()) throw std::domain_error("D_t requires t != 0");
  SuperAlgebra::Builder b({"e1", "e2", "x", "y"}, {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd});
  const Scalar half = Scalar::fraction(1, 2);
  for (std::size_t e = 0; e < 2; ++e) {
    b.add(e, e, e, 1);
    for (std::size_t o = 2; o < 4; ++o) b.add(e, o, o, half).add(o, e, o, half);
  }
  // xy = e1 + t e2 = -yx
  b.add(2, 3, 0, 1).add(2, 3, 1, t);
  b.add(3, 2, 0, -1).add(3, 2, 1, -t);
  b.claims({false, false, true});
  return std::move(b).build();
}

JordanAlgebra jordan_super_dt(const Scalar& t) {
  SuperAlgebra a = dt_superalgebra(t);
  Vec unit{1, 1, 0, 0};
  auto traces = find_normalized_traces(a, unit);
  if (!traces) throw std::domain_error("D_t has no normalized trace for t = " + t.str());
  if (!traces->directions.empty()) throw std::domain_error("D_t normalized trace is not unique");
  const bool two = t == Scalar(2);
  return make_jordan(two ? "d2" : "dt:" + t.str(), std::move(a), std::move(unit),
                     std::move(traces->point), JordanKind::Dt);
}

JordanAlgebra jordan_diagonal(std::size_t n) {
  if (n == 0) throw std::invalid_argument("jordan_diagonal: n must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i));
  SuperAlgebra::Builder b(labels);
  for (std::size_t i = 0; i < n; ++i) b.add(i, i, i, 1);
  b.claims({true, false, true});
  Vec unit(n), trace(n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    trace[i] = Scalar::fraction(1, static_cast<long long>(n));
  }
  return make_jordan("diag:" + std::to_string(n), std::move(b).build(), std::move(unit), std::move(trace),
                     JordanKind::Diagonal);
}

JordanAlgebra jordan_by_name(const std::string& name) {
  if (name.rfind("h3:", 0) == 0) return h3(composition_by_name(name.substr(3)));
  if (name == "jvtheta") return jordan_super_jvtheta();
  if (name == "d2") return jordan_super_dt(Scalar(2));
  if (name.rfind("dt:", 0) == 0) return jordan_super_dt(Scalar::parse(name.substr(3)));
  if (name.rfind("diag:", 0) == 0) return jordan_diagonal(std::stoul(name.substr(5)));
  if (name == "field") {
    JordanAlgebra j = jordan_diagonal(1);
    j.name = "field";
    return j;
  }
  throw std::invalid_argument("unknown Jordan algebra '" + name + "'");
}

std::optional<TraceSolution> find_normalized_traces(const SuperAlgebra& a, const Vec& unit) {
  const std::size_t n = a.dim();
  if (unit.size() != n) throw std::invalid_argument("find_normalized_traces: unit has the wrong length");
  SpanBuilder span(n);
  std::vector<Vec> rows;
  auto add = [&](const Vec& r) {
    if (!r.is_zero() && span.add(r)) rows.push_back(r);
  };
  // A trace is an even functional.
  for (std::size_t i = 0; i < n; ++i) {
    if (a.parity(i) == Parity::Odd) add(Vec::unit(n, i));
  }
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
  }
  for (std::size_t i = 0; i < n && rows.size() < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec r = a.multiply(prod[i * n + j], a.basis_vector(k));
        r -= a.multiply(a.basis_vector(i), prod[j * n + k]);
        add(r);
      }
    }
  }
  rows.push_back(unit);
  Mat system = Mat::from_rows(rows, n);
  Vec rhs(rows.size());
  rhs[rows.size() - 1] = 1;
  auto point = solve(system, rhs);
  if (!point) return std::nullopt;
  return TraceSolution{*point, kernel_basis(system)};
}

Vec star(const JordanAlgebra& j, const Vec& x, const Vec& y) {
  if (!j.t(x).is_zero() || !j.t(y).is_zero()) throw std::invalid_argument("star: arguments must be trace-free");
  Vec xy = j.mul(x, y);
  Vec out = xy;
  out.axpy(-j.t(xy), j.unit);
  return out;
}

LinearMap inner_jordan_derivation(const JordanAlgebra& j, const Vec& x, const Vec& y) {
  const auto& a = j.algebra;
  auto [x0, x1] = split_parity(a, x);
  auto [y0, y1] = split_parity(a, y);
  const Vec* xs[2] = {&x0, &x1};
  const Vec* ys[2] = {&y0, &y1};
  Mat total(j.dim(), j.dim());
  bool parts[2] = {false, false};
  for (int px = 0; px < 2; ++px) {
    if (xs[px]->is_zero()) continue;
    for (int py = 0; py < 2; ++py) {
      if (ys[py]->is_zero()) continue;
      Parity pa = static_cast<Parity>(px), pb = static_cast<Parity>(py);
      Mat d = supercommutator(a.left_multiplication(*xs[px]), pa, a.left_multiplication(*ys[py]), pb);
      if (!d.is_zero()) parts[bit(pa + pb)] = true;
      total += d;
    }
  }
  return {std::move(total), (parts[1] && !parts[0]) ? Parity::Odd : Parity::Even};
}

Vec cross(const JordanAlgebra& j, const Vec& x, const Vec& y) {
  const Scalar tx = j.t(x), ty = j.t(y);
  const Vec xy = j.mul(x, y);
  Vec out = Scalar(2) * xy;
  out.axpy(Scalar(-3) * tx, y);
  out.axpy(Scalar(-3) * ty, x);
  out.axpy(Scalar(9) * tx * ty - Scalar(3) * j.t(xy), j.unit);
  return out;
}

std::vector<Mat> inner_derivation_table(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Mat> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = a.left_multiplication(a.basis_vector(i));
  std::vector<Mat> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      table[i * n + k] = supercommutator(left[i], a.parity(i), left[k], a.parity(k));
    }
  }
  return table;
}

MapAlgebra inner_derivations(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  const auto table = inner_derivation_table(a);
  std::vector<MapGenerator> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      const Mat& d = table[i * n + k];
      if (d.is_zero()) continue;
      gens.push_back({d, a.parity(i) + a.parity(k), {i, k},
                      "d[" + a.label(i) + "," + a.label(k) + "]"});
    }
  }
  return MapAlgebra(gens, n);
}

Report trace_report(const SuperAlgebra& a, const Vec& unit, const Vec& trace) {
  Report r{"normalized trace"};
  const std::size_t n = a.dim();
  ++r.checked;
  if (dot(trace, unit) != Scalar(1)) r.fail({{}, "t(1) = " + dot(trace, unit).str()});
  for (std::size_t i = 0; i < n; ++i) {
    ++r.checked;
    if (a.parity(i) == Parity::Odd && !trace[i].is_zero()) r.fail({{i}, "trace is nonzero on an odd element"});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checked;
        Scalar lhs = dot(trace, a.multiply(ij, a.basis_vector(k)));
        Scalar rhs = dot(trace, a.multiply(a.basis_vector(i), a.basis_product(j, k)));
        if (lhs != rhs) r.fail({{i, j, k}, "t((xy)z) = " + lhs.str() + " but t(x(yz)) = " + rhs.str()});
      }
    }
  }
  return r;
}

Report jordan_report(const JordanAlgebra& j) {
  Report r{"Jordan algebra " + j.name};
  r.merge(check_supercommutativity(j.algebra));
  r.merge(check_jordan_identity(j.algebra));
  r.merge(trace_report(j.algebra, j.unit, j.trace));
  for (std::size_t i = 0; i < j.dim(); ++i) {
    ++r.checked;
    const Vec b = j.algebra.basis_vector(i);
    if (j.mul(j.unit, b) != b || j.mul(b, j.unit) != b) r.fail({{i}, "unit law fails"});
  }
  return r;
}

Report CubicAdmissible::check(unsigned samples, unsigned seed) const {
  Report r{"cubic admissible " + name};
  const std::size_t n = algebra.dim();
  r.merge(check_supercommutativity(algebra));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked;
      if (form(i, j) != form(j, i) * Scalar(koszul(algebra.parity(i), algebra.parity(j)))) {
        r.fail({{i, j}, "form is not supersymmetric"});
      }
      const Vec ij = algebra.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checked;
        Scalar lhs = pair(ij, algebra.basis_vector(k));
        Scalar rhs = pair(algebra.basis_vector(i), algebra.basis_product(j, k));
        if (lhs != rhs) r.fail({{i, j, k}, "<xy|z> = " + lhs.str() + " but <x|yz> = " + rhs.str()});
      }
    }
  }
  std::mt19937 rng(seed);
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(algebra.basis_vector(i));
  for (unsigned s = 0; s < samples; ++s) probes.push_back(random_vector(n, rng));
  for (const auto& x : probes) {
    ++r.checked;
    Vec x2 = algebra.multiply(x, x);
    Vec lhs = algebra.multiply(x2, x2);
    Vec rhs = cubic_norm(x) * x;
    if (lhs != rhs) r.fail({{}, "(x^2)^2 != N(x) x at x = " + format_vector(algebra, x)});
  }
  return r;
}

CubicAdmissible kaplansky() {
  SuperAlgebra::Builder b({"e", "x", "y"}, {Parity::Even, Parity::Odd, Parity::Odd});
  const Scalar half = Scalar::fraction(1, 2);
  b.add(0, 0, 0, 1);
  for (std::size_t o = 1; o < 3; ++o) b.add(0, o, o, half).add(o, 0, o, half);
  b.add(1, 2, 0, 1).add(2, 1, 0, -1);
  b.claims({false, false, false});
  Mat form(3, 3);
  form(0, 0) = 1;
  form(1, 2) = 2;
  form(2, 1) = -2;
  return {"kaplansky", std::move(b).build(), std::move(form)};
}

}  // namespace tits
