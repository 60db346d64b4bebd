#include "tits/superalgebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tits {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}


}  // namespace

// ---------------------------------------------------------------- Builder

SuperAlgebra::Builder::Builder(std::vector<std::string> labels, std::vector<Parity> parity)
    : labels_(std::move(labels)), parity_(std::move(parity)) {
  require(labels_.size() == parity_.size(), "SuperAlgebra: labels and parity differ in length");
  table_.resize(labels_.size() * labels_.size());
}

SuperAlgebra::Builder::Builder(std::vector<std::string> labels)
    : Builder(labels, std::vector<Parity>(labels.size(), Parity::Even)) {}

SuperAlgebra::Builder& SuperAlgebra::Builder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  const std::size_t n = dim();
  require(i < n && j < n && k < n, "SuperAlgebra: basis index out of range");
  if (c.is_zero()) return *this;
  auto& terms = table_[i * n + j];
  for (auto& t : terms) {
    if (t.index == k) {
      t.coeff += c;
      return *this;
    }
  }
  terms.push_back({k, c});
  return *this;
}

SuperAlgebra::Builder& SuperAlgebra::Builder::add_product(std::size_t i, std::size_t j, const Vec& v) {
  require(v.size() == dim(), "SuperAlgebra: product vector has wrong length");
  for (std::size_t k = 0; k < v.size(); ++k) add(i, j, k, v[k]);
  return *this;
}

SuperAlgebra::Builder& SuperAlgebra::Builder::claims(Claims c) {
  claims_ = c;
  return *this;
}

SuperAlgebra SuperAlgebra::Builder::build() && {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& terms = table_[i * n + j];
      terms.erase(std::remove_if(terms.begin(), terms.end(), [](const Term& t) { return t.coeff.is_zero(); }),
                  terms.end());
      std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
      for (const auto& t : terms) {
        if (parity_[t.index] != parity_[i] + parity_[j]) {
          throw std::invalid_argument("SuperAlgebra: product " + labels_[i] + "*" + labels_[j] +
                                      " has a component on " + labels_[t.index] + " of the wrong parity");
        }
      }
    }
  }
  SuperAlgebra a;
  a.labels_ = std::move(labels_);
  a.parity_ = std::move(parity_);
  a.table_ = std::move(table_);
  a.claims_ = claims_;
  return a;
}

// ---------------------------------------------------------------- SuperAlgebra

std::size_t SuperAlgebra::even_dim() const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), Parity::Even));
}

std::optional<std::size_t> SuperAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t SuperAlgebra::nonzero_constants() const {
  std::size_t n = 0;
  for (const auto& t : table_) n += t.size();
  return n;
}

Vec SuperAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v(dim());
  for (const auto& t : product(i, j)) v[t.index] = t.coeff;
  return v;
}

Vec SuperAlgebra::multiply(const Vec& x, const Vec& y) const {
  require(x.size() == dim() && y.size() == dim(), "multiply: dimension mismatch");
  Vec out(dim());
  std::vector<std::size_t> ys;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!y[j].is_zero()) ys.push_back(j);
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j : ys) {
      const auto& terms = product(i, j);
      if (terms.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Mat SuperAlgebra::left_multiplication(const Vec& x) const {
  Mat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(x, basis_vector(j)));
  return m;
}

Mat SuperAlgebra::right_multiplication(const Vec& x) const {
  Mat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(basis_vector(j), x));
  return m;
}

std::optional<Parity> SuperAlgebra::parity_of(const Vec& v) const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    (parity_[i] == Parity::Even ? even : odd) = true;
  }
  if (even && odd) return std::nullopt;
  return odd ? Parity::Odd : Parity::Even;
}

SuperAlgebra SuperAlgebra::reduced_mod(std::int64_t prime) const {
  Builder b(labels_, parity_);
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : product(i, j)) b.add(i, j, t.index, t.coeff.reduce_mod(prime));
    }
  }
  b.claims(claims_);
  return std::move(b).build();
}

SuperAlgebra SuperAlgebra::scaled(const Scalar& s) const {
  SuperAlgebra a = *this;
  for (auto& terms : a.table_) {
    for (auto& t : terms) t.coeff *= s;
  }
  return a;
}

SuperAlgebra SuperAlgebra::change_basis(const Mat& p, std::vector<std::string> labels) const {
  require(p.rows() == dim() && p.cols() == dim(), "change_basis: matrix must be square of size dim");
  require(labels.size() == dim(), "change_basis: label count mismatch");
  auto inv = inverse(p);
  require(inv.has_value(), "change_basis: matrix is singular");
  std::vector<Vec> cols;
  std::vector<Parity> par;
  for (std::size_t c = 0; c < dim(); ++c) {
    cols.push_back(p.column(c));
    auto pc = parity_of(cols.back());
    require(pc.has_value(), "change_basis: basis vector is not homogeneous");
    par.push_back(*pc);
  }
  Builder b(std::move(labels), std::move(par));
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) b.add_product(i, j, *inv * multiply(cols[i], cols[j]));
  }
  b.claims(claims_);
  return std::move(b).build();
}

SuperAlgebra SuperAlgebra::subalgebra(const std::vector<Vec>& basis, std::vector<std::string> labels) const {
  require(labels.size() == basis.size(), "subalgebra: label count mismatch");
  SubspaceBasis sb(basis, dim());
  std::vector<Parity> par;
  for (const auto& v : basis) {
    auto pv = parity_of(v);
    require(pv.has_value(), "subalgebra: basis vector is not homogeneous");
    par.push_back(*pv);
  }
  Builder b(std::move(labels), std::move(par));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto c = sb.try_coordinates(multiply(basis[i], basis[j]));
      require(c.has_value(), "subalgebra: span is not closed under the product");
      b.add_product(i, j, *c);
    }
  }
  b.claims(claims_);
  return std::move(b).build();
}

nlohmann::json SuperAlgebra::to_json() const {
  nlohmann::json j;
  j["basis"] = labels_;
  std::vector<int> par;
  for (auto p : parity_) par.push_back(bit(p));
  j["parity"] = par;
  nlohmann::json sc = nlohmann::json::array();
  std::int64_t modulus = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t k = 0; k < dim(); ++k) {
      for (const auto& t : product(i, k)) {
        if (t.coeff.is_modular()) {
          modulus = t.coeff.modulus();
          sc.push_back({i, k, t.index, std::to_string(t.coeff.residue())});
        } else {
          sc.push_back({i, k, t.index, t.coeff.str()});
        }
      }
    }
  }
  j["sc"] = sc;
  if (modulus != 0) j["modulus"] = modulus;
  return j;
}

SuperAlgebra SuperAlgebra::from_json(const nlohmann::json& j) {
  auto labels = j.at("basis").get<std::vector<std::string>>();
  std::vector<Parity> par;
  if (j.contains("parity")) {
    for (int p : j.at("parity").get<std::vector<int>>()) par.push_back(p ? Parity::Odd : Parity::Even);
  } else {
    par.assign(labels.size(), Parity::Even);
  }
  std::int64_t modulus = j.value("modulus", std::int64_t{0});
  Builder b(std::move(labels), std::move(par));
  for (const auto& e : j.at("sc")) {
    Scalar c = Scalar::parse(e.at(3).get<std::string>());
    if (modulus != 0) c = c.reduce_mod(modulus);
    b.add(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>(), c);
  }
  return std::move(b).build();
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.labels_ != b.labels_ || a.parity_ != b.parity_) return false;
  for (std::size_t p = 0; p < a.table_.size(); ++p) {
    const auto& x = a.table_[p];
    const auto& y = b.table_[p];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
    }
  }
  return true;
}

std::string format_vector(const SuperAlgebra& a, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar c = v[i];
    const bool negative = !c.is_modular() && c.sign() < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (!c.is_one()) os << c << " ";
    os << a.label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- Report

void Report::fail(Witness w) {
  passed = false;
  ++failure_count;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

void Report::merge(const Report& other) {
  checked += other.checked;
  failure_count += other.failure_count;
  if (!other.passed) passed = false;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  }
}

std::string Report::summary() const {
  std::ostringstream os;
  os << check << ": " << (passed ? "pass" : "FAIL") << " (" << checked << " checked";
  if (!passed) os << ", " << failure_count << " failing";
  os << ")";
  for (const auto& w : witnesses) {
    os << "\n  at (";
    for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
    os << "): " << w.detail;
  }
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["passed"] = passed;
  j["checked"] = checked;
  j["failures"] = failure_count;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : witnesses) ws.push_back({{"indices", w.indices}, {"detail", w.detail}});
  j["witnesses"] = ws;
  return j;
}

std::pair<int, int> Grading::add(std::pair<int, int> a, std::pair<int, int> b) const {
  if (group == Group::Z3) return {(a.first + b.first) % 3, 0};
  return {(a.first + b.first) % 2, (a.second + b.second) % 2};
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MAGMA_TITS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// ---------------------------------------------------------------- checks

Report check_super_anticommutativity(const SuperAlgebra& a) {
  Report r{"super-anticommutativity"};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++r.checked;
      Vec x = a.basis_product(i, j);
      Vec y = a.basis_product(j, i);
      Scalar s(koszul(a.parity(i), a.parity(j)));
      Vec residual = x + s * y;
      if (!residual.is_zero()) {
        r.fail({{i, j}, "[" + a.label(i) + "," + a.label(j) + "] = " + format_vector(a, x) + " but [" +
                            a.label(j) + "," + a.label(i) + "] = " + format_vector(a, y)});
      }
    }
  }
  return r;
}

namespace {

// Structure constants as small integers after clearing denominators, or
// residues mod p.  The Jacobi identity is homogeneous of degree two in the
// constants, so scaling does not change which triples fail.
struct IntTable {
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
  std::int64_t modulus = 0;
  mpq_class scale = 1;  // original = integer / scale
};

std::optional<IntTable> integer_table(const SuperAlgebra& a) {
  IntTable t;
  const std::size_t n = a.dim();
  t.rows.resize(n * n);
  constexpr std::int64_t kLimit = std::int64_t{1} << 31;
  mpz_class lcm = 1;
  bool modular = false;
  for (std::size_t p = 0; p < n * n; ++p) {
    for (const auto& term : a.product(p / n, p % n)) {
      if (term.coeff.is_modular()) {
        modular = true;
        t.modulus = term.coeff.modulus();
      } else {
        mpz_class d = term.coeff.denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
      }
    }
  }
  if (modular && t.modulus >= kLimit) return std::nullopt;
  t.scale = mpq_class(lcm);
  for (std::size_t p = 0; p < n * n; ++p) {
    for (const auto& term : a.product(p / n, p % n)) {
      std::int64_t v;
      if (modular) {
        v = term.coeff.reduce_mod(t.modulus).residue();
      } else {
        mpq_class q = term.coeff.to_mpq() * t.scale;
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
        v = q.get_num().get_si();
        if (v >= kLimit || v <= -kLimit) return std::nullopt;
      }
      t.rows[p].emplace_back(static_cast<std::uint32_t>(term.index), v);
    }
  }
  return t;
}

Scalar residual_value(const IntTable& t, __int128 v) {
  if (t.modulus != 0) {
    __int128 r = v % t.modulus;
    if (r < 0) r += t.modulus;
    return Scalar::modular(static_cast<std::int64_t>(r), t.modulus);
  }
  // |v| < 2^127; split to stay exact.
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi, lo;
  mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
  mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class z = (hi << 64) + lo;
  if (neg) z = -z;
  return Scalar::from_mpq(mpq_class(z) / (t.scale * t.scale));
}

std::string jacobi_label(const SuperAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  return "Jacobi(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ") = ";
}

void jacobi_worker_int(const SuperAlgebra& a, const IntTable& t, unsigned worker, unsigned workers, Report& r) {
  const std::size_t n = a.dim();
  std::vector<__int128> acc(n, 0);
  std::vector<std::uint32_t> touched;
  std::vector<char> mark(n, 0);
  auto bump = [&](std::uint32_t l, __int128 v) {
    if (!mark[l]) {
      mark[l] = 1;
      touched.push_back(l);
    }
    acc[l] += v;
  };
  const auto& rows = t.rows;
  for (std::size_t i = worker; i < n; i += workers) {
    for (std::size_t j = i; j < n; ++j) {
      const int sij = koszul(a.parity(i), a.parity(j));
      for (std::size_t k = j; k < n; ++k) {
        ++r.checked;
        // [b_i,[b_j,b_k]] - [[b_i,b_j],b_k] - s_ij [b_j,[b_i,b_k]]
        for (const auto& [m, c] : rows[j * n + k]) {
          for (const auto& [l, d] : rows[i * n + m]) bump(l, static_cast<__int128>(c) * d);
        }
        for (const auto& [m, c] : rows[i * n + j]) {
          for (const auto& [l, d] : rows[m * n + k]) bump(l, -static_cast<__int128>(c) * d);
        }
        for (const auto& [m, c] : rows[i * n + k]) {
          for (const auto& [l, d] : rows[j * n + m]) bump(l, -static_cast<__int128>(sij) * c * d);
        }
        bool bad = false;
        for (auto l : touched) {
          __int128 v = acc[l];
          if (t.modulus != 0) v %= t.modulus;
          if (v != 0) bad = true;
        }
        if (bad) {
          Vec res(n);
          for (auto l : touched) res[l] = residual_value(t, acc[l]);
          r.fail({{i, j, k}, jacobi_label(a, i, j, k) + format_vector(a, res)});
        }
        for (auto l : touched) {
          acc[l] = 0;
          mark[l] = 0;
        }
        touched.clear();
      }
    }
  }
}

void jacobi_worker_generic(const SuperAlgebra& a, unsigned worker, unsigned workers, Report& r) {
  const std::size_t n = a.dim();
  for (std::size_t i = worker; i < n; i += workers) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar sij(koszul(a.parity(i), a.parity(j)));
      for (std::size_t k = j; k < n; ++k) {
        ++r.checked;
        Vec acc(n);
        for (const auto& mc : a.product(j, k)) {
          for (const auto& ld : a.product(i, mc.index)) acc[ld.index] += mc.coeff * ld.coeff;
        }
        for (const auto& mc : a.product(i, j)) {
          for (const auto& ld : a.product(mc.index, k)) acc[ld.index] -= mc.coeff * ld.coeff;
        }
        for (const auto& mc : a.product(i, k)) {
          for (const auto& ld : a.product(j, mc.index)) acc[ld.index] -= sij * mc.coeff * ld.coeff;
        }
        if (!acc.is_zero()) r.fail({{i, j, k}, jacobi_label(a, i, j, k) + format_vector(a, acc)});
      }
    }
  }
}

}  // namespace

Report check_super_jacobi(const SuperAlgebra& a, unsigned threads) {
  Report anti = check_super_anticommutativity(a);
  if (!anti.passed) {
    anti.check = "super-Jacobi (anticommutativity precheck)";
    return anti;
  }
  Report r{"super-Jacobi"};
  const unsigned workers = std::max(1u, std::min<unsigned>(thread_count(threads), static_cast<unsigned>(a.dim())));
  std::vector<Report> parts(workers);
  auto table = integer_table(a);
  auto run = [&](unsigned w) {
    if (table) {
      jacobi_worker_int(a, *table, w, workers, parts[w]);
    } else {
      jacobi_worker_generic(a, w, workers, parts[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : parts) r.merge(p);
  return r;
}

Report check_supercommutativity(const SuperAlgebra& a) {
  Report r{"supercommutativity"};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++r.checked;
      Vec x = a.basis_product(i, j);
      Vec y = a.basis_product(j, i);
      Scalar s(koszul(a.parity(i), a.parity(j)));
      if (x != s * y) {
        r.fail({{i, j}, a.label(i) + "*" + a.label(j) + " = " + format_vector(a, x) + " vs " + a.label(j) + "*" +
                            a.label(i) + " = " + format_vector(a, y)});
      }
    }
  }
  return r;
}

Report check_associativity(const SuperAlgebra& a) {
  Report r{"associativity"};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checked;
        Vec lhs = a.multiply(ij, a.basis_vector(k));
        Vec rhs = a.multiply(a.basis_vector(i), a.basis_product(j, k));
        if (lhs != rhs) r.fail({{i, j, k}, "associator = " + format_vector(a, lhs - rhs)});
      }
    }
  }
  return r;
}

Report check_jordan_identity(const SuperAlgebra& a) {
  Report r{"Jordan identity"};
  const bool symmetric = check_supercommutativity(a).passed;
  const std::size_t n = a.dim();
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
  }
  auto P = [&](std::size_t i, std::size_t j) -> const Vec& { return prod[i * n + j]; };
  auto left = [&](std::size_t i, const Vec& v) { return a.multiply(a.basis_vector(i), v); };
  auto right = [&](const Vec& v, std::size_t i) { return a.multiply(v, a.basis_vector(i)); };
  auto sgn = [&](std::size_t p, std::size_t q1, std::size_t q2) {
    // (-1)^{|p|(|q1|+|q2|)}
    return Scalar(koszul(a.parity(p), a.parity(q1) + a.parity(q2)));
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = symmetric ? x : 0; y < n; ++y) {
      for (std::size_t z = symmetric ? y : 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          ++r.checked;
          // sum over cyclic (x,y,z) of [L_{xy}, L_z] w, linearized with Koszul signs
          Vec f = a.multiply(P(x, y), P(z, w));
          f -= sgn(z, x, y) * left(z, right(P(x, y), w));
          f += sgn(x, y, z) * a.multiply(P(y, z), P(x, w));
          f -= left(x, right(P(y, z), w));
          f += sgn(z, x, y) * a.multiply(P(z, x), P(y, w));
          f -= sgn(x, y, z) * left(y, right(P(z, x), w));
          if (!f.is_zero()) {
            r.fail({{x, y, z, w}, "linearized Jordan identity residual " + format_vector(a, f)});
          }
        }
      }
    }
  }
  return r;
}

Report homomorphism_report(const SuperAlgebra& src, const SuperAlgebra& dst, const Mat& f) {
  require(f.rows() == dst.dim() && f.cols() == src.dim(), "homomorphism_report: matrix shape mismatch");
  Report r{"multiplicativity"};
  std::vector<Vec> img(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) img[i] = f.column(i);
  for (std::size_t i = 0; i < src.dim(); ++i) {
    for (std::size_t j = 0; j < src.dim(); ++j) {
      ++r.checked;
      Vec lhs = f * src.basis_product(i, j);
      Vec rhs = dst.multiply(img[i], img[j]);
      if (lhs != rhs) {
        r.fail({{i, j}, "f(" + src.label(i) + "*" + src.label(j) + ") = " + format_vector(dst, lhs) +
                            " but f(" + src.label(i) + ")*f(" + src.label(j) + ") = " + format_vector(dst, rhs)});
      }
    }
  }
  return r;
}

Report automorphism_report(const SuperAlgebra& a, const Mat& f) {
  Report r = homomorphism_report(a, a, f);
  r.check = "automorphism";
  ++r.checked;
  if (rank(f) != a.dim()) r.fail({{}, "map is not invertible"});
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto p = a.parity_of(f.column(i));
    if (!p || (*p != a.parity(i) && !f.column(i).is_zero())) {
      r.fail({{i}, "map does not preserve the parity of " + a.label(i)});
    }
  }
  return r;
}

bool is_automorphism(const SuperAlgebra& a, const Mat& f) { return automorphism_report(a, f).passed; }

Report derivation_report(const SuperAlgebra& a, const LinearMap& f) {
  require(f.matrix.rows() == a.dim() && f.matrix.cols() == a.dim(), "derivation_report: matrix shape mismatch");
  Report r{"derivation"};
  const std::size_t n = a.dim();
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = f.matrix.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.checked;
      Vec lhs = f.matrix * a.basis_product(i, j);
      Vec rhs = a.multiply(img[i], a.basis_vector(j));
      rhs.axpy(Scalar(koszul(f.parity, a.parity(i))), a.multiply(a.basis_vector(i), img[j]));
      if (lhs != rhs) {
        r.fail({{i, j}, "d(" + a.label(i) + "*" + a.label(j) + ") - Leibniz = " + format_vector(a, lhs - rhs)});
      }
    }
  }
  return r;
}

bool is_derivation(const SuperAlgebra& a, const LinearMap& f) { return derivation_report(a, f).passed; }

Report grading_report(const SuperAlgebra& a, const Grading& g) {
  require(g.degree.size() == a.dim(), "grading_report: degree assignment has wrong length");
  Report r{"grading"};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& t : a.product(i, j)) {
        ++r.checked;
        if (g.add(g.degree[i], g.degree[j]) != g.degree[t.index]) {
          r.fail({{i, j, t.index}, a.label(i) + "*" + a.label(j) + " has a component on " + a.label(t.index) +
                                       " outside the expected degree"});
        }
      }
    }
  }
  return r;
}

bool check_grading(const SuperAlgebra& a, const Grading& g) { return grading_report(a, g).passed; }

Mat adjoint(const SuperAlgebra& l, const Vec& s) { return l.left_multiplication(s); }

std::vector<Vec> centralizer(const SuperAlgebra& l, const std::vector<Vec>& s) {
  if (s.empty()) return kernel_basis(Mat(0, l.dim()));
  std::vector<Mat> blocks;
  for (const auto& v : s) blocks.push_back(adjoint(l, v));
  return kernel_basis(vstack(blocks));
}

std::optional<Vec> find_unit(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  // unknown e: e*b_j = b_j and b_j*e = b_j for all j
  Mat m(2 * n * n, n);
  Vec rhs(2 * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& t : a.product(i, j)) m(j * n + t.index, i) += t.coeff;
      for (const auto& t : a.product(j, i)) m(n * n + j * n + t.index, i) += t.coeff;
    }
    rhs[j * n + j] = 1;
    rhs[n * n + j * n + j] = 1;
  }
  return solve(m, rhs);
}

}  // namespace tits
