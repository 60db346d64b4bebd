#include "tits/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tits {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Vec Vec::unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::size_t Vec::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : data_) n += !s.is_zero();
  return n;
}

Vec& Vec::operator+=(const Vec& o) {
  require(size() == o.size(), "Vec: dimension mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require(size() == o.size(), "Vec: dimension mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

void Vec::axpy(const Scalar& s, const Vec& o) {
  require(size() == o.size(), "Vec: dimension mismatch in axpy");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += s * o.data_[i];
  }
}

Vec Vec::concat(const Vec& a, const Vec& b) {
  std::vector<Scalar> d(a.data_);
  d.insert(d.end(), b.data_.begin(), b.data_.end());
  return Vec(std::move(d));
}

Vec Vec::slice(std::size_t begin, std::size_t len) const {
  require(begin + len <= size(), "Vec: slice out of range");
  return Vec(std::vector<Scalar>(data_.begin() + static_cast<long>(begin),
                                 data_.begin() + static_cast<long>(begin + len)));
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < data_.size(); ++i) os << (i ? ", " : "") << data_[i];
  os << ")";
  return os.str();
}

Scalar dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vec random_vector(std::size_t n, std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows * cols, "Mat: data size does not match shape");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Mat Mat::from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries) {
  require(entries.size() == rows * cols, "Mat::from_ints: wrong entry count");
  std::vector<Scalar> d;
  d.reserve(entries.size());
  for (long long e : entries) d.emplace_back(e);
  return Mat(rows, cols, std::move(d));
}

Vec Mat::row(std::size_t r) const {
  return Vec(std::vector<Scalar>(data_.begin() + static_cast<long>(r * cols_),
                                 data_.begin() + static_cast<long>((r + 1) * cols_)));
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_column(std::size_t c, const Vec& v) {
  require(v.size() == rows_, "Mat::set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Mat::set_row(std::size_t r, const Vec& v) {
  require(v.size() == cols_, "Mat::set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

Vec Mat::flatten() const { return Vec(data_); }

Mat Mat::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  return Mat(rows, cols, v.data());
}

bool Mat::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Scalar Mat::trace() const {
  require(is_square(), "Mat::trace: not square");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Mat& Mat::operator+=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat: shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat: shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols_ == b.rows_, "Mat: shape mismatch in *");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  require(a.cols_ == v.size(), "Mat: shape mismatch in matrix*vector");
  Vec out(a.rows_);
  for (std::size_t c = 0; c < a.cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < a.rows_; ++r) {
      const Scalar& x = a(r, c);
      if (!x.is_zero()) out[r] += x * v[c];
    }
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) os << (r ? "; " : "") << row(r).str();
  os << "]";
  return os.str();
}

Mat commutator(const Mat& a, const Mat& b, int sign) {
  Mat ab = a * b;
  Mat ba = b * a;
  if (sign == 1) return ab - ba;
  return ab + ba;
}

Mat vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat();
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require(b.cols() == cols, "vstack: column mismatch");
    rows += b.rows();
  }
  Mat m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r0 + r, c) = b(r, c);
    }
    r0 += b.rows();
  }
  return m;
}

Mat block_diagonal(const std::vector<Mat>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Echelon rref(Mat a) {
  Echelon e;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& a) {
  Echelon e = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar& x = e.reduced(r, f);
      if (!x.is_zero()) v[e.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  require(a.rows() == b.size(), "solve: right-hand side length mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  require(a.is_square(), "inverse: not square");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

Scalar determinant(const Mat& a) {
  require(a.is_square(), "determinant: not square");
  Mat m = a;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Vec SpanBuilder::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& x = v[pivots_[i]];
    if (!x.is_zero()) v.axpy(-x, rows_[i]);
  }
  return v;
}

bool SpanBuilder::add(const Vec& v) {
  require(v.size() == dim_, "SpanBuilder: dimension mismatch");
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  r *= r[p].inverse();
  // Keep rows fully reduced so reduce() is a single pass.
  for (auto& row : rows_) {
    if (!row[p].is_zero()) row.axpy(-row[p], r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const Vec& v) const {
  require(v.size() == dim_, "SpanBuilder: dimension mismatch");
  return reduce(v).is_zero();
}

SubspaceBasis::SubspaceBasis(std::vector<Vec> basis, std::size_t ambient_dim)
    : basis_(std::move(basis)), ambient_(ambient_dim) {
  const std::size_t k = basis_.size();
  for (const auto& b : basis_) require(b.size() == ambient_, "SubspaceBasis: vector length mismatch");
  if (k == 0) return;
  Echelon e = rref(Mat::from_rows(basis_, ambient_));
  if (e.pivots.size() != k) throw std::invalid_argument("SubspaceBasis: vectors are linearly dependent");
  pivots_ = e.pivots;
  Mat square(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) square(r, c) = basis_[c][pivots_[r]];
  }
  pivot_inverse_ = *inverse(square);
}

Vec SubspaceBasis::coordinates_unchecked(const Vec& v) const {
  require(v.size() == ambient_, "SubspaceBasis: vector length mismatch");
  Vec picked(basis_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) picked[r] = v[pivots_[r]];
  return pivot_inverse_ * picked;
}

Vec SubspaceBasis::combine(const Vec& coords) const {
  require(coords.size() == basis_.size(), "SubspaceBasis: coordinate length mismatch");
  Vec out(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) out.axpy(coords[i], basis_[i]);
  return out;
}

std::optional<Vec> SubspaceBasis::try_coordinates(const Vec& v) const {
  if (basis_.empty()) {
    require(v.size() == ambient_, "SubspaceBasis: vector length mismatch");
    return v.is_zero() ? std::optional<Vec>(Vec(0)) : std::nullopt;
  }
  Vec c = coordinates_unchecked(v);
  if (combine(c) != v) return std::nullopt;
  return c;
}

Vec SubspaceBasis::coordinates(const Vec& v) const {
  auto c = try_coordinates(v);
  if (!c) throw std::domain_error("SubspaceBasis: vector not in span");
  return *c;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

}  // namespace tits
