#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "tits/scalar.hpp"

namespace tits {

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : data_(n) {}
  Vec(std::initializer_list<Scalar> init) : data_(init) {}
  explicit Vec(std::vector<Scalar> data) : data_(std::move(data)) {}

  static Vec unit(std::size_t n, std::size_t i);

  std::size_t size() const { return data_.size(); }
  Scalar& operator[](std::size_t i) { return data_[i]; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  std::size_t nonzeros() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  // this += s * o
  void axpy(const Scalar& s, const Vec& o);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec a) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= Scalar(-1); }
  friend bool operator==(const Vec& a, const Vec& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  // Concatenation of two coordinate blocks.
  static Vec concat(const Vec& a, const Vec& b);
  Vec slice(std::size_t begin, std::size_t len) const;

  std::string str() const;

 private:
  std::vector<Scalar> data_;
};

Scalar dot(const Vec& a, const Vec& b);
// Random vector with integer entries in [-bound, bound].
Vec random_vector(std::size_t n, std::mt19937& rng, int bound = 3);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Mat from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  void set_row(std::size_t r, const Vec& v);
  // Row-major flattening, used to treat matrices as vectors.
  Vec flatten() const;
  static Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Scalar trace() const;
  Mat transpose() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Mat& m);

// a*b - sign*b*a
Mat commutator(const Mat& a, const Mat& b, int sign = 1);
// Block-diagonal and stacking helpers.
Mat vstack(const std::vector<Mat>& blocks);
Mat block_diagonal(const std::vector<Mat>& blocks);

struct Echelon {
  Mat reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(Mat a);
std::size_t rank(const Mat& a);
std::vector<Vec> kernel_basis(const Mat& a);
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> inverse(const Mat& a);
Scalar determinant(const Mat& a);

// Incrementally maintained echelon basis, for greedy independence tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}
  // Adds v if it is independent of what is already there; returns whether it was added.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  Vec reduce(Vec v) const;
  std::size_t dim_;
  std::vector<Vec> rows_;                // each normalized: pivot entry 1
  std::vector<std::size_t> pivots_;
};

// Fixed basis of a subspace with fast coordinate extraction.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(std::vector<Vec> basis, std::size_t ambient_dim);

  std::size_t size() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const Vec& operator[](std::size_t i) const { return basis_[i]; }

  // Coordinates of v; nullopt when v is not in the span.
  std::optional<Vec> try_coordinates(const Vec& v) const;
  // Coordinates of v; throws std::domain_error when v is not in the span.
  Vec coordinates(const Vec& v) const;
  // Coordinates read from pivot entries only, with no membership check.
  Vec coordinates_unchecked(const Vec& v) const;
  Vec combine(const Vec& coords) const;
  bool contains(const Vec& v) const { return try_coordinates(v).has_value(); }

 private:
  std::vector<Vec> basis_;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> pivots_;
  Mat pivot_inverse_;
};

}  // namespace tits
