#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tits/linalg.hpp"

namespace tits {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity operator+(Parity a, Parity b) { return static_cast<Parity>(bit(a) ^ bit(b)); }
// (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

struct Term {
  std::size_t index;
  Scalar coeff;
};

struct Claims {
  bool associative = false;
  bool lie = false;
  bool jordan = false;
};

// Finite-dimensional superalgebra given by sparse structure constants
// b_i b_j = sum_k c_ij^k b_k.  Immutable once built.
class SuperAlgebra {
 public:
  class Builder {
   public:
    Builder(std::vector<std::string> labels, std::vector<Parity> parity);
    explicit Builder(std::vector<std::string> labels);  // all even
    std::size_t dim() const { return labels_.size(); }
    // Accumulates c into the coefficient of b_k in b_i b_j.
    Builder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
    Builder& add_product(std::size_t i, std::size_t j, const Vec& v);
    Builder& claims(Claims c);
    SuperAlgebra build() &&;

   private:
    std::vector<std::string> labels_;
    std::vector<Parity> parity_;
    std::vector<std::vector<Term>> table_;
    Claims claims_;
  };

  SuperAlgebra() = default;

  std::size_t dim() const { return labels_.size(); }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const std::vector<Parity>& parities() const { return parity_; }
  Parity parity(std::size_t i) const { return parity_[i]; }
  bool is_super() const { return odd_dim() > 0; }
  const Claims& claims() const { return claims_; }
  std::size_t nonzero_constants() const;

  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t i) const { return Vec::unit(dim(), i); }

  // Matrices of y -> x y and y -> y x.
  Mat left_multiplication(const Vec& x) const;
  Mat right_multiplication(const Vec& x) const;

  // Parity of a vector if homogeneous.
  std::optional<Parity> parity_of(const Vec& v) const;

  // Same table with every constant reduced into GF(p).
  SuperAlgebra reduced_mod(std::int64_t prime) const;
  // Algebra with multiplication scaled by s (used to clear denominators).
  SuperAlgebra scaled(const Scalar& s) const;
  // Structure constants relative to a new basis, given as the columns of p
  // (each column must be homogeneous).
  SuperAlgebra change_basis(const Mat& p, std::vector<std::string> labels) const;
  // Subalgebra spanned by the given vectors (closure is verified).
  SuperAlgebra subalgebra(const std::vector<Vec>& basis, std::vector<std::string> labels) const;

  nlohmann::json to_json() const;
  static SuperAlgebra from_json(const nlohmann::json& j);

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);
  friend bool operator!=(const SuperAlgebra& a, const SuperAlgebra& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
  std::vector<Parity> parity_;
  std::vector<std::vector<Term>> table_;
  Claims claims_;
};

// Human-readable linear combination of basis labels.
std::string format_vector(const SuperAlgebra& a, const Vec& v);

struct LinearMap {
  Mat matrix;
  Parity parity = Parity::Even;
};

struct Witness {
  std::vector<std::size_t> indices;
  std::string detail;
};

// Outcome of an exhaustive identity check.  Failures are data.
struct Report {
  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  std::string check;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failure_count = 0;
  std::vector<Witness> witnesses;  // first few failures

  static constexpr std::size_t kMaxWitnesses = 16;
  void fail(Witness w);
  void merge(const Report& other);
  std::string summary() const;
  nlohmann::json to_json() const;
};

struct Grading {
  enum class Group { Z2xZ2, Z3 };
  Group group = Group::Z2xZ2;
  std::vector<std::pair<int, int>> degree;  // Z3 degrees use the first entry

  std::pair<int, int> add(std::pair<int, int> a, std::pair<int, int> b) const;
};

// Worker count for parallel checks: explicit value, else MAGMA_TITS_THREADS,
// else the hardware concurrency.
unsigned thread_count(unsigned requested = 0);

Report check_super_anticommutativity(const SuperAlgebra& a);
Report check_super_jacobi(const SuperAlgebra& a, unsigned threads = 0);
Report check_supercommutativity(const SuperAlgebra& a);
Report check_associativity(const SuperAlgebra& a);
// Fully linearized Jordan identity with Koszul signs on basis quadruples.
Report check_jordan_identity(const SuperAlgebra& a);

Report automorphism_report(const SuperAlgebra& a, const Mat& f);
bool is_automorphism(const SuperAlgebra& a, const Mat& f);
Report derivation_report(const SuperAlgebra& a, const LinearMap& f);
bool is_derivation(const SuperAlgebra& a, const LinearMap& f);
Report grading_report(const SuperAlgebra& a, const Grading& g);
bool check_grading(const SuperAlgebra& a, const Grading& g);
// Report on f(xy) = f(x) g(y) style multiplicativity between two algebras.
Report homomorphism_report(const SuperAlgebra& src, const SuperAlgebra& dst, const Mat& f);

// Matrix of x -> [s, x] in a Lie (super)algebra.
Mat adjoint(const SuperAlgebra& l, const Vec& s);
std::vector<Vec> centralizer(const SuperAlgebra& l, const std::vector<Vec>& s);
std::optional<Vec> find_unit(const SuperAlgebra& a);

}  // namespace tits
