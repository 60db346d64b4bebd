#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace tits {

// Exact field element: a rational number in lowest terms, or a residue
// modulo a prime p >= 5.  Rationals that fit in 64-bit numerator and
// denominator are stored inline; larger ones spill into a shared GMP value.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : num_(v) {}            // NOLINT(google-explicit-constructor)
  Scalar(long v) : num_(v) {}           // NOLINT(google-explicit-constructor)
  Scalar(long long v) : num_(v) {}      // NOLINT(google-explicit-constructor)

  static Scalar fraction(std::int64_t num, std::int64_t den);
  static Scalar from_mpq(const mpq_class& q);
  static Scalar modular(std::int64_t value, std::int64_t prime);
  // Accepts "n", "-n" or "n/d".
  static Scalar parse(const std::string& text);

  bool is_modular() const { return kind_ == Kind::Mod; }
  std::int64_t modulus() const { return kind_ == Kind::Mod ? den_ : 0; }
  std::int64_t residue() const { return kind_ == Kind::Mod ? num_ : 0; }
  bool is_zero() const { return kind_ != Kind::Big && num_ == 0; }
  bool is_one() const { return kind_ != Kind::Big && num_ == 1 && (kind_ == Kind::Mod || den_ == 1); }
  bool is_integer() const;
  int sign() const;  // rationals only

  mpq_class to_mpq() const;  // rationals only
  // Same value reduced into GF(p); throws if the denominator vanishes mod p.
  Scalar reduce_mod(std::int64_t prime) const;
  // Numerator and denominator as GMP integers (rationals only).
  mpz_class numerator() const;
  mpz_class denominator() const;

  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  enum class Kind : std::uint8_t { Small, Big, Mod };

  static Scalar normalized(const mpq_class& q);
  static Scalar from_i128(__int128 num, __int128 den);

  // Small: num_/den_ with den_ > 0 and gcd 1.  Mod: num_ in [0, den_), den_ = p.
  Kind kind_ = Kind::Small;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tits
