#include "tits/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tits {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v > kMin && v <= kMax; }

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  __int128 result = 1;
  __int128 b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

}  // namespace

Scalar Scalar::from_i128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (fits(num) && fits(den)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  // Rare: reconstruct through GMP from the two 128-bit halves.
  auto to_z = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi, lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  mpq_class q(to_z(num), to_z(den));
  q.canonicalize();
  return normalized(q);
}

Scalar Scalar::normalized(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    Scalar s;
    s.num_ = n.get_si();
    s.den_ = d.get_si();
    return s;
  }
  Scalar s;
  s.kind_ = Kind::Big;
  s.big_ = std::make_shared<const mpq_class>(q);
  return s;
}

Scalar Scalar::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  return from_i128(num, den);
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return normalized(c);
}

Scalar Scalar::modular(std::int64_t value, std::int64_t prime) {
  if (prime < 5 || !is_prime(prime) || prime > (std::int64_t{1} << 62)) {
    throw std::invalid_argument("Scalar: modulus must be a prime >= 5");
  }
  Scalar s;
  s.kind_ = Kind::Mod;
  std::int64_t r = value % prime;
  if (r < 0) r += prime;
  s.num_ = r;
  s.den_ = prime;
  return s;
}

Scalar Scalar::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return from_mpq(mpq_class(mpz_class(text)));
    }
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    if (d == 0) throw std::domain_error("Scalar: zero denominator");
    return from_mpq(mpq_class(n, d));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
  }
}

bool Scalar::is_integer() const {
  switch (kind_) {
    case Kind::Small: return den_ == 1;
    case Kind::Big: return big_->get_den() == 1;
    case Kind::Mod: return true;
  }
  return false;
}

int Scalar::sign() const {
  switch (kind_) {
    case Kind::Small: return (num_ > 0) - (num_ < 0);
    case Kind::Big: return sgn(*big_);
    case Kind::Mod: break;
  }
  throw std::logic_error("Scalar: sign of a modular residue");
}

mpq_class Scalar::to_mpq() const {
  switch (kind_) {
    case Kind::Small: return mpq_class(to_mpz(num_), to_mpz(den_));
    case Kind::Big: return *big_;
    case Kind::Mod: break;
  }
  throw std::logic_error("Scalar: modular residue has no rational value");
}

mpz_class Scalar::numerator() const { return to_mpq().get_num(); }
mpz_class Scalar::denominator() const { return to_mpq().get_den(); }

Scalar Scalar::reduce_mod(std::int64_t prime) const {
  if (kind_ == Kind::Mod) {
    if (den_ != prime) throw std::invalid_argument("Scalar: mixing different moduli");
    return *this;
  }
  mpz_class p = to_mpz(prime);
  mpz_class n = numerator() % p;
  mpz_class d = denominator() % p;
  if (d == 0) throw std::domain_error("Scalar: denominator divisible by the modulus");
  Scalar nn = modular(n.get_si(), prime);
  Scalar dd = modular(d.get_si(), prime);
  return nn * dd.inverse();
}

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::Small:
      return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    case Kind::Big: return big_->get_str();
    case Kind::Mod: return std::to_string(num_) + " mod " + std::to_string(den_);
  }
  return {};
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::Small:
      if (num_ == kMin) return from_mpq(-to_mpq());
      {
        Scalar s = *this;
        s.num_ = -num_;
        return s;
      }
    case Kind::Big: return normalized(-*big_);
    case Kind::Mod: return modular(num_ == 0 ? 0 : den_ - num_, den_);
  }
  return {};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  switch (kind_) {
    case Kind::Small: return from_i128(den_, num_);
    case Kind::Big: return normalized(1 / *big_);
    case Kind::Mod: return modular(mod_pow(num_, den_ - 2, den_), den_);
  }
  return {};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Small && b.kind_ == K::Small) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != kMin) return Scalar(static_cast<long long>(r));
    }
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == b.den_) {
      return Scalar::from_i128(static_cast<__int128>(a.num_) + b.num_, a.den_);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Scalar::from_i128(n, d);
  }
  if (a.kind_ == K::Mod || b.kind_ == K::Mod) {
    std::int64_t p = a.kind_ == K::Mod ? a.den_ : b.den_;
    Scalar x = a.reduce_mod(p);
    Scalar y = b.reduce_mod(p);
    std::int64_t r = x.num_ + y.num_;
    if (r >= p) r -= p;
    return Scalar::modular(r, p);
  }
  return Scalar::normalized(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Small && b.kind_ == K::Small) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != kMin) return Scalar(static_cast<long long>(r));
    }
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Scalar::from_i128(n, d);
  }
  if (a.kind_ == K::Mod || b.kind_ == K::Mod) {
    std::int64_t p = a.kind_ == K::Mod ? a.den_ : b.den_;
    Scalar x = a.reduce_mod(p);
    Scalar y = b.reduce_mod(p);
    return Scalar::modular(static_cast<std::int64_t>(static_cast<__int128>(x.num_) * y.num_ % p), p);
  }
  return Scalar::normalized(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Small && b.kind_ == K::Small) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.kind_ == K::Mod || b.kind_ == K::Mod) {
    std::int64_t p = a.kind_ == K::Mod ? a.den_ : b.den_;
    return a.reduce_mod(p).num_ == b.reduce_mod(p).num_;
  }
  return a.to_mpq() == b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tits
