#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

namespace parind {

/// Exact rational number backed by GMP.  Always kept in lowest terms with a
/// positive denominator (mpq_class canonicalizes on every operation).
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}                       // NOLINT(implicit)
  Rational(int v) : q_(static_cast<long>(v)) {}     // NOLINT(implicit)
  Rational(const mpz_class& v) : q_(v) {}           // NOLINT(implicit)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

  /// Parses "a", "-a/b" (whitespace tolerated).  Throws std::invalid_argument.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, long exponent);

/// Integer power p^e for e >= 0.
mpz_class ipow(long p, unsigned long e);

}  // namespace parind

template <>
struct std::hash<parind::Rational> {
  std::size_t operator()(const parind::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};

namespace Eigen {
template <>
struct NumTraits<parind::Rational> : GenericNumTraits<parind::Rational> {
  using Real = parind::Rational;
  using NonInteger = parind::Rational;
  using Nested = parind::Rational;
  using Literal = parind::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
