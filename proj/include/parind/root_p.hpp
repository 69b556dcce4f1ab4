#pragma once

#include "parind/errors.hpp"
#include "parind/rational.hpp"

#include <Eigen/Core>

#include <ostream>
#include <string>

namespace parind {

/// Element a + b*sqrt(p) of the quadratic field Q(sqrt p), p prime.
///
/// A zero prime marks a "prime-agnostic" value with b == 0 (the result of
/// default construction or of lifting a plain rational); it adopts the prime
/// of whatever it is combined with.  Mixing two different nonzero primes
/// throws DomainError.
template <typename Scalar>
class RootP {
public:
  RootP() = default;
  RootP(Scalar a) : a_(std::move(a)) {}  // NOLINT(implicit)
  RootP(long a) : a_(a) {}               // NOLINT(implicit)
  RootP(int a) : a_(a) {}                // NOLINT(implicit)
  RootP(Scalar a, Scalar b, long p) : a_(std::move(a)), b_(std::move(b)), p_(p) {
    if (p_ == 0 && b_ != Scalar(0)) throw DomainError("RootP: irrational part needs a prime");
  }

  static RootP sqrt_p(long p) { return RootP(Scalar(0), Scalar(1), p); }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  long prime() const { return p_; }

  bool is_zero() const { return a_ == Scalar(0) && b_ == Scalar(0); }
  bool is_rational() const { return b_ == Scalar(0); }

  RootP conjugate() const { return RootP(a_, -b_, p_); }
  /// Field norm a^2 - p b^2.
  Scalar norm() const { return a_ * a_ - Scalar(p_) * b_ * b_; }

  RootP inverse() const {
    if (is_zero()) throw DomainError("RootP: inverse of zero");
    const Scalar n = norm();
    return RootP(a_ / n, -b_ / n, p_);
  }

  RootP operator-() const { return RootP(-a_, -b_, p_); }
  RootP& operator+=(const RootP& o) {
    p_ = merged_prime(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  RootP& operator-=(const RootP& o) {
    p_ = merged_prime(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  RootP& operator*=(const RootP& o) {
    const long p = merged_prime(o);
    Scalar na = a_ * o.a_ + Scalar(p) * b_ * o.b_;
    Scalar nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    p_ = p;
    return *this;
  }
  RootP& operator/=(const RootP& o) { return *this *= o.inverse(); }

  friend RootP operator+(RootP x, const RootP& y) { return x += y; }
  friend RootP operator-(RootP x, const RootP& y) { return x -= y; }
  friend RootP operator*(RootP x, const RootP& y) { return x *= y; }
  friend RootP operator/(RootP x, const RootP& y) { return x /= y; }

  /// Equality is componentwise (sqrt p is irrational).
  friend bool operator==(const RootP& x, const RootP& y) {
    if (x.p_ != 0 && y.p_ != 0 && x.p_ != y.p_ && !(x.b_ == Scalar(0) && y.b_ == Scalar(0)))
      return false;
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Canonical text form "a+b√p" (exactly as serialized in reports).
  std::string str() const {
    if (b_ == Scalar(0)) return a_.str();
    std::string out = a_.str();
    std::string bs = b_.str();
    if (bs[0] != '-') bs = "+" + bs;
    return out + bs + "√" + std::to_string(p_);
  }
  friend std::ostream& operator<<(std::ostream& os, const RootP& r) { return os << r.str(); }

private:
  long merged_prime(const RootP& o) const {
    if (p_ == 0) return o.p_;
    if (o.p_ == 0 || o.p_ == p_) return p_;
    if (b_ == Scalar(0) && o.b_ == Scalar(0)) return p_;
    throw DomainError("RootP: mixing different primes");
  }

  Scalar a_{0};
  Scalar b_{0};
  long p_{0};
};

using RootPQ = RootP<Rational>;

/// Parses the "a+b√p" form produced by RootP::str (or a plain rational).
RootPQ parse_root_p(const std::string& text);

}  // namespace parind

namespace Eigen {
template <typename Scalar>
struct NumTraits<parind::RootP<Scalar>> : GenericNumTraits<parind::RootP<Scalar>> {
  using Real = parind::RootP<Scalar>;
  using NonInteger = parind::RootP<Scalar>;
  using Nested = parind::RootP<Scalar>;
  using Literal = parind::RootP<Scalar>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
