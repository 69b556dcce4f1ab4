#include "parind/rational.hpp"

#include "parind/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace parind {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s),
               [](unsigned char c) { return !std::isspace(c); });
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bad rational literal '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("bad rational literal '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("bad rational literal '" + text + "'");
    }
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_int(s.substr(0, slash)), den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

mpz_class ipow(long p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
  return r;
}

}  // namespace parind
