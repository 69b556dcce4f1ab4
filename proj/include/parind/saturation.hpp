#pragma once

#include "parind/errors.hpp"
#include "parind/rational.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace parind {

/// Polynomial in one variable over Q, coefficients from degree 0 up, no trailing zeros.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational operator()(const Rational& t) const;
  /// t -> t + s.
  UniPoly shifted(const Rational& s) const;
  /// Distinct rational roots, ascending.  DomainError on the zero polynomial.
  std::vector<Rational> rational_roots() const;
  std::string str() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
  void trim();
  std::vector<Rational> c_;
};

/// Polynomial in n variables over Q.
class Polynomial {
public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int nvars = 0) : n_(nvars) {}
  static Polynomial constant(const Rational& c, int nvars);
  static Polynomial variable(int index, int nvars);

  int nvars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& e, const Rational& c);

  Rational operator()(const std::vector<Rational>& x) const;
  UniPoly compose(const std::vector<UniPoly>& f) const;
  /// Same polynomial in `total` variables, variable i renamed to i + offset.
  Polynomial embedded(int offset, int total) const;
  std::string str() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
  int n_;
  std::map<Exponent, Rational> terms_;
};

/// Boolean combination of polynomial equations and inequations on A^n(Q).
class ConstructibleSet {
public:
  enum class Kind { True, Eq, Neq, And, Or, Not };

  static ConstructibleSet everything(int n);
  static ConstructibleSet zero_set(const Polynomial& g);
  static ConstructibleSet nonzero_set(const Polynomial& g);
  static ConstructibleSet point(const std::vector<Rational>& x);
  static ConstructibleSet finite(int n, const std::vector<std::vector<Rational>>& points);

  int dimension() const { return n_; }
  Kind kind() const { return kind_; }
  bool contains(const std::vector<Rational>& x) const;
  /// Every polynomial in an Eq or Neq leaf.
  std::vector<Polynomial> atoms() const;
  /// Truth value when each atom g is replaced by whether g vanishes (true = vanishes).
  bool evaluate(const std::vector<bool>& vanishes) const;
  /// A on the first n coordinates and B on the last m.
  static ConstructibleSet product(const ConstructibleSet& a, const ConstructibleSet& b);
  std::string str() const;

  friend ConstructibleSet operator&&(const ConstructibleSet& a, const ConstructibleSet& b);
  friend ConstructibleSet operator||(const ConstructibleSet& a, const ConstructibleSet& b);
  friend ConstructibleSet operator!(const ConstructibleSet& a);

private:
  ConstructibleSet(Kind k, int n) : kind_(k), n_(n) {}
  ConstructibleSet embedded(int offset, int total) const;
  bool evaluate(const std::vector<bool>& vanishes, std::size_t& cursor) const;

  Kind kind_;
  int n_;
  Polynomial poly_;
  std::vector<ConstructibleSet> children_;
};

/// f : V = A^1 \ E -> A^n with f(V \ {x0}) in A; certifies f(x0) in sat'(A).
struct CurveWitness {
  std::vector<UniPoly> f;
  Rational puncture;
  std::vector<Rational> excluded;

  std::vector<Rational> point() const;
  int degree() const;
  /// Same curve with the puncture moved to 0.
  CurveWitness recentred() const;
};

/// Exact check of f(V') in A over Q: the formula holds at the generic point of the curve,
/// and every rational root of a nonzero composed atom at which it fails lies in E or is x0.
bool verify_witness(const CurveWitness& w, const ConstructibleSet& a);

struct SearchUniverse {
  int degree = 2;
  long height = 2;
};

/// Searches f(t) = x + sum_k v_k t^k with integer v_k of height <= H, k <= d, puncture 0.
/// Constant witness when x is in A.  No witness is not a proof of non-membership.
std::optional<CurveWitness> sat_prime_member(const ConstructibleSet& a, const std::vector<Rational>& x,
                                             const SearchUniverse& universe);

/// Both inclusions of sat'(A x B) = sat'(A) x sat'(B) on the samples: factor witnesses are
/// recentred and paired, and product witnesses are projected; each is verified.
bool product_rule_check(const ConstructibleSet& a, const ConstructibleSet& b,
                        const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& samples,
                        const SearchUniverse& universe);

struct FixpointResult {
  std::vector<std::vector<Rational>> certified;
  std::vector<CurveWitness> witnesses;
  /// Rounds that certified at least one new point.
  int rounds = 0;
};

/// Iterates sat_prime_member over the cloud, adding certified points to A, until nothing changes.
/// ResourceError after `max_rounds` rounds that each add points.
FixpointResult sat_fixpoint(const ConstructibleSet& a, const SearchUniverse& universe,
                            const std::vector<std::vector<Rational>>& cloud, int max_rounds = 16);

nlohmann::json to_json(const CurveWitness& w);
CurveWitness witness_from_json(const nlohmann::json& j);

}  // namespace parind
