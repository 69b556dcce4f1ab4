#include "parind/saturation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace parind {

// ---- UniPoly ----

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b * UniPoly::constant(Rational(-1)); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::shifted(const Rational& s) const {
  const UniPoly t = UniPoly({s, Rational(1)});
  UniPoly out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * t + constant(*it);
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> UniPoly::rational_roots() const {
  if (is_zero()) throw DomainError("rational_roots: zero polynomial");
  mpz_class l = 1;
  for (const auto& c : c_) l = lcm(l, c.den());
  std::vector<mpz_class> a;
  for (const auto& c : c_) a.push_back(c.num() * (l / c.den()));
  std::set<Rational> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  const UniPoly reduced(std::vector<Rational>(c_.begin() + static_cast<long>(low), c_.end()));
  if (reduced.degree() > 0) {
    for (const auto& u : divisors(a[low]))
      for (const auto& v : divisors(a.back())) {
        if (gcd(u, v) != 1) continue;
        for (int s : {1, -1}) {
          const Rational r(mpz_class(s * u), v);
          if (reduced(r).is_zero()) roots.insert(r);
        }
      }
  }
  return {roots.begin(), roots.end()};
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    os << (first ? "" : " + ") << c;
    if (k > 0) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os.str();
}

// ---- Polynomial ----

Polynomial Polynomial::constant(const Rational& c, int nvars) {
  Polynomial p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int index, int nvars) {
  if (index < 0 || index >= nvars) throw DomainError("Polynomial::variable: index out of range");
  Polynomial p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw DomainError("Polynomial: exponent length mismatch");
  Rational& slot = terms_[e];
  slot += c;
  if (slot.is_zero()) terms_.erase(e);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw DomainError("Polynomial: variable count mismatch");
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b * Polynomial::constant(Rational(-1), b.n_);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw DomainError("Polynomial: variable count mismatch");
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational Polynomial::operator()(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != n_) throw DomainError("Polynomial: point has wrong dimension");
  Rational v(0);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i) m *= pow(x[i], e[i]);
    v += m;
  }
  return v;
}

UniPoly Polynomial::compose(const std::vector<UniPoly>& f) const {
  if (static_cast<int>(f.size()) != n_) throw DomainError("Polynomial::compose: wrong number of components");
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    UniPoly m = UniPoly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m = m * f[i];
    out = out + m;
  }
  return out;
}

Polynomial Polynomial::embedded(int offset, int total) const {
  if (offset < 0 || offset + n_ > total) throw DomainError("Polynomial::embedded: out of range");
  Polynomial out(total);
  for (const auto& [e, c] : terms_) {
    Exponent big(static_cast<std::size_t>(total), 0);
    std::copy(e.begin(), e.end(), big.begin() + offset);
    out.add_term(big, c);
  }
  return out;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << it->second;
    for (std::size_t i = 0; i < it->first.size(); ++i)
      if (it->first[i] > 0) os << "*x" << i + 1 << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
    first = false;
  }
  return os.str();
}

// ---- ConstructibleSet ----

ConstructibleSet ConstructibleSet::everything(int n) { return ConstructibleSet(Kind::True, n); }

ConstructibleSet ConstructibleSet::zero_set(const Polynomial& g) {
  ConstructibleSet s(Kind::Eq, g.nvars());
  s.poly_ = g;
  return s;
}

ConstructibleSet ConstructibleSet::nonzero_set(const Polynomial& g) {
  ConstructibleSet s(Kind::Neq, g.nvars());
  s.poly_ = g;
  return s;
}

ConstructibleSet ConstructibleSet::point(const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  ConstructibleSet s = everything(n);
  for (int i = 0; i < n; ++i)
    s = s && zero_set(Polynomial::variable(i, n) - Polynomial::constant(x[static_cast<std::size_t>(i)], n));
  return s;
}

ConstructibleSet ConstructibleSet::finite(int n, const std::vector<std::vector<Rational>>& points) {
  ConstructibleSet s = !everything(n);
  for (const auto& x : points) s = s || point(x);
  return s;
}

ConstructibleSet operator&&(const ConstructibleSet& a, const ConstructibleSet& b) {
  if (a.n_ != b.n_) throw DomainError("ConstructibleSet: dimension mismatch");
  ConstructibleSet s(ConstructibleSet::Kind::And, a.n_);
  s.children_ = {a, b};
  return s;
}

ConstructibleSet operator||(const ConstructibleSet& a, const ConstructibleSet& b) {
  if (a.n_ != b.n_) throw DomainError("ConstructibleSet: dimension mismatch");
  ConstructibleSet s(ConstructibleSet::Kind::Or, a.n_);
  s.children_ = {a, b};
  return s;
}

ConstructibleSet operator!(const ConstructibleSet& a) {
  ConstructibleSet s(ConstructibleSet::Kind::Not, a.n_);
  s.children_ = {a};
  return s;
}

bool ConstructibleSet::contains(const std::vector<Rational>& x) const {
  switch (kind_) {
    case Kind::True: return true;
    case Kind::Eq: return poly_(x).is_zero();
    case Kind::Neq: return !poly_(x).is_zero();
    case Kind::And: return children_[0].contains(x) && children_[1].contains(x);
    case Kind::Or: return children_[0].contains(x) || children_[1].contains(x);
    case Kind::Not: return !children_[0].contains(x);
  }
  return false;
}

std::vector<Polynomial> ConstructibleSet::atoms() const {
  if (kind_ == Kind::Eq || kind_ == Kind::Neq) return {poly_};
  std::vector<Polynomial> out;
  for (const auto& c : children_) {
    auto sub = c.atoms();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool ConstructibleSet::evaluate(const std::vector<bool>& vanishes) const {
  std::size_t cursor = 0;
  const bool v = evaluate(vanishes, cursor);
  if (cursor != vanishes.size()) throw DomainError("ConstructibleSet::evaluate: wrong number of atom values");
  return v;
}

bool ConstructibleSet::evaluate(const std::vector<bool>& vanishes, std::size_t& cursor) const {
  switch (kind_) {
    case Kind::True: return true;
    case Kind::Eq: return vanishes.at(cursor++);
    case Kind::Neq: return !vanishes.at(cursor++);
    case Kind::And: {
      const bool l = children_[0].evaluate(vanishes, cursor);
      return children_[1].evaluate(vanishes, cursor) && l;
    }
    case Kind::Or: {
      const bool l = children_[0].evaluate(vanishes, cursor);
      return children_[1].evaluate(vanishes, cursor) || l;
    }
    case Kind::Not: return !children_[0].evaluate(vanishes, cursor);
  }
  return false;
}

ConstructibleSet ConstructibleSet::embedded(int offset, int total) const {
  ConstructibleSet s(kind_, total);
  if (kind_ == Kind::Eq || kind_ == Kind::Neq) s.poly_ = poly_.embedded(offset, total);
  for (const auto& c : children_) s.children_.push_back(c.embedded(offset, total));
  return s;
}

ConstructibleSet ConstructibleSet::product(const ConstructibleSet& a, const ConstructibleSet& b) {
  const int total = a.n_ + b.n_;
  return a.embedded(0, total) && b.embedded(a.n_, total);
}

std::string ConstructibleSet::str() const {
  switch (kind_) {
    case Kind::True: return "true";
    case Kind::Eq: return "(" + poly_.str() + " = 0)";
    case Kind::Neq: return "(" + poly_.str() + " != 0)";
    case Kind::And: return "(" + children_[0].str() + " and " + children_[1].str() + ")";
    case Kind::Or: return "(" + children_[0].str() + " or " + children_[1].str() + ")";
    case Kind::Not: return "not " + children_[0].str();
  }
  return "";
}

// ---- witnesses ----

std::vector<Rational> CurveWitness::point() const {
  std::vector<Rational> x;
  for (const auto& fi : f) x.push_back(fi(puncture));
  return x;
}

int CurveWitness::degree() const {
  int d = 0;
  for (const auto& fi : f) d = std::max(d, fi.degree());
  return d;
}

CurveWitness CurveWitness::recentred() const {
  CurveWitness w;
  for (const auto& fi : f) w.f.push_back(fi.shifted(puncture));
  w.puncture = Rational(0);
  for (const auto& e : excluded) w.excluded.push_back(e - puncture);
  return w;
}

namespace {

std::vector<Rational> image(const std::vector<UniPoly>& f, const Rational& t) {
  std::vector<Rational> x;
  for (const auto& fi : f) x.push_back(fi(t));
  return x;
}

struct CurveAnalysis {
  bool generic = false;
  std::vector<Rational> special;  // roots of nonzero composed atoms
};

CurveAnalysis analyze(const std::vector<UniPoly>& f, const ConstructibleSet& a) {
  CurveAnalysis out;
  std::vector<bool> vanishes;
  std::set<Rational> special;
  for (const auto& g : a.atoms()) {
    const UniPoly h = g.compose(f);
    vanishes.push_back(h.is_zero());
    if (!h.is_zero())
      for (const auto& r : h.rational_roots()) special.insert(r);
  }
  out.generic = a.evaluate(vanishes);
  out.special.assign(special.begin(), special.end());
  return out;
}

}  // namespace

bool verify_witness(const CurveWitness& w, const ConstructibleSet& a) {
  if (static_cast<int>(w.f.size()) != a.dimension()) return false;
  const auto excluded = [&](const Rational& t) {
    return std::find(w.excluded.begin(), w.excluded.end(), t) != w.excluded.end();
  };
  if (excluded(w.puncture)) return false;
  const CurveAnalysis c = analyze(w.f, a);
  if (!c.generic) return false;
  for (const auto& r : c.special) {
    if (r == w.puncture || excluded(r)) continue;
    if (!a.contains(image(w.f, r))) return false;
  }
  return true;
}

std::optional<CurveWitness> sat_prime_member(const ConstructibleSet& a, const std::vector<Rational>& x,
                                             const SearchUniverse& universe) {
  const int n = a.dimension();
  if (static_cast<int>(x.size()) != n) throw DomainError("sat_prime_member: point has wrong dimension");
  std::vector<UniPoly> base;
  for (const auto& xi : x) base.push_back(UniPoly::constant(xi));
  if (a.contains(x)) {
    CurveWitness w{base, Rational(0), {}};
    if (verify_witness(w, a)) return w;
  }
  for (int e = 1; e <= universe.degree; ++e)
    for (long h = 1; h <= universe.height; ++h) {
      const long width = 2 * h + 1;
      const int slots = n * e;
      std::uint64_t count = 1;
      for (int s = 0; s < slots; ++s) count *= static_cast<std::uint64_t>(width);
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<long> v(static_cast<std::size_t>(slots));
        std::uint64_t c = code;
        long top = 0;
        for (auto& vi : v) {
          vi = static_cast<long>(c % width) - h;
          c /= width;
          top = std::max(top, std::abs(vi));
        }
        if (top != h) continue;
        // the leading coefficient vector (degree e) must be nonzero
        bool lead = false;
        for (int i = 0; i < n; ++i) lead = lead || v[static_cast<std::size_t>((e - 1) * n + i)] != 0;
        if (!lead) continue;
        std::vector<UniPoly> f = base;
        for (int i = 0; i < n; ++i) {
          std::vector<Rational> coeffs{x[static_cast<std::size_t>(i)]};
          for (int k = 0; k < e; ++k) coeffs.emplace_back(v[static_cast<std::size_t>(k * n + i)]);
          f[static_cast<std::size_t>(i)] = UniPoly(std::move(coeffs));
        }
        const CurveAnalysis an = analyze(f, a);
        if (!an.generic) continue;
        CurveWitness w{f, Rational(0), {}};
        for (const auto& r : an.special)
          if (!r.is_zero() && !a.contains(image(f, r))) w.excluded.push_back(r);
        if (verify_witness(w, a)) return w;
      }
    }
  return std::nullopt;
}

bool product_rule_check(const ConstructibleSet& a, const ConstructibleSet& b,
                        const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>& samples,
                        const SearchUniverse& universe) {
  const ConstructibleSet ab = ConstructibleSet::product(a, b);
  const auto project = [](const CurveWitness& w, std::size_t from, std::size_t to) {
    return CurveWitness{std::vector<UniPoly>(w.f.begin() + static_cast<long>(from), w.f.begin() + static_cast<long>(to)),
                        w.puncture, w.excluded};
  };
  const std::size_t n = static_cast<std::size_t>(a.dimension());
  const std::size_t total = static_cast<std::size_t>(ab.dimension());
  for (const auto& [pa, pb] : samples) {
    const auto wa = sat_prime_member(a, pa, universe);
    const auto wb = sat_prime_member(b, pb, universe);
    if (!wa || !wb) return false;
    // sat'(A) x sat'(B) in sat'(A x B): common puncture 0, union of excluded sets
    const CurveWitness ra = wa->recentred(), rb = wb->recentred();
    CurveWitness joint{ra.f, Rational(0), ra.excluded};
    joint.f.insert(joint.f.end(), rb.f.begin(), rb.f.end());
    for (const auto& e : rb.excluded)
      if (std::find(joint.excluded.begin(), joint.excluded.end(), e) == joint.excluded.end()) joint.excluded.push_back(e);
    std::vector<Rational> pab = pa;
    pab.insert(pab.end(), pb.begin(), pb.end());
    if (joint.point() != pab || !verify_witness(joint, ab)) return false;
    // sat'(A x B) in sat'(A) x sat'(B): projections of product witnesses
    std::vector<CurveWitness> product_witnesses{joint};
    if (const auto searched = sat_prime_member(ab, pab, universe)) product_witnesses.push_back(*searched);
    for (const auto& w : product_witnesses)
      if (!verify_witness(project(w, 0, n), a) || !verify_witness(project(w, n, total), b)) return false;
  }
  return true;
}

FixpointResult sat_fixpoint(const ConstructibleSet& a, const SearchUniverse& universe,
                            const std::vector<std::vector<Rational>>& cloud, int max_rounds) {
  FixpointResult out;
  ConstructibleSet current = a;
  std::vector<bool> done(cloud.size(), false);
  while (true) {
    std::vector<std::vector<Rational>> fresh;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      if (done[i]) continue;
      if (auto w = sat_prime_member(current, cloud[i], universe)) {
        done[i] = true;
        fresh.push_back(cloud[i]);
        out.certified.push_back(cloud[i]);
        out.witnesses.push_back(*w);
      }
    }
    if (fresh.empty()) break;
    if (++out.rounds > max_rounds)
      throw ResourceError("sat_fixpoint: still growing after " + std::to_string(max_rounds) + " rounds");
    current = current || ConstructibleSet::finite(a.dimension(), fresh);
  }
  return out;
}

nlohmann::json to_json(const CurveWitness& w) {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& fi : w.f) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : fi.coefficients()) c.push_back(x.str());
    f.push_back(c);
  }
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : w.excluded) e.push_back(x.str());
  return {{"f", f}, {"puncture", w.puncture.str()}, {"excluded", e}};
}

CurveWitness witness_from_json(const nlohmann::json& j) {
  CurveWitness w;
  for (const auto& fi : j.at("f")) {
    std::vector<Rational> c;
    for (const auto& x : fi) c.push_back(Rational::parse(x.get<std::string>()));
    w.f.emplace_back(std::move(c));
  }
  w.puncture = Rational::parse(j.at("puncture").get<std::string>());
  for (const auto& x : j.at("excluded")) w.excluded.push_back(Rational::parse(x.get<std::string>()));
  return w;
}

}  // namespace parind
