#include "parind/hecke.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace parind {

// ---------------------------------------------------------------- ambient

const BlockParabolic& Ambient::parabolic_subgroup() const {
  if (!parabolic_) throw DomainError("Ambient: G has no parabolic attached");
  return *parabolic_;
}

bool Ambient::contains(const RationalMatrix& g) const {
  switch (kind_) {
    case Kind::G: return g.rows() == n_ && g.cols() == n_ && !determinant(g).is_zero();
    case Kind::P: return parabolic_->contains(g);
    case Kind::M: return parabolic_->levi_contains(g);
  }
  return false;
}

Orientation Ambient::label_orientation() const {
  return kind_ == Kind::P ? parabolic_->orientation() : Orientation::Upper;
}

std::string Ambient::label() const {
  switch (kind_) {
    case Kind::G: return "GL" + std::to_string(n_);
    case Kind::P: return "P" + parabolic_->label();
    case Kind::M: return "M" + parabolic_->label();
  }
  return "?";
}

CosetLabel CosetLabel::of(const RationalMatrix& x, const Ambient& ambient, const PrimeContext& ctx) {
  if (!ambient.contains(x)) throw DomainError("CosetLabel: " + to_string(x) + " is not in " + ambient.label());
  return {coset_representative(x, ctx, ambient.label_orientation())};
}

// ---------------------------------------------------------------- measures

void HeckeMeasure::add(const RationalMatrix& x, const RootPQ& c) {
  if (c.is_zero()) return;
  RationalMatrix key = CosetLabel::of(x, ambient_, ctx_).representative;
  auto it = support_.find(key);
  if (it == support_.end()) {
    support_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) support_.erase(it);
}

RootPQ HeckeMeasure::coefficient(const RationalMatrix& x) const {
  if (!ambient_.contains(x)) return RootPQ(0);
  const auto it = support_.find(CosetLabel::of(x, ambient_, ctx_).representative);
  return it == support_.end() ? RootPQ(0) : it->second;
}

RootPQ HeckeMeasure::total_mass() const {
  RootPQ s(0);
  for (const auto& [x, c] : support_) s += c;
  return s;
}

HeckeMeasure HeckeMeasure::scaled(const RootPQ& c) const {
  HeckeMeasure out(ambient_, ctx_);
  if (c.is_zero()) return out;
  for (const auto& [x, v] : support_) out.support_.emplace(x, v * c);
  return out;
}

HeckeMeasure& HeckeMeasure::operator+=(const HeckeMeasure& o) {
  if (!(ambient_ == o.ambient_) || !(ctx_ == o.ctx_)) throw DomainError("HeckeMeasure: adding measures on different groups");
  for (const auto& [x, c] : o.support_) {
    auto it = support_.find(x);
    if (it == support_.end()) {
      support_.emplace(x, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) support_.erase(it);
    }
  }
  return *this;
}

bool operator==(const HeckeMeasure& a, const HeckeMeasure& b) {
  if (!(a.ambient_ == b.ambient_) || !(a.ctx_ == b.ctx_) || a.support_.size() != b.support_.size()) return false;
  auto ib = b.support_.begin();
  for (const auto& [x, c] : a.support_) {
    if (!equal(x, ib->first) || !(c == ib->second)) return false;
    ++ib;
  }
  return true;
}

bool HeckeMeasure::is_biinvariant() const {
  for (const RationalMatrix& k : congruence_generators(ambient_.n(), ctx_)) {
    if (!ambient_.contains(k)) continue;
    HeckeMeasure moved(ambient_, ctx_);
    for (const auto& [x, c] : support_) moved.add(k * x, c);
    if (!(moved == *this)) return false;
  }
  return true;
}

HeckeMeasure unit_measure(const Ambient& ambient, const PrimeContext& ctx, std::uint64_t guard) {
  const CongruenceQuotient quot(ambient.n(), ctx, guard);
  std::vector<const RationalMatrix*> members;
  for (const auto& k : quot.elements())
    if (ambient.contains(k)) members.push_back(&k);
  HeckeMeasure h(ambient, ctx);
  const RootPQ c(Rational(1) / Rational(static_cast<long>(members.size())));
  for (const auto* k : members) h.add(*k, c);
  return h;
}

HeckeMeasure ad_pullback(const HeckeMeasure& h, const RationalMatrix& g) {
  if (h.ambient().kind() != Ambient::Kind::G) throw DomainError("ad_pullback: ambient must be G");
  if (!gln_zp_membership(g, h.context().p))
    throw LevelError("ad_pullback: " + to_string(g) + " does not normalise K_" + std::to_string(h.context().m));
  const RationalMatrix gi = inverse(g);
  HeckeMeasure out(h.ambient(), h.context());
  for (const auto& [x, c] : h.support()) out.add(g * x * gi, c);
  return out;
}

std::optional<RationalMatrix> coset_meets_P(const CosetLabel& label, const BlockParabolic& p, const PrimeContext& ctx) {
  const RationalMatrix& x = label.representative;
  const RationalMatrix h =
      p.orientation() == Orientation::Upper ? hermite_form(x, ctx.p) : lower_hermite_form(x, ctx.p);
  const RationalMatrix k = reduce_matrix(inverse(h) * x, ctx);
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (!p.in_parabolic(i, j) && !k(i, j).is_zero()) return std::nullopt;
  return h * k;
}

HeckeMeasure restrict_to_P(const HeckeMeasure& h, const BlockParabolic& p) {
  if (h.ambient().kind() != Ambient::Kind::G) throw DomainError("restrict_to_P: ambient must be G");
  HeckeMeasure out(Ambient::parabolic(p), h.context());
  for (const auto& [x, c] : h.support())
    if (auto rep = coset_meets_P(CosetLabel{x}, p, h.context())) out.add(*rep, c);
  return out;
}

HeckeMeasure pushforward_to_M(const HeckeMeasure& h, const BlockParabolic& p) {
  if (!(h.ambient() == Ambient::parabolic(p))) throw DomainError("pushforward_to_M: measure is not on " + p.label());
  HeckeMeasure out(Ambient::levi(p), h.context());
  for (const auto& [x, c] : h.support()) out.add(p.levi_part(x), c);
  return out;
}

HeckeMeasure res_unnormalized(const HeckeMeasure& h, const BlockParabolic& p,
                              const std::vector<RationalMatrix>& transversal) {
  HeckeMeasure out(Ambient::levi(p), h.context());
  for (const RationalMatrix& g : transversal) out += pushforward_to_M(restrict_to_P(ad_pullback(h, g), p), p);
  return out;
}

HeckeMeasure res_unnormalized(const HeckeMeasure& h, const BlockParabolic& p, std::uint64_t guard) {
  return res_unnormalized(h, p, transversal_P_G_K(p, h.context(), guard));
}

HeckeMeasure normalize_by_modulus(const HeckeMeasure& res, const BlockParabolic& p, long exponent) {
  HeckeMeasure out(res.ambient(), res.context());
  for (const auto& [x, c] : res.support())
    out.add(x, c * padic_norm_halfpower(modulus_lambda(p, x), res.context().p, exponent));
  return out;
}

HeckeMeasure res_normalized(const HeckeMeasure& h, const BlockParabolic& p, std::uint64_t guard) {
  return normalize_by_modulus(res_unnormalized(h, p, guard), p);
}

// ---------------------------------------------------------------- bases

namespace {

// Smallest p-adic valuation among the k x k minors.
long minor_valuation(const RationalMatrix& g, int k, long p) {
  const int n = static_cast<int>(g.rows());
  std::optional<long> best;
  std::vector<int> rows(k), cols(k);
  std::vector<bool> rmask(n, false), cmask(n, false);
  std::fill(rmask.begin(), rmask.begin() + k, true);
  do {
    std::fill(cmask.begin(), cmask.end(), false);
    std::fill(cmask.begin(), cmask.begin() + k, true);
    do {
      RationalMatrix sub(k, k);
      int a = 0;
      for (int i = 0; i < n; ++i) {
        if (!rmask[i]) continue;
        int b = 0;
        for (int j = 0; j < n; ++j)
          if (cmask[j]) sub(a, b++) = g(i, j);
        ++a;
      }
      const auto v = padic_valuation(determinant(sub), p);
      if (v && (!best || *v < *best)) best = v;
    } while (std::prev_permutation(cmask.begin(), cmask.end()));
  } while (std::prev_permutation(rmask.begin(), rmask.end()));
  return best.value_or(0);
}

}  // namespace

std::vector<RationalMatrix> double_coset_left_cosets(const std::vector<int>& exponents, long p) {
  const int n = static_cast<int>(exponents.size());
  std::vector<int> sorted = exponents;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw DomainError("double_coset_left_cosets: exponents must be non-negative");
  std::vector<long> target(n + 1, 0);
  for (int k = 1; k <= n; ++k) target[k] = target[k - 1] + sorted[k - 1];

  // diagonal exponent vectors with the right total; the minor test keeps the correct double coset
  std::vector<std::vector<int>> diagonals;
  std::vector<int> cur;
  const int total = static_cast<int>(target[n]);
  auto rec = [&](auto&& self, int rest) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if (rest == 0) diagonals.push_back(cur);
      return;
    }
    for (int e = 0; e <= std::min(rest, sorted.back()); ++e) {
      cur.push_back(e);
      self(self, rest - e);
      cur.pop_back();
    }
  };
  rec(rec, total);

  std::vector<RationalMatrix> out;
  for (const auto& perm : diagonals) {
    // free entries (i,j), i<j, range [0, p^{perm[i]})
    std::vector<std::pair<int, int>> slots;
    std::vector<long> ranges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        slots.emplace_back(i, j);
        ranges.push_back(ipow(p, static_cast<unsigned long>(perm[i])).get_si());
      }
    std::vector<long> digits(slots.size(), 0);
    while (true) {
      RationalMatrix h = zeros<Rational>(n, n);
      for (int i = 0; i < n; ++i) h(i, i) = Rational(ipow(p, static_cast<unsigned long>(perm[i])));
      for (std::size_t s = 0; s < slots.size(); ++s) h(slots[s].first, slots[s].second) = Rational(digits[s]);
      bool ok = true;
      for (int k = 1; k < n && ok; ++k) ok = minor_valuation(h, k, p) == target[k];
      if (ok) out.push_back(h);
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == ranges[s]) digits[s++] = 0;
      if (s == digits.size()) break;
    }
  }
  return out;
}

HeckeMeasure double_coset_indicator(const std::vector<int>& exponents, const PrimeContext& ctx, std::uint64_t guard) {
  const int n = static_cast<int>(exponents.size());
  const CongruenceQuotient quot(n, ctx, guard);
  HeckeMeasure h(Ambient::group(n), ctx);
  for (const RationalMatrix& gamma : double_coset_left_cosets(exponents, ctx.p))
    for (const RationalMatrix& k : quot.elements()) h.add(gamma * k, RootPQ(1));
  return h;
}

std::vector<HeckeMeasure> biinvariant_basis(int n, const PrimeContext& ctx,
                                            const std::vector<std::vector<int>>& double_cosets, std::uint64_t guard) {
  HeckeMeasure all(Ambient::group(n), ctx);
  for (const auto& e : double_cosets) {
    if (static_cast<int>(e.size()) != n) throw DomainError("biinvariant_basis: exponent vector of wrong length");
    all += double_coset_indicator(e, ctx, guard);
  }
  const auto gens = congruence_generators(n, ctx);
  std::set<RationalMatrix, MatrixLess> seen;
  std::vector<HeckeMeasure> basis;
  for (const auto& [x, c] : all.support()) {
    if (seen.count(x)) continue;
    HeckeMeasure orbit(Ambient::group(n), ctx);
    std::deque<RationalMatrix> queue{x};
    seen.insert(x);
    while (!queue.empty()) {
      const RationalMatrix y = queue.front();
      queue.pop_front();
      orbit.add(y, RootPQ(1));
      for (const RationalMatrix& k : gens) {
        RationalMatrix z = coset_representative(k * y, ctx);
        if (seen.insert(z).second) queue.push_back(std::move(z));
      }
    }
    basis.push_back(std::move(orbit));
  }
  return basis;
}

bool is_ad_invariant(const HeckeMeasure& h, std::uint64_t guard) {
  for (const RationalMatrix& k : enumerate_transversal_K0_mod_Km(h.ambient().n(), h.context(), guard))
    if (!(ad_pullback(h, k) == h)) return false;
  return true;
}

std::vector<HeckeMeasure> ad_invariant_basis(const std::vector<HeckeMeasure>& basis, std::uint64_t guard) {
  if (basis.empty()) return {};
  const auto ks = enumerate_transversal_K0_mod_Km(basis.front().ambient().n(), basis.front().context(), guard);
  auto find_element = [&](const RationalMatrix& label) -> std::size_t {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].support().count(label)) return i;
    throw DomainError("ad_invariant_basis: basis is not Ad(K_0)-stable");
  };
  std::vector<bool> used(basis.size(), false);
  std::vector<HeckeMeasure> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (used[i]) continue;
    HeckeMeasure sum(basis[i].ambient(), basis[i].context());
    for (const RationalMatrix& k : ks) {
      const HeckeMeasure moved = ad_pullback(basis[i], k);
      const std::size_t j = find_element(moved.support().begin()->first);
      if (!used[j]) {
        used[j] = true;
        sum += basis[j];
      }
    }
    out.push_back(std::move(sum));
  }
  return out;
}

// ---------------------------------------------------------------- json

nlohmann::json to_json(const HeckeMeasure& h) {
  nlohmann::json amb;
  const Ambient& a = h.ambient();
  amb["kind"] = a.kind() == Ambient::Kind::G ? "G" : a.kind() == Ambient::Kind::P ? "P" : "M";
  amb["n"] = a.n();
  if (a.kind() != Ambient::Kind::G) {
    amb["blocks"] = a.parabolic_subgroup().blocks();
    amb["orientation"] = to_string(a.parabolic_subgroup().orientation());
  }
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [x, c] : h.support()) support.push_back({{"representative", to_strings(x)}, {"coefficient", c.str()}});
  return {{"ambient", amb}, {"p", h.context().p}, {"m", h.context().m}, {"support", support}};
}

HeckeMeasure hecke_from_json(const nlohmann::json& j) {
  const auto& amb = j.at("ambient");
  const std::string kind = amb.at("kind");
  const int n = amb.at("n");
  std::optional<Ambient> ambient;
  if (kind == "G") {
    ambient = Ambient::group(n);
  } else {
    BlockParabolic p(amb.at("blocks").get<std::vector<int>>(), parse_orientation(amb.at("orientation")));
    if (p.n() != n) throw DomainError("hecke_from_json: blocks do not sum to n");
    if (kind == "P") ambient = Ambient::parabolic(p);
    else if (kind == "M") ambient = Ambient::levi(p);
    else throw DomainError("hecke_from_json: unknown ambient kind '" + kind + "'");
  }
  HeckeMeasure h(*ambient, PrimeContext(j.at("p").get<long>(), j.at("m").get<int>()));
  for (const auto& row : j.at("support"))
    h.add(from_strings(row.at("representative").get<std::vector<std::vector<std::string>>>()),
          parse_root_p(row.at("coefficient").get<std::string>()));
  return h;
}

}  // namespace parind
