#pragma once

#include "parind/level.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parind {

/// Group carrying a coset measure: G = GL_n, a block parabolic P, or its Levi M.
class Ambient {
public:
  enum class Kind { G, P, M };

  static Ambient group(int n) { return Ambient(Kind::G, n, std::nullopt); }
  static Ambient parabolic(const BlockParabolic& p) { return Ambient(Kind::P, p.n(), p); }
  static Ambient levi(const BlockParabolic& p) { return Ambient(Kind::M, p.n(), p); }

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const BlockParabolic& parabolic_subgroup() const;
  bool contains(const RationalMatrix& g) const;
  /// Hermite orientation that keeps representatives inside the ambient group.
  Orientation label_orientation() const;
  std::string label() const;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.parabolic_ == b.parabolic_;
  }

private:
  Ambient(Kind k, int n, std::optional<BlockParabolic> p) : kind_(k), n_(n), parabolic_(std::move(p)) {}
  Kind kind_;
  int n_;
  std::optional<BlockParabolic> parabolic_;
};

/// Canonical label of a level-m coset x(K_m cap H) inside ambient H.
struct CosetLabel {
  RationalMatrix representative;

  static CosetLabel of(const RationalMatrix& x, const Ambient& ambient, const PrimeContext& ctx);
};

struct MatrixLess {
  bool operator()(const RationalMatrix& a, const RationalMatrix& b) const { return lex_compare(a, b) < 0; }
};

/// h = sum_x c_x * (Haar measure on x(K_m cap H)), with K_m cap H of mass 1.
class HeckeMeasure {
public:
  using Support = std::map<RationalMatrix, RootPQ, MatrixLess>;

  HeckeMeasure(Ambient ambient, PrimeContext ctx) : ambient_(std::move(ambient)), ctx_(ctx) {}

  const Ambient& ambient() const { return ambient_; }
  const PrimeContext& context() const { return ctx_; }
  const Support& support() const { return support_; }
  bool empty() const { return support_.empty(); }

  /// Adds c at the coset of x (x is canonicalised).  DomainError if x is not in the ambient group.
  void add(const RationalMatrix& x, const RootPQ& c);
  /// Coefficient at the coset of x (zero when absent).
  RootPQ coefficient(const RationalMatrix& x) const;
  RootPQ total_mass() const;

  HeckeMeasure scaled(const RootPQ& c) const;
  HeckeMeasure& operator+=(const HeckeMeasure& o);
  friend HeckeMeasure operator+(HeckeMeasure a, const HeckeMeasure& b) { return a += b; }
  friend HeckeMeasure operator-(const HeckeMeasure& a, const HeckeMeasure& b) { return a + b.scaled(RootPQ(-1)); }
  friend bool operator==(const HeckeMeasure& a, const HeckeMeasure& b);

  /// Left K_m invariance, checked on congruence_generators.
  bool is_biinvariant() const;

private:
  Ambient ambient_;
  PrimeContext ctx_;
  Support support_;
};

HeckeMeasure unit_measure(const Ambient& ambient, const PrimeContext& ctx, std::uint64_t guard = kDefaultGuard);

/// Pushforward along x -> g x g^{-1}.  LevelError unless g lies in K_0.
HeckeMeasure ad_pullback(const HeckeMeasure& h, const RationalMatrix& g);

/// Representative of x K_m cap P when nonempty.
std::optional<RationalMatrix> coset_meets_P(const CosetLabel& label, const BlockParabolic& p, const PrimeContext& ctx);

HeckeMeasure restrict_to_P(const HeckeMeasure& h, const BlockParabolic& p);
HeckeMeasure pushforward_to_M(const HeckeMeasure& h, const BlockParabolic& p);

/// Unnormalised constant term: sum over A of p_!(restriction of the g-conjugate to P).
HeckeMeasure res_unnormalized(const HeckeMeasure& h, const BlockParabolic& p,
                              const std::vector<RationalMatrix>& transversal);
HeckeMeasure res_unnormalized(const HeckeMeasure& h, const BlockParabolic& p, std::uint64_t guard = kDefaultGuard);

/// Multiplies each coefficient at x(K_m cap M) by |lambda_P(x)|^{1/2}.
HeckeMeasure normalize_by_modulus(const HeckeMeasure& res, const BlockParabolic& p, long exponent = 1);
HeckeMeasure res_normalized(const HeckeMeasure& h, const BlockParabolic& p, std::uint64_t guard = kDefaultGuard);

/// Right cosets gamma K_0 contained in K_0 diag(p^a) K_0, as Hermite forms.
std::vector<RationalMatrix> double_coset_left_cosets(const std::vector<int>& exponents, long p);

/// Indicator of K_0 diag(p^a) K_0 (coefficient 1 on every K_m-coset).
HeckeMeasure double_coset_indicator(const std::vector<int>& exponents, const PrimeContext& ctx,
                                    std::uint64_t guard = kDefaultGuard);

/// Indicators of the K_m double cosets inside the given K_0 double cosets.
std::vector<HeckeMeasure> biinvariant_basis(int n, const PrimeContext& ctx,
                                            const std::vector<std::vector<int>>& double_cosets,
                                            std::uint64_t guard = kDefaultGuard);

/// Invariance under Ad(k) for every k in the K_0 / K_m transversal.
bool is_ad_invariant(const HeckeMeasure& h, std::uint64_t guard = kDefaultGuard);

/// Orbit sums of the Ad(K_0) action on a basis of K_m double coset indicators.
std::vector<HeckeMeasure> ad_invariant_basis(const std::vector<HeckeMeasure>& basis, std::uint64_t guard = kDefaultGuard);

nlohmann::json to_json(const HeckeMeasure& h);
HeckeMeasure hecke_from_json(const nlohmann::json& j);

}  // namespace parind
