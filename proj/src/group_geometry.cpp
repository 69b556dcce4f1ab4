#include "parind/group_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace parind {

std::string to_string(Orientation o) { return o == Orientation::Upper ? "upper" : "lower"; }

Orientation parse_orientation(const std::string& s) {
  if (s == "upper") return Orientation::Upper;
  if (s == "lower") return Orientation::Lower;
  throw std::invalid_argument("orientation must be 'upper' or 'lower', got '" + s + "'");
}

// ---------------------------------------------------------------- parabolics

BlockParabolic::BlockParabolic(std::vector<int> blocks, Orientation orientation)
    : blocks_(std::move(blocks)), orientation_(orientation) {
  if (blocks_.empty()) throw DomainError("BlockParabolic: empty composition");
  for (int b : blocks_) {
    if (b < 1) throw DomainError("BlockParabolic: blocks must be positive");
    starts_.push_back(n_);
    for (int i = 0; i < b; ++i) block_of_.push_back(static_cast<int>(starts_.size()) - 1);
    n_ += b;
  }
}

BlockParabolic BlockParabolic::borel(int n, Orientation o) { return BlockParabolic(std::vector<int>(n, 1), o); }

std::vector<std::vector<int>> BlockParabolic::compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

BlockParabolic BlockParabolic::opposite() const {
  return BlockParabolic(blocks_, orientation_ == Orientation::Upper ? Orientation::Lower : Orientation::Upper);
}

bool BlockParabolic::in_parabolic(int i, int j) const {
  return orientation_ == Orientation::Upper ? block_of_[i] <= block_of_[j] : block_of_[i] >= block_of_[j];
}

int BlockParabolic::radical_dimension() const {
  int d = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) d += in_radical(i, j) ? 1 : 0;
  return d;
}

bool BlockParabolic::contains(const RationalMatrix& g) const {
  if (g.rows() != n_ || g.cols() != n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!in_parabolic(i, j) && !g(i, j).is_zero()) return false;
  return !determinant(g).is_zero();
}

bool BlockParabolic::levi_contains(const RationalMatrix& g) const {
  if (g.rows() != n_ || g.cols() != n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!in_levi(i, j) && !g(i, j).is_zero()) return false;
  return !determinant(g).is_zero();
}

RationalMatrix BlockParabolic::levi_part(const RationalMatrix& g) const {
  RationalMatrix m = g;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!in_levi(i, j)) m(i, j) = Rational(0);
  return m;
}

RationalMatrix BlockParabolic::block(const RationalMatrix& g, int b) const {
  const int s = starts_[b];
  const int len = blocks_[b];
  return g.block(s, s, len, len);
}

std::string BlockParabolic::label() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i];
  os << ")/" << to_string(orientation_);
  return os.str();
}

// ---------------------------------------------------------------- subgroups

bool SubgroupSpec::has_coordinate(int i, int j) const {
  switch (kind_) {
    case Kind::Whole: return true;
    case Kind::Torus: return i == j;
    case Kind::Levi: return parabolic_->in_levi(i, j);
    case Kind::Parabolic: return parabolic_->in_parabolic(i, j);
    case Kind::Radical: return parabolic_->in_radical(i, j);
  }
  return false;
}

std::vector<std::pair<int, int>> SubgroupSpec::coordinates() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (has_coordinate(i, j)) out.emplace_back(i, j);
  return out;
}

bool SubgroupSpec::contains(const RationalMatrix& g) const {
  if (g.rows() != n_ || g.cols() != n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const bool allowed = kind_ == Kind::Radical ? (parabolic_->in_radical(i, j) || i == j) : has_coordinate(i, j);
      if (!allowed && !g(i, j).is_zero()) return false;
      if (kind_ == Kind::Radical && parabolic_->in_levi(i, j) && !(g(i, j) == Rational(i == j ? 1 : 0)))
        return false;
    }
  return !determinant(g).is_zero();
}

std::string SubgroupSpec::label() const {
  switch (kind_) {
    case Kind::Whole: return "G";
    case Kind::Torus: return "T";
    case Kind::Levi: return "M" + parabolic_->label();
    case Kind::Parabolic: return "P" + parabolic_->label();
    case Kind::Radical: return "U" + parabolic_->label();
  }
  return "?";
}

// ---------------------------------------------------------------- invariants

ChevalleyPoint chevalley_map(const RationalMatrix& g) {
  const int n = static_cast<int>(g.rows());
  if (determinant(g).is_zero()) throw DomainError("chevalley_map: singular matrix");
  // Faddeev-LeVerrier
  ChevalleyPoint out;
  RationalMatrix mk = identity<Rational>(n);
  for (int k = 1; k <= n; ++k) {
    const RationalMatrix am = g * mk;
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += am(i, i);
    const Rational c = -tr / Rational(k);
    out.coefficients.push_back(k % 2 ? -c : c);
    mk = am;
    for (int i = 0; i < n; ++i) mk(i, i) += c;
  }
  return out;
}

RationalMatrix ad_matrix(const RationalMatrix& g) {
  const int n = static_cast<int>(g.rows());
  const RationalMatrix gi = inverse(g);
  RationalMatrix ad(n * n, n * n);
  // Ad(g) E_kl = g E_kl g^{-1}, whose (i,j) entry is g(i,k) * g^{-1}(l,j).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) ad(i * n + j, k * n + l) = g(i, k) * gi(l, j);
  return ad;
}

namespace {

RationalMatrix restrict_to(const RationalMatrix& ad, const std::vector<int>& idx) {
  const int d = static_cast<int>(idx.size());
  RationalMatrix out(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out(a, b) = ad(idx[a], idx[b]);
  return out;
}

}  // namespace

Rational relative_discriminant(const SubgroupSpec& outer, const SubgroupSpec& inner, const RationalMatrix& g) {
  const int n = outer.n();
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (outer.has_coordinate(i, j) && !inner.has_coordinate(i, j)) idx.push_back(i * n + j);
  if (idx.empty()) return Rational(1);
  RationalMatrix q = restrict_to(ad_matrix(inverse(g)), idx);
  for (int a = 0; a < q.rows(); ++a) q(a, a) -= Rational(1);
  return determinant(q);
}

Rational discriminant_delta(const SubgroupSpec& h, const RationalMatrix& g) {
  if (!h.contains(g)) throw DomainError("discriminant_delta: element not in " + h.label());
  return relative_discriminant(SubgroupSpec::whole(h.n()), h, g);
}

Rational modulus_lambda(const BlockParabolic& p, const RationalMatrix& g) {
  if (!p.contains(g)) throw DomainError("modulus_lambda: element not in " + p.label());
  std::vector<int> idx;
  const int n = p.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.in_parabolic(i, j)) idx.push_back(i * n + j);
  return determinant(restrict_to(ad_matrix(g), idx));
}

bool is_regular(const SubgroupSpec& h, const RationalMatrix& g) { return !discriminant_delta(h, g).is_zero(); }

bool parabolic_discriminant_check(const BlockParabolic& p, const RationalMatrix& m) {
  if (!p.levi_contains(m)) throw DomainError("parabolic_discriminant_check: element not in the Levi of " + p.label());
  const Rational dp = discriminant_delta(SubgroupSpec::parabolic(p), m);
  const Rational dm = discriminant_delta(SubgroupSpec::levi(p), m);
  const Rational lam = modulus_lambda(p, m);
  const Rational sign(p.radical_dimension() % 2 == 0 ? 1 : -1);
  return dp * dp == sign * dm * lam;
}

// ---------------------------------------------------------------- Iwasawa / Hermite

RationalMatrix hermite_form(const RationalMatrix& g, long p) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n) throw DomainError("hermite_form: non-square matrix");
  RationalMatrix a = g;
  std::vector<long> exps(n, 0);
  for (int r = n - 1; r >= 0; --r) {
    int pivot = -1;
    long best = 0;
    for (int c = 0; c <= r; ++c) {
      const auto v = padic_valuation(a(r, c), p);
      if (v && (pivot < 0 || *v <= best)) {
        pivot = c;
        best = *v;
      }
    }
    if (pivot < 0) throw DomainError("hermite_form: singular matrix");
    if (pivot != r) a.col(pivot).swap(a.col(r));
    const Rational target = pow(Rational(p), best);
    const Rational unit = target / a(r, r);
    a.col(r) *= unit;
    for (int c = 0; c < r; ++c) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / a(r, r);
      a.col(c) -= f * a.col(r);
    }
    exps[r] = best;
  }
  for (int j = 1; j < n; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      const Rational reduced = canonical_mod(a(i, j), p, exps[i]);
      if (reduced == a(i, j)) continue;
      const Rational f = (a(i, j) - reduced) / a(i, i);
      a.col(j) -= f * a.col(i);
    }
  }
  return a;
}

namespace {

RationalMatrix long_weyl(int n) {
  RationalMatrix w = zeros<Rational>(n, n);
  for (int i = 0; i < n; ++i) w(i, n - 1 - i) = Rational(1);
  return w;
}

}  // namespace

RationalMatrix lower_hermite_form(const RationalMatrix& g, long p) {
  const RationalMatrix w = long_weyl(static_cast<int>(g.rows()));
  return w * hermite_form(w * g * w, p) * w;
}

IwasawaFactors iwasawa_decompose(const RationalMatrix& g, const BlockParabolic& par, long prime) {
  if (determinant(g).is_zero()) throw DomainError("iwasawa_decompose: singular matrix");
  RationalMatrix q = par.orientation() == Orientation::Upper ? hermite_form(g, prime) : lower_hermite_form(g, prime);
  RationalMatrix k = inverse(q) * g;
  return {std::move(q), std::move(k)};
}

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0);
  for (int x : parts_)
    if (x < 0) throw DomainError("Partition: negative part");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition();
  for (int k = 1; k <= parts_.front(); ++k)
    t.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [k](int x) { return x >= k; })));
  return Partition(std::move(t));
}

bool Partition::dominates(const Partition& other) const {
  if (size() != other.size()) throw DomainError("Partition::dominates: sizes differ");
  int a = 0, b = 0;
  const std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < parts_.size() ? parts_[i] : 0;
    b += i < other.parts_.size() ? other.parts_[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::vector<Partition> Partition::all(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(rest, max_part); x >= 1; --x) {
      cur.push_back(x);
      self(self, rest - x, x);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string digits;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || c == ')' || c == ' ') {
      if (!digits.empty()) parts.push_back(std::stoi(digits));
      digits.clear();
    } else if (c != '(') {
      throw std::invalid_argument("bad partition '" + s + "'");
    }
  }
  if (!digits.empty()) parts.push_back(std::stoi(digits));
  return Partition(std::move(parts));
}

Partition jordan_type(const FFMatrix& u) {
  const int n = u.n();
  const FFMatrix nil = u - FFMatrix::identity(n, u.q());
  std::vector<int> ranks{n};
  FFMatrix power = FFMatrix::identity(n, u.q());
  for (int k = 1; k <= n; ++k) {
    power = power * nil;
    ranks.push_back(power.rank());
  }
  if (ranks.back() != 0) throw DomainError("jordan_type: matrix is not unipotent: " + u.str());
  // number of blocks of size >= k is rank(N^{k-1}) - rank(N^k)
  std::vector<int> conj;
  for (int k = 1; k <= n; ++k) conj.push_back(ranks[k - 1] - ranks[k]);
  return Partition(std::move(conj)).transpose();
}

}  // namespace parind
