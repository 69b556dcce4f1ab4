#include "parind/orbital.hpp"

#include <sstream>

namespace parind {

RegularElement::RegularElement(std::vector<Rational> eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
    if (eigenvalues_[i].is_zero()) throw DomainError("RegularElement: zero eigenvalue");
    for (std::size_t j = 0; j < i; ++j)
      if (eigenvalues_[i] == eigenvalues_[j]) throw DomainError("RegularElement: eigenvalues must be distinct");
  }
  gamma_ = diagonal(eigenvalues_);
}

RegularElement RegularElement::grid_point(long p, long v1, long v2) {
  const Rational a = pow(Rational(p), v1);
  Rational b = pow(Rational(p), v2);
  if (v1 == v2) b *= Rational(1 + p);
  return RegularElement({a, b});
}

std::vector<long> RegularElement::valuations(long p) const {
  std::vector<long> out;
  for (const auto& e : eigenvalues_) out.push_back(*padic_valuation(e, p));
  return out;
}

std::string RegularElement::str() const {
  std::ostringstream os;
  os << "diag(";
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i) os << (i ? "," : "") << eigenvalues_[i];
  os << ')';
  return os.str();
}

std::vector<RegularElement> regular_grid(long p, long lo, long hi) {
  std::vector<RegularElement> out;
  for (long v1 = lo; v1 <= hi; ++v1)
    for (long v2 = lo; v2 <= hi; ++v2) out.push_back(RegularElement::grid_point(p, v1, v2));
  return out;
}

namespace {

Rational abs_p(const Rational& x, long p) { return pow(Rational(p), -*padic_valuation(x, p)); }

OrbitalValue torus_orbital(const HeckeMeasure& h, const RegularElement& gamma) {
  OrbitalValue out{h.coefficient(gamma.matrix()), {}, {}};
  out.normalization.discriminant_weighted = false;
  out.certificate.reason = "torus: value of the density at gamma";
  out.certificate.classes_enumerated = 1;
  return out;
}

OrbitalValue gl2_orbital(const HeckeMeasure& h, const RegularElement& gamma) {
  const PrimeContext& ctx = h.context();
  const long p = ctx.p;
  OrbitalValue out{RootPQ(0), {}, {}};
  if (h.empty()) {
    out.certificate.reason = "empty support";
    return out;
  }
  long lmin = 0;
  bool first = true;
  for (const auto& [x, c] : h.support()) {
    const long v = *min_entry_valuation(x, p);
    if (first || v < lmin) lmin = v;
    first = false;
  }
  out.certificate.support_min_valuation = lmin;
  const Rational a = gamma.eigenvalues()[0], b = gamma.eigenvalues()[1];
  if (*padic_valuation(a, p) < lmin || *padic_valuation(b, p) < lmin) {
    out.certificate.reason = "an eigenvalue has valuation below every support entry";
    return out;
  }
  // u(x)^{-1} gamma u(x) has off-diagonal entry x (a - b); it must have valuation >= lmin.
  const long kmax = std::max(0L, *padic_valuation(a - b, p) - lmin);
  out.certificate.max_k = kmax;
  out.certificate.reason = "k > max_k puts v(x(a-b)) below the support window";

  const CongruenceQuotient quot(2, ctx);
  const long pm = ctx.modulus().get_si();
  RootPQ total(0);
  for (long k = 0; k <= kmax; ++k) {
    const Rational x = k == 0 ? Rational(0) : pow(Rational(p), -k);
    const RationalMatrix u = make_matrix({{1, x}, {0, 1}});
    const RationalMatrix conj = inverse(u) * gamma.matrix() * u;
    // residues of S_u = u^{-1} T u cap K_0
    std::vector<RationalMatrix> stab;
    for (long a1 = 0; a1 < pm; ++a1) {
      if (a1 % p == 0) continue;
      if (k == 0) {
        for (long b1 = 0; b1 < pm; ++b1)
          if (b1 % p != 0) stab.push_back(diagonal({Rational(a1), Rational(b1)}));
      } else {
        // b' = a' + p^k t, off-diagonal entry x (a' - b') = -t
        for (long t = 0; t < pm; ++t)
          stab.push_back(make_matrix({{a1, -t}, {0, Rational(a1) + pow(Rational(p), k) * Rational(t)}}));
      }
    }
    std::vector<bool> seen(quot.size(), false);
    const RootPQ volume(pow(Rational(p), k));
    for (std::size_t idx = 0; idx < quot.size(); ++idx) {
      if (seen[idx]) continue;
      for (const auto& s : stab) seen[quot.index_of(s * quot.elements()[idx])] = true;
      ++out.certificate.classes_enumerated;
      const RationalMatrix& e = quot.elements()[idx];
      const RootPQ f = h.coefficient(inverse(e) * conj * e);
      if (!f.is_zero()) total += f * volume;
    }
  }
  const Rational delta = discriminant_delta(SubgroupSpec::torus(2), gamma.matrix());
  out.value = total * RootPQ(abs_p(delta, p));
  return out;
}

}  // namespace

OrbitalValue orbital_integral(const HeckeMeasure& h, const RegularElement& gamma) {
  const int n = h.ambient().n();
  if (static_cast<int>(gamma.eigenvalues().size()) != n) throw DomainError("orbital_integral: dimension mismatch");
  switch (h.ambient().kind()) {
    case Ambient::Kind::M: {
      const auto& blocks = h.ambient().parabolic_subgroup().blocks();
      if (static_cast<int>(blocks.size()) != n)
        throw UnsupportedError("orbital_integral: only the diagonal torus is supported as a Levi");
      return torus_orbital(h, gamma);
    }
    case Ambient::Kind::G:
      if (n != 2) throw UnsupportedError("orbital_integral: only GL_2 is supported for measures on G");
      return gl2_orbital(h, gamma);
    case Ambient::Kind::P: break;
  }
  throw UnsupportedError("orbital_integral: measures on P are not supported");
}

OrbitalValue stable_orbital(const HeckeMeasure& h, const RegularElement& gamma) {
  OrbitalValue v = orbital_integral(h, gamma);
  v.normalization.rational_torus_forms = 1;
  return v;
}

DescentRecord descent_sides(const HeckeMeasure& h, const RegularElement& gamma, const BlockParabolic& p,
                            long discriminant_exponent) {
  const RootPQ lhs = orbital_integral(h, gamma).value;
  const RootPQ om = orbital_integral(res_normalized(h, p), gamma).value;
  const Rational delta = discriminant_delta(SubgroupSpec::levi(p), gamma.matrix());
  return {lhs, padic_norm_halfpower(delta, h.context().p, discriminant_exponent) * om};
}

bool descent_check(const HeckeMeasure& h, const RegularElement& gamma, const BlockParabolic& p,
                   long discriminant_exponent) {
  return descent_sides(h, gamma, p, discriminant_exponent).holds();
}

Matrix<RootPQ> orbital_matrix(const std::vector<HeckeMeasure>& hs, const std::vector<RegularElement>& gammas) {
  Matrix<RootPQ> out(static_cast<int>(hs.size()), static_cast<int>(gammas.size()));
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < gammas.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = orbital_integral(hs[i], gammas[j]).value;
  return out;
}

int separation_rank(const std::vector<HeckeMeasure>& hs, const std::vector<RegularElement>& gammas) {
  return rank(orbital_matrix(hs, gammas));
}

Matrix<RootPQ> character_matrix(const std::vector<HeckeMeasure>& hs, const std::vector<UnramifiedCharacter>& chis,
                                const BlockParabolic& p) {
  Matrix<RootPQ> out(static_cast<int>(hs.size()), static_cast<int>(chis.size()));
  if (hs.empty()) return out;
  const InducedModel model(p, hs.front().context());
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < chis.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = trace_induced(hs[i], chis[j], model, true);
  return out;
}

Matrix<RootPQ> joint_annihilator(const Matrix<RootPQ>& a, const Matrix<RootPQ>& b) {
  if (a.rows() != b.rows()) throw DomainError("joint_annihilator: row counts differ");
  Matrix<RootPQ> t(a.cols() + b.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) t(a.cols() + j, i) = b(i, j);
  }
  return nullspace(t);
}

}  // namespace parind
