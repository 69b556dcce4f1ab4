#include "parind/characters.hpp"

#include <sstream>

namespace parind {

UnramifiedCharacter::UnramifiedCharacter(std::vector<Rational> z) : z_(std::move(z)) {
  if (z_.empty()) throw DomainError("UnramifiedCharacter: no Satake parameters");
  for (const auto& x : z_)
    if (x.is_zero()) throw DomainError("UnramifiedCharacter: Satake parameters must be nonzero");
}

Rational UnramifiedCharacter::operator()(const RationalMatrix& m, const BlockParabolic& p, long prime) const {
  if (z_.size() != p.blocks().size())
    throw DomainError("UnramifiedCharacter: " + std::to_string(z_.size()) + " parameters for " + p.label());
  Rational value(1);
  for (std::size_t b = 0; b < z_.size(); ++b) {
    const auto v = padic_valuation(determinant(p.block(m, static_cast<int>(b))), prime);
    if (!v) throw DomainError("UnramifiedCharacter: singular block");
    value *= pow(z_[b], *v);
  }
  return value;
}

std::string UnramifiedCharacter::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < z_.size(); ++i) os << (i ? "," : "") << z_[i];
  os << ')';
  return os.str();
}

InducedModel::InducedModel(const BlockParabolic& p, const PrimeContext& c, std::uint64_t guard)
    : parabolic(p), ctx(c), basis(transversal_P_G_K(p, c, guard)) {}

RootPQ character_pairing(const UnramifiedCharacter& chi, const HeckeMeasure& h) {
  if (h.ambient().kind() != Ambient::Kind::M) throw DomainError("character_pairing: measure must live on a Levi");
  const BlockParabolic& p = h.ambient().parabolic_subgroup();
  RootPQ s(0);
  for (const auto& [x, c] : h.support()) s += c * RootPQ(chi(x, p, h.context().p));
  return s;
}

Matrix<RootPQ> hecke_action_matrix(const HeckeMeasure& h, const UnramifiedCharacter& chi, const InducedModel& model,
                                   bool normalized) {
  if (h.ambient().kind() != Ambient::Kind::G || h.ambient().n() != model.parabolic.n())
    throw DomainError("hecke_action_matrix: measure must live on GL_n of the model");
  if (!(h.context() == model.ctx)) throw DomainError("hecke_action_matrix: level mismatch");
  const BlockParabolic& p = model.parabolic;
  const long prime = model.ctx.p;
  const int d = static_cast<int>(model.dimension());
  Matrix<RootPQ> out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = RootPQ(0);
  for (int i = 0; i < d; ++i) {
    for (const auto& [x, c] : h.support()) {
      const auto [q, k] = iwasawa_decompose(model.basis[i] * x, p, prime);
      const std::size_t j = match_transversal(k, model.basis, p, model.ctx);
      RootPQ tau(chi(p.levi_part(q), p, prime));
      if (normalized) tau *= padic_norm_halfpower(modulus_lambda(p, q), prime, 1);
      out(i, static_cast<int>(j)) += c * tau;
    }
  }
  return out;
}

RootPQ trace_induced(const HeckeMeasure& h, const UnramifiedCharacter& chi, const InducedModel& model,
                     bool normalized) {
  const Matrix<RootPQ> a = hecke_action_matrix(h, chi, model, normalized);
  RootPQ t(0);
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

InducedCharacterRecord induced_character_sides(const HeckeMeasure& h, const UnramifiedCharacter& chi, const InducedModel& model) {
  const HeckeMeasure res = res_unnormalized(h, model.parabolic, model.basis);
  return {trace_induced(h, chi, model, false), character_pairing(chi, res), trace_induced(h, chi, model, true),
          character_pairing(chi, normalize_by_modulus(res, model.parabolic))};
}

bool verify_induced_character(const HeckeMeasure& h, const UnramifiedCharacter& chi, const BlockParabolic& p,
                     const PrimeContext& ctx) {
  return induced_character_sides(h, chi, InducedModel(p, ctx)).holds();
}

}  // namespace parind
