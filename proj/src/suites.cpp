#include "parind/suites.hpp"

#include "parind/characters.hpp"
#include "parind/hecke.hpp"
#include "parind/level.hpp"
#include "parind/orbital.hpp"
#include "parind/saturation.hpp"
#include "parind/unipotent.hpp"

#include <random>
#include <sstream>

namespace parind {

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

namespace {

std::vector<UnramifiedCharacter> characters_of(const RunConfig& c) {
  std::vector<UnramifiedCharacter> out;
  for (const auto& z : c.characters) out.emplace_back(z);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Partition>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

std::string point_str(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
  return s + ")";
}

}  // namespace

Report run_restriction(const RunConfig& c) {
  c.validate();
  const PrimeContext ctx(c.p, c.m);
  const auto basis = biinvariant_basis(c.n, ctx, c.support, c.guard);
  const auto chis = characters_of(c);
  Report r{"restriction", {}};
  std::map<Orientation, std::vector<HeckeMeasure>> normalized;
  for (auto o : c.orientations) {
    const BlockParabolic p(c.blocks, o);
    const auto transversal = transversal_P_G_K(p, ctx, c.guard);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const HeckeMeasure u = res_unnormalized(basis[i], p, transversal);
      const HeckeMeasure v = normalize_by_modulus(u, p);
      normalized[o].push_back(v);
      r.rows.push_back({"res/" + p.label() + "/h" + std::to_string(i),
                        "constant-term",
                        u.ambient() == Ambient::levi(p) && v.ambient() == Ambient::levi(p),
                        {{"measure", to_json(basis[i]).dump()},
                         {"unnormalized", to_json(u).dump()},
                         {"normalized", to_json(v).dump()}}});
    }
  }
  if (normalized.count(Orientation::Upper) && normalized.count(Orientation::Lower)) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (const auto& chi : chis) {
        const RootPQ up = character_pairing(chi, normalized[Orientation::Upper][i]);
        const RootPQ low = character_pairing(chi, normalized[Orientation::Lower][i]);
        r.rows.push_back({"independence/h" + std::to_string(i) + "/chi" + chi.str(),
                          "independence-of-parabolic",
                          up == low,
                          {{"upper", up.str()}, {"lower", low.str()}}});
      }
  }
  return r;
}

Report run_characters(const RunConfig& c) {
  c.validate();
  const PrimeContext ctx(c.p, c.m);
  const auto basis = biinvariant_basis(c.n, ctx, c.support, c.guard);
  const auto chis = characters_of(c);
  Report r{"characters", {}};
  for (auto o : c.orientations) {
    const BlockParabolic p(c.blocks, o);
    const InducedModel model(p, ctx, c.guard);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (const auto& chi : chis) {
        const InducedCharacterRecord rec = induced_character_sides(basis[i], chi, model);
        r.rows.push_back({"trace/" + p.label() + "/h" + std::to_string(i) + "/chi" + chi.str(),
                          "induced-character-identity",
                          rec.holds(),
                          {{"trace", rec.trace.str()},
                           {"pairing", rec.pairing.str()},
                           {"trace_normalized", rec.trace_normalized.str()},
                           {"pairing_normalized", rec.pairing_normalized.str()}}});
      }
  }
  return r;
}

Report run_orbital(const RunConfig& c) {
  c.validate();
  if (c.n != 2 || c.blocks != std::vector<int>{1, 1})
    throw ConfigError("orbital: the orbital suite needs group.n = 2 and group.blocks = 1,1");
  const PrimeContext ctx(c.p, c.m);
  const auto basis = biinvariant_basis(c.n, ctx, c.support, c.guard);
  const auto grid = regular_grid(c.p, c.grid_lo, c.grid_hi);
  const long exponent = c.corrupt_normalization ? 2 : 1;
  Report r{"orbital", {}};
  std::map<Orientation, std::vector<HeckeMeasure>> normalized;
  for (auto o : c.orientations) {
    const BlockParabolic b = BlockParabolic::borel(2, o);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      normalized[o].push_back(res_normalized(basis[i], b, c.guard));
      for (const auto& g : grid) {
        const auto d = descent_sides(basis[i], g, b, exponent);
        r.rows.push_back({"descent/" + b.label() + "/h" + std::to_string(i) + "/" + g.str(),
                          "orbital-descent",
                          d.holds(),
                          {{"group_side", d.lhs.str()}, {"levi_side", d.rhs.str()}}});
      }
    }
  }
  if (normalized.count(Orientation::Upper) && normalized.count(Orientation::Lower)) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (const auto& g : grid) {
        const RootPQ up = orbital_integral(normalized[Orientation::Upper][i], g).value;
        const RootPQ low = orbital_integral(normalized[Orientation::Lower][i], g).value;
        r.rows.push_back({"independence/h" + std::to_string(i) + "/" + g.str(),
                          "independence-of-parabolic",
                          up == low,
                          {{"upper", up.str()}, {"lower", low.str()}}});
      }
  }
  return r;
}

Report run_unipotent(const RunConfig& c) {
  c.validate();
  Report r{"unipotent", {}};
  for (const auto& [n, q] : c.finite_fields) {
    const std::uint64_t count = count_unipotents(n, q, c.guard);
    std::uint64_t expected = 1;
    for (int i = 0; i < n * (n - 1); ++i) expected *= static_cast<std::uint64_t>(q);
    r.rows.push_back({"count/n" + std::to_string(n) + "/q" + std::to_string(q),
                      "unipotent-count",
                      count == expected,
                      {{"count", std::to_string(count)}, {"expected", std::to_string(expected)}}});
    for (const auto& blocks : BlockParabolic::compositions(n))
      for (const auto& parts : block_partition_tuples(blocks)) {
        const InducedSet up = induced_set(BlockParabolic(blocks), parts, q, c.guard);
        const InducedSet low = induced_set(BlockParabolic(blocks, Orientation::Lower), parts, q, c.guard);
        const auto hu = heart(up), hl = heart(low);
        r.rows.push_back({"induced/n" + std::to_string(n) + "/q" + std::to_string(q) + "/" + join(blocks) + "/" +
                              join(parts),
                          "finite-field-induction",
                          up.same_classes(low) && hu == hl && hu.size() == 1,
                          {{"upper", to_json(up).dump()}, {"lower", to_json(low).dump()}}});
      }
  }
  return r;
}

Report run_saturate(const RunConfig& c) {
  c.validate();
  const SearchUniverse u{c.sat_degree, c.sat_height};
  Report r{"saturate", {}};
  const auto var = [](int i, int n) { return Polynomial::variable(i, n); };
  const auto cst = [](long v, int n) { return Polynomial::constant(Rational(v), n); };
  const auto line_minus = [&](const std::vector<long>& pts) {
    ConstructibleSet s = ConstructibleSet::everything(1);
    for (long t : pts) s = s && ConstructibleSet::nonzero_set(var(0, 1) - cst(t, 1));
    return s;
  };
  const auto witness_row = [&](const std::string& id, const std::string& identity, const ConstructibleSet& a,
                               const std::vector<Rational>& x, bool expect) {
    const auto w = sat_prime_member(a, x, u);
    const bool verified = w && verify_witness(*w, a) && w->point() == x;
    r.rows.push_back({id, identity, w.has_value() == expect && (!w || verified),
                      {{"set", a.str()},
                       {"point", point_str(x)},
                       {"witness", w ? to_json(*w).dump() : "none"}}});
  };

  witness_row("cofinite-line/0", "line-subsets", line_minus({0}), {Rational(0)}, true);
  witness_row("cofinite-line/1", "line-subsets", line_minus({0, 1}), {Rational(1)}, true);
  witness_row("finite-line/2", "line-subsets", ConstructibleSet::finite(1, {{Rational(0)}}), {Rational(2)}, false);
  const ConstructibleSet axes = ConstructibleSet::nonzero_set(var(0, 2) * var(1, 2));
  witness_row("axes-complement/origin", "open-dense-cover", axes, {Rational(0), Rational(0)}, true);
  const ConstructibleSet parabola = ConstructibleSet::zero_set(var(0, 2) * var(0, 2) - var(1, 2)) &&
                                    ConstructibleSet::nonzero_set(var(0, 2) - cst(1, 2));
  if (u.degree >= 2) witness_row("parabola/puncture", "curve-witness", parabola, {Rational(1), Rational(1)}, true);

  const bool product = product_rule_check(line_minus({0}), line_minus({0}), {{{Rational(0)}, {Rational(0)}}}, u);
  r.rows.push_back({"product/punctured-lines", "product-rule", product, {{"point", "(0,0)"}}});

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int n = 1; n <= 3; ++n) {
    Polynomial g = cst(0, n) - var(0, n);
    for (int i = 0; i < n; ++i) g = g + var(i, n) * var(i, n);
    const auto y = ConstructibleSet::nonzero_set(g);
    int found = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
      if (trial > 0)
        for (auto& xi : x) xi = Rational(num(rng)) / Rational(den(rng));
      const auto w = sat_prime_member(y, x, SearchUniverse{1, u.height});
      if (w && w->degree() <= 1 && verify_witness(*w, y) && w->point() == x) ++found;
    }
    r.rows.push_back({"open-dense/n" + std::to_string(n), "open-dense-cover", found == 100,
                      {{"set", y.str()}, {"found", std::to_string(found)}, {"points", "100"}}});
  }

  const auto fix = sat_fixpoint(line_minus({0, 1}), u, {{Rational(0)}, {Rational(1)}, {Rational(2)}});
  bool sound = fix.certified.size() == 3;
  for (std::size_t i = 0; i < fix.witnesses.size(); ++i)
    sound = sound && verify_witness(fix.witnesses[i], line_minus({0, 1})) && fix.witnesses[i].point() == fix.certified[i];
  r.rows.push_back({"fixpoint/line-minus-two", "fixpoint", sound && fix.rounds == 1,
                    {{"certified", std::to_string(fix.certified.size())}, {"rounds", std::to_string(fix.rounds)}}});
  const auto sat = sat_fixpoint(ConstructibleSet::finite(1, {{Rational(0)}}), u, {{Rational(0)}, {Rational(3)}});
  r.rows.push_back({"fixpoint/finite", "fixpoint", sat.certified.size() == 1,
                    {{"certified", std::to_string(sat.certified.size())}, {"rounds", std::to_string(sat.rounds)}}});
  return r;
}

std::vector<Report> run_all(const RunConfig& c) {
  std::vector<Report> out{run_restriction(c), run_characters(c)};
  if (c.n == 2 && c.blocks == std::vector<int>{1, 1}) out.push_back(run_orbital(c));
  out.push_back(run_unipotent(c));
  out.push_back(run_saturate(c));
  return out;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"id", row.id}, {"identity", row.identity}, {"pass", row.pass}, {"values", row.values}});
  return {{"suite", r.suite}, {"pass", r.passed()}, {"rows", rows}};
}

nlohmann::json to_json(const std::vector<Report>& rs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

std::vector<Report> reports_from_json(const nlohmann::json& j) {
  std::vector<Report> out;
  for (const auto& r : j) {
    Report rep{r.at("suite").get<std::string>(), {}};
    for (const auto& row : r.at("rows"))
      rep.rows.push_back({row.at("id").get<std::string>(), row.at("identity").get<std::string>(),
                          row.at("pass").get<bool>(), row.at("values").get<std::map<std::string, std::string>>()});
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(field);
      field.clear();
    } else if (ch == '\n') {
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (any || !row.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string to_csv(const std::vector<Report>& rs) {
  std::ostringstream os;
  os << "suite,id,identity,pass,values\n";
  for (const auto& r : rs)
    for (const auto& row : r.rows)
      os << csv_field(r.suite) << ',' << csv_field(row.id) << ',' << csv_field(row.identity) << ','
         << (row.pass ? "pass" : "fail") << ',' << csv_field(nlohmann::json(row.values).dump()) << '\n';
  return os.str();
}

std::vector<Report> reports_from_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  std::vector<Report> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != 5) throw DomainError("reports_from_csv: line " + std::to_string(i + 1) + " has " +
                                         std::to_string(f.size()) + " fields");
    if (out.empty() || out.back().suite != f[0]) out.push_back({f[0], {}});
    out.back().rows.push_back(
        {f[1], f[2], f[3] == "pass", nlohmann::json::parse(f[4]).get<std::map<std::string, std::string>>()});
  }
  return out;
}

}  // namespace parind
