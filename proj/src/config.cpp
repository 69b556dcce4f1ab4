#include "parind/config.hpp"

#include "parind/padic.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace parind {

namespace {

namespace pt = boost::property_tree;

std::vector<std::string> split(const std::string& s, const char* sep) {
  std::vector<std::string> parts;
  boost::split(parts, s, boost::is_any_of(sep));
  for (auto& x : parts) boost::trim(x);
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const std::string& x) { return x.empty(); }), parts.end());
  return parts;
}

long parse_long(const std::string& field, const std::string& s) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field + ": expected an integer, got '" + s + "'");
  }
}

Rational parse_rational(const std::string& field, const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw ConfigError(field + ": expected a rational number, got '" + s + "'");
  }
}

bool parse_bool(const std::string& field, const std::string& s) {
  const std::string t = boost::to_lower_copy(s);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(field + ": expected true or false, got '" + s + "'");
}

std::vector<int> parse_ints(const std::string& field, const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split(s, ",")) out.push_back(static_cast<int>(parse_long(field, x)));
  return out;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"group", {"p", "m", "n", "blocks", "orientations"}},
      {"hecke", {"support"}},
      {"characters", {"parameters"}},
      {"orbital", {"grid_lo", "grid_hi", "corrupt_normalization"}},
      {"finite_field", {"cases"}},
      {"saturation", {"degree", "height"}},
      {"guards", {"elements"}},
  };
  return keys;
}

}  // namespace

void RunConfig::validate() const {
  if (!is_prime(p)) throw ConfigError("group.p: " + std::to_string(p) + " is not prime");
  if (m < 1) throw ConfigError("group.m: level must be at least 1");
  if (n < 1 || n > 4) throw ConfigError("group.n: dimension must lie in [1, 4]");
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw ConfigError("group.blocks: block sizes must be positive");
    total += b;
  }
  if (total != n)
    throw ConfigError("group.blocks: block sizes sum to " + std::to_string(total) + ", expected n = " +
                      std::to_string(n));
  if (orientations.empty()) throw ConfigError("group.orientations: at least one orientation required");
  for (const auto& e : support)
    if (static_cast<int>(e.size()) != n) throw ConfigError("hecke.support: each exponent vector needs n entries");
  for (const auto& z : characters) {
    if (z.size() != blocks.size()) throw ConfigError("characters.parameters: one parameter per block required");
    for (const auto& x : z)
      if (x.is_zero()) throw ConfigError("characters.parameters: parameters must be nonzero");
  }
  if (grid_lo > grid_hi) throw ConfigError("orbital.grid_lo: must not exceed grid_hi");
  for (const auto& [fn, q] : finite_fields) {
    if (fn < 1 || fn > 4) throw ConfigError("finite_field.cases: n must lie in [1, 4]");
    if (!is_prime(q)) throw ConfigError("finite_field.cases: " + std::to_string(q) + " is not prime");
  }
  if (sat_degree < 1) throw ConfigError("saturation.degree: must be positive");
  if (sat_height < 1) throw ConfigError("saturation.height: must be positive");
  if (guard == 0) throw ConfigError("guards.elements: must be positive");
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(origin + ":" + std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [section, body] : tree) {
    const auto it = known_keys().find(section);
    if (it == known_keys().end()) throw ConfigError(origin + ": unknown section [" + section + "]");
    for (const auto& [key, value] : body)
      if (!it->second.count(key)) throw ConfigError(origin + ": unknown key " + section + "." + key);
  }
  RunConfig c;
  const auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(path)) return boost::trim_copy(*v);
    return std::nullopt;
  };
  if (auto v = get("group.p")) c.p = parse_long("group.p", *v);
  if (auto v = get("group.m")) c.m = static_cast<int>(parse_long("group.m", *v));
  if (auto v = get("group.n")) {
    c.n = static_cast<int>(parse_long("group.n", *v));
    c.blocks = std::vector<int>(static_cast<std::size_t>(std::max(c.n, 0)), 1);
    c.support = {std::vector<int>(static_cast<std::size_t>(std::max(c.n, 0)), 0)};
    c.characters = {std::vector<Rational>(static_cast<std::size_t>(std::max(c.n, 0)), Rational(1))};
  }
  if (auto v = get("group.blocks")) c.blocks = parse_ints("group.blocks", *v);
  if (auto v = get("group.orientations")) {
    c.orientations.clear();
    for (const auto& o : split(*v, ",")) {
      try {
        c.orientations.push_back(parse_orientation(o));
      } catch (const std::exception& e) {
        throw ConfigError(std::string("group.orientations: ") + e.what());
      }
    }
  }
  if (auto v = get("hecke.support")) {
    c.support.clear();
    for (const auto& e : split(*v, ";")) c.support.push_back(parse_ints("hecke.support", e));
  }
  if (auto v = get("characters.parameters")) {
    c.characters.clear();
    for (const auto& z : split(*v, ";")) {
      std::vector<Rational> params;
      for (const auto& x : split(z, ",")) params.push_back(parse_rational("characters.parameters", x));
      c.characters.push_back(params);
    }
  } else if (c.characters.empty() || c.characters.front().size() != c.blocks.size()) {
    c.characters = {std::vector<Rational>(c.blocks.size(), Rational(1))};
  }
  if (auto v = get("orbital.grid_lo")) c.grid_lo = parse_long("orbital.grid_lo", *v);
  if (auto v = get("orbital.grid_hi")) c.grid_hi = parse_long("orbital.grid_hi", *v);
  if (auto v = get("orbital.corrupt_normalization"))
    c.corrupt_normalization = parse_bool("orbital.corrupt_normalization", *v);
  if (auto v = get("finite_field.cases")) {
    c.finite_fields.clear();
    for (const auto& pair : split(*v, ",")) {
      const auto nq = split(pair, ":");
      if (nq.size() != 2) throw ConfigError("finite_field.cases: expected n:q, got '" + pair + "'");
      c.finite_fields.emplace_back(static_cast<int>(parse_long("finite_field.cases", nq[0])),
                                   static_cast<int>(parse_long("finite_field.cases", nq[1])));
    }
  }
  if (auto v = get("saturation.degree")) c.sat_degree = static_cast<int>(parse_long("saturation.degree", *v));
  if (auto v = get("saturation.height")) c.sat_height = parse_long("saturation.height", *v);
  if (auto v = get("guards.elements")) {
    const long g = parse_long("guards.elements", *v);
    if (g <= 0) throw ConfigError("guards.elements: must be positive");
    c.guard = static_cast<std::uint64_t>(g);
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

}  // namespace parind
