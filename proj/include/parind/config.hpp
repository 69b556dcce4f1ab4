#pragma once

#include "parind/group_geometry.hpp"
#include "parind/level.hpp"
#include "parind/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace parind {

/// Settings shared by every suite; defaults are the GL_2(Q_2), level-one setup.
struct RunConfig {
  long p = 2;
  int m = 1;
  int n = 2;
  std::vector<int> blocks{1, 1};
  std::vector<Orientation> orientations{Orientation::Upper, Orientation::Lower};
  /// Exponent vectors of the double cosets K_0 diag(p^e) K_0 spanning the support.
  std::vector<std::vector<int>> support{{0, 0}, {1, 0}};
  /// Unramified characters as Satake parameter tuples (one entry per block).
  std::vector<std::vector<Rational>> characters{{Rational(1), Rational(1)},
                                                {Rational(2), Rational(3)},
                                                {Rational(-1) / Rational(2), Rational(5)},
                                                {Rational(7) / Rational(3), Rational(-4) / Rational(5)}};
  long grid_lo = -2;
  long grid_hi = 2;
  /// Test mode: descent uses |Delta| instead of |Delta|^{1/2}.
  bool corrupt_normalization = false;
  /// (n, q) pairs for the finite-field suite.
  std::vector<std::pair<int, int>> finite_fields{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}};
  int sat_degree = 2;
  long sat_height = 2;
  std::uint64_t guard = kDefaultGuard;

  /// ConfigError naming the offending field.
  void validate() const;
};

/// Reads an INI file (sections group, hecke, characters, orbital, finite_field, saturation, guards).
/// Unknown keys and malformed values raise ConfigError with the line or field.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& origin = "<string>");

}  // namespace parind
