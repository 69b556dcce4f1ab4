#include "parind/config.hpp"
#include "parind/errors.hpp"
#include "parind/suites.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace parind;

namespace {

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("parind_cli_" + name);
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

int run(const std::string& args) {
  const int status = std::system((std::string(PARIND_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(
      "[group]\np = 3\nm = 1\nn = 2\nblocks = 1,1\norientations = upper\n"
      "[hecke]\nsupport = 0,0; 2,1\n[characters]\nparameters = 1/2, 3; -1, 1\n"
      "[finite_field]\ncases = 2:2, 3:2\n[saturation]\ndegree = 1\nheight = 3\n");
  CHECK(c.p == 3);
  CHECK(c.orientations == std::vector<Orientation>{Orientation::Upper});
  CHECK(c.support == std::vector<std::vector<int>>{{0, 0}, {2, 1}});
  CHECK(c.characters.size() == 2);
  CHECK(c.characters[0][0] == Rational(1) / Rational(2));
  CHECK(c.finite_fields == std::vector<std::pair<int, int>>{{2, 2}, {3, 2}});
  CHECK(c.sat_height == 3);

  CHECK_THROWS_AS(parse_config("[group]\np = 4\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[group]\nq = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[nonsense]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[group]\nn = 3\nblocks = 1,1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[characters]\nparameters = 0, 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[group\n"), ConfigError);
  try {
    parse_config("[group]\np = two\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("group.p") != std::string::npos);
  }
}

TEST_CASE("report round trips") {
  RunConfig c;
  c.support = {{0, 0}};
  c.characters = {{Rational(2), Rational(3)}};
  c.finite_fields = {{2, 2}};
  const std::vector<Report> reports{run_restriction(c), run_unipotent(c)};
  for (const auto& r : reports) CHECK(r.passed());
  CHECK(reports_from_json(to_json(reports)) == reports);
  CHECK(reports_from_csv(to_csv(reports)) == reports);
  CHECK(to_csv(reports) == to_csv(std::vector<Report>{run_restriction(c), run_unipotent(c)}));
}

TEST_CASE("cli exit codes") {
  const auto cfg = scratch("small.ini");
  write(cfg, "[hecke]\nsupport = 0,0\n[characters]\nparameters = 2,3\n[finite_field]\ncases = 2:2\n");
  const auto out = scratch("out.csv");
  CHECK(run("characters --config " + cfg.string() + " --format csv --out " + out.string()) == 0);
  const auto rows = reports_from_csv(slurp(out));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == run_characters(load_config(cfg.string())));

  const auto json_out = scratch("out.json");
  CHECK(run("orbital --config " + cfg.string() + " --out " + json_out.string()) == 0);
  const auto parsed = reports_from_json(nlohmann::json::parse(slurp(json_out)));
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].passed());

  CHECK(run("orbital --corrupt-normalization --config " + cfg.string()) == 1);

  const auto bad = scratch("bad.ini");
  write(bad, "[group]\np = 6\n");
  CHECK(run("restriction --config " + bad.string()) == 2);
  CHECK(run("restriction --format xml") == 2);
  CHECK(run("nosuchsuite") == 2);

  const auto gl3 = scratch("gl3.ini");
  write(gl3, "[group]\nn = 3\n");
  CHECK(run("orbital --config " + gl3.string()) == 2);
  CHECK(run("restriction --config " + gl3.string() + " --guard 5") == 3);
}
