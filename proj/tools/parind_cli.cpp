#include "parind/config.hpp"
#include "parind/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace parind;

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kGuard = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for parabolic restriction, induced characters, orbital integrals, "
               "finite-field unipotent induction and curve saturation"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string config_path, format = "json", out_path;
  std::uint64_t guard = 0;
  bool corrupt = false;
  app.add_option("--config", config_path, "INI run configuration")->check(CLI::ExistingFile);
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--guard", guard, "enumeration size guard (overrides guards.elements)")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--corrupt-normalization", corrupt, "test mode: descent with |Delta| in place of |Delta|^{1/2}");
  app.add_subcommand("restriction", "normalized constant terms and their independence of the parabolic");
  app.add_subcommand("characters", "trace on the induced model against the pairing with the constant term");
  app.add_subcommand("orbital", "orbital integral descent on the regular grid (GL_2, Borel only)");
  app.add_subcommand("unipotent", "induced unipotent classes over finite fields");
  app.add_subcommand("saturate", "curve-witness saturation on curated constructible sets");
  app.add_subcommand("all", "every suite the configuration supports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kConfig;
  }

  try {
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (guard) config.guard = guard;
    if (corrupt) config.corrupt_normalization = true;
    config.validate();

    const std::string suite = app.get_subcommands().front()->get_name();
    std::vector<Report> reports;
    if (suite == "restriction") reports = {run_restriction(config)};
    else if (suite == "characters") reports = {run_characters(config)};
    else if (suite == "orbital") reports = {run_orbital(config)};
    else if (suite == "unipotent") reports = {run_unipotent(config)};
    else if (suite == "saturate") reports = {run_saturate(config)};
    else reports = run_all(config);

    const std::string text = format == "csv" ? to_csv(reports) : to_json(reports).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw ConfigError(out_path + ": cannot write");
      out << text;
    }
    for (const auto& r : reports) {
      std::size_t failed = 0;
      for (const auto& row : r.rows) failed += row.pass ? 0 : 1;
      std::cerr << r.suite << ": " << r.rows.size() - failed << "/" << r.rows.size() << " rows pass\n";
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
    return ok ? kPass : kFail;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
