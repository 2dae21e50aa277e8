// Command-line front end: scenario runners, frozen figure reproduction, and
// the acceptance-validation battery.
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"

#include "jcsim/config.hpp"
#include "jcsim/figures.hpp"
#include "jcsim/parallel.hpp"
#include "jcsim/scenario.hpp"
#include "jcsim/validation.hpp"

namespace {

void announce(const jcsim::RunResult& result) {
  for (const std::string& file : result.files) {
    std::printf("wrote %s\n", file.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "time-windowed emission spectra of atom-field and deformed-field models"};
  app.require_subcommand(1);

  std::string out_flag;
  int threads = 0;
  app.add_option("--out", out_flag,
                 "output directory (overrides JCSIM_OUT and the config)");
  app.add_option("--threads", threads, "worker thread count (default 1)");

  std::string config_path;
  std::string figure_id;

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "emission spectrum S(omega; Gamma, t)");
  spectrum->add_option("config", config_path, "configuration file")->required();
  CLI::App* eigensweep =
      app.add_subcommand("eigensweep", "dressed energies vs coupling strength");
  eigensweep->add_option("config", config_path, "configuration file")->required();
  CLI::App* correlation =
      app.add_subcommand("correlation", "two-time correlation kernel G(t1,t2)");
  correlation->add_option("config", config_path, "configuration file")->required();
  CLI::App* figure =
      app.add_subcommand("figure", "reproduce a frozen figure dataset");
  figure->add_option("id", figure_id, "figure id (fig1a..fig7)")->required();
  CLI::App* validate =
      app.add_subcommand("validate", "run the acceptance battery and report");
  for (CLI::App* sub : {spectrum, eigensweep, correlation, figure, validate}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) jcsim::set_thread_count(threads);

  try {
    if (spectrum->parsed() || eigensweep->parsed() || correlation->parsed()) {
      const jcsim::ScenarioConfig cfg = jcsim::load_config(config_path);
      const std::string dir = jcsim::resolve_out_dir(out_flag, cfg);
      if (spectrum->parsed()) {
        announce(jcsim::run_spectrum(cfg, dir));
      } else if (eigensweep->parsed()) {
        announce(jcsim::run_eigensweep(cfg, dir));
      } else {
        announce(jcsim::run_correlation(cfg, dir));
      }
    } else if (figure->parsed()) {
      const std::string dir = jcsim::resolve_out_dir(out_flag, jcsim::ScenarioConfig{});
      announce(jcsim::reproduce_figure(figure_id, dir));
    } else if (validate->parsed()) {
      const jcsim::ValidationReport report = jcsim::validate_suite(argv[0]);
      for (const jcsim::CriterionResult& r : report.results) {
        std::printf("%s\n", jcsim::format_criterion(r).c_str());
      }
      std::printf("%s\n", report.all_pass() ? "all criteria pass"
                                            : "some criteria FAIL (see above)");
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
  return 0;
}
