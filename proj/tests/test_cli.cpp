// End-to-end checks of the command-line binary: subcommand wiring, output-dir
// precedence (flag > environment > config), flat-config diagnostics, and
// byte-level determinism of the CSV artifacts.  The binary path arrives as
// argv[1] so the test can spawn real processes.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;
const fs::path kWork = "cli_test_out";

int run(const std::string& args, const std::string& stderr_file = "") {
  std::string cmd = "\"" + g_cli + "\" " + args + " > /dev/null";
  cmd += stderr_file.empty() ? " 2>&1" : " 2> " + stderr_file;
  const int rc = std::system(cmd.c_str());
  REQUIRE_MSG(rc != -1, "failed to spawn the binary");
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : 128;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  REQUIRE_MSG(out.good(), "failed to write " + path.string());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MSG(in.good(), "missing file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSpectrumConfig =
    "model = jc\n"
    "omega_a = 1.0\n"
    "omega_c = 1.0\n"
    "Omega0 = 0.25\n"
    "state = fock_excited\n"
    "n = 0\n"
    "method = closed_form\n"
    "t_periods = 4\n"
    "omega_points = 101\n"
    "dataset = clispec\n";

void test_spectrum_determinism() {
  write_file(kWork / "spec.cfg", kSpectrumConfig);
  const fs::path a = kWork / "runA";
  const fs::path b = kWork / "runB";
  REQUIRE(run("spectrum " + (kWork / "spec.cfg").string() + " --out " + a.string()) == 0);
  REQUIRE(run("spectrum " + (kWork / "spec.cfg").string() + " --out " + b.string()) == 0);
  REQUIRE(fs::exists(a / "clispec.csv"));
  REQUIRE(fs::exists(a / "clispec.json"));
  REQUIRE_MSG(slurp(a / "clispec.csv") == slurp(b / "clispec.csv"),
              "spectrum csv differs between identical runs");
  const std::string csv = slurp(a / "clispec.csv");
  REQUIRE(csv.rfind("omega,S", 0) == 0);
  REQUIRE(csv.find('\r') == std::string::npos);  // LF line endings only
  testkit::pass("cli spectrum is byte-deterministic");
}

void test_out_dir_precedence() {
  // Environment variable is honored when no flag is given.
  const fs::path env_dir = kWork / "via_env";
  setenv("JCSIM_OUT", env_dir.string().c_str(), 1);
  REQUIRE(run("spectrum " + (kWork / "spec.cfg").string()) == 0);
  REQUIRE(fs::exists(env_dir / "clispec.csv"));

  // The --out flag wins over the environment.
  const fs::path flag_dir = kWork / "via_flag";
  REQUIRE(run("spectrum " + (kWork / "spec.cfg").string() + " --out " +
              flag_dir.string()) == 0);
  REQUIRE(fs::exists(flag_dir / "clispec.csv"));
  unsetenv("JCSIM_OUT");

  // Config-file out_dir applies when neither flag nor environment is set.
  write_file(kWork / "spec_outdir.cfg",
             std::string(kSpectrumConfig) + "out_dir = " +
                 (kWork / "via_config").string() + "\n");
  REQUIRE(run("spectrum " + (kWork / "spec_outdir.cfg").string()) == 0);
  REQUIRE(fs::exists(kWork / "via_config" / "clispec.csv"));
  testkit::pass("output dir precedence: flag > env > config");
}

void test_config_diagnostics() {
  write_file(kWork / "bad.cfg",
             "model = jc\n"
             "omega_a = 1.0\n"
             "bogus_key = 3\n");
  const fs::path err = kWork / "bad.stderr";
  REQUIRE(run("spectrum " + (kWork / "bad.cfg").string(), err.string()) != 0);
  const std::string msg = slurp(err);
  REQUIRE_MSG(msg.find("unknown key 'bogus_key'") != std::string::npos,
              "diagnostic does not name the offending key: " + msg);
  REQUIRE_MSG(msg.find("line 3") != std::string::npos,
              "diagnostic does not cite the line number: " + msg);

  write_file(kWork / "badvalue.cfg",
             "model = jc\n"
             "omega_a = not_a_number\n");
  REQUIRE(run("spectrum " + (kWork / "badvalue.cfg").string(), err.string()) != 0);
  REQUIRE(slurp(err).find("omega_a") != std::string::npos);

  REQUIRE(run("spectrum " + (kWork / "does_not_exist.cfg").string(),
              err.string()) != 0);
  testkit::pass("config errors exit nonzero with line/field diagnostics");
}

void test_eigensweep_and_correlation() {
  write_file(kWork / "sweep.cfg",
             "model = jc\n"
             "omega_a = 1.0\n"
             "omega_c = 1.0\n"
             "coupling_points = 5\n"
             "num_eigenvalues = 3\n"
             "dataset = clisweep\n");
  const fs::path dir = kWork / "sweep";
  REQUIRE(run("eigensweep " + (kWork / "sweep.cfg").string() + " --out " +
              dir.string()) == 0);
  const std::string head = slurp(dir / "clisweep.csv").substr(0, 15);
  REQUIRE(head.rfind("coupling,E0,E1", 0) == 0);

  write_file(kWork / "corr.cfg",
             "model = jc\n"
             "omega_a = 1.0\n"
             "omega_c = 1.0\n"
             "Omega0 = 0.25\n"
             "state = fock_excited\n"
             "n = 0\n"
             "t_periods = 2\n"
             "corr_samples = 5\n"
             "dataset = clicorr\n");
  REQUIRE(run("correlation " + (kWork / "corr.cfg").string() + " --out " +
              dir.string() + " --threads 1") == 0);
  REQUIRE(slurp(dir / "clicorr.csv").rfind("t1,t2,g_re,g_im", 0) == 0);
  testkit::pass("eigensweep and correlation subcommands produce datasets");
}

void test_figure_subcommand() {
  const fs::path dir = kWork / "fig";
  REQUIRE(run("figure fig1a --out " + dir.string()) == 0);
  REQUIRE(fs::exists(dir / "fig1a_n1.csv"));
  REQUIRE(fs::exists(dir / "fig1a_n3.json"));

  const fs::path err = kWork / "fig.stderr";
  REQUIRE(run("figure fig99 --out " + dir.string(), err.string()) != 0);
  REQUIRE(slurp(err).find("fig99") != std::string::npos);

  REQUIRE(run("", err.string()) != 0);  // a subcommand is required
  testkit::pass("figure subcommand works and rejects unknown ids");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
    return 2;
  }
  g_cli = argv[1];
  fs::remove_all(kWork);
  fs::create_directories(kWork);
  test_spectrum_determinism();
  test_out_dir_precedence();
  test_config_diagnostics();
  test_eigensweep_and_correlation();
  test_figure_subcommand();
  fs::remove_all(kWork);
  return testkit::done();
}
