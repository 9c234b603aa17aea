// su11: sweeps, figure data, circuit checks and oracle comparison.
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "su11/sweep.hpp"

namespace {

using su11::cli::SweepConfig;

struct RawFlags {
  double g = 0;
  std::vector<double> g_list;
  double theta_min = 0, theta_max = 0, phi_min = 0, phi_max = 0;
  int theta_samples = 0, phi_samples = 0;
  std::string wrt, method, backend, observable, model, format;
  double step = 0;
  std::string out, config;
  int threads = 0;
  double g1 = 0, g2 = 0, theta = 0;
};

void add_grid_flags(CLI::App* sub, RawFlags& f) {
  sub->add_option("--g", f.g, "Single nonlinearity g");
  sub->add_option("--g-list", f.g_list, "List of g values")->delimiter(',');
  sub->add_option("--theta-min", f.theta_min);
  sub->add_option("--theta-max", f.theta_max);
  sub->add_option("--theta-samples", f.theta_samples);
  sub->add_option("--phi-min", f.phi_min);
  sub->add_option("--phi-max", f.phi_max);
  sub->add_option("--phi-samples", f.phi_samples);
  sub->add_option("--wrt", f.wrt, "phi|theta");
  sub->add_option("--method", f.method, "closed|gaussian|fidelity");
  sub->add_option("--backend", f.backend, "gaussian|fock");
  sub->add_option("--observable", f.observable, "O|Ntot");
  sub->add_option("--model", f.model, "hamiltonian|circuit");
  sub->add_option("--step", f.step, "Finite-difference step");
  sub->add_option("--threads", f.threads, "Worker threads (0: all cores)");
}

void add_output_flags(CLI::App* sub, RawFlags& f) {
  sub->add_option("--out", f.out, "Output file ('-' for stdout); default $SU11_OUTPUT_DIR/<command>.<ext>");
  sub->add_option("--format", f.format, "csv|json");
  sub->add_option("--config", f.config, "JSON file supplying any flag; flags override");
}

// Flags given on the command line, by name without dashes.
std::set<std::string> given_flags(const CLI::App* sub) {
  std::set<std::string> out;
  for (const CLI::Option* o : sub->get_options()) {
    if (o->count() == 0) continue;
    std::string name = o->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    out.insert(name);
  }
  return out;
}

SweepConfig build_config(const CLI::App* sub, const RawFlags& f) {
  namespace c = su11::cli;
  SweepConfig cfg;
  auto has = [&](const char* name) { return sub->get_option_no_throw(name) && sub->get_option(name)->count() > 0; };
  if (has("--config")) {
    std::ifstream in(f.config);
    if (!in) throw c::IoError("cannot read config file '" + f.config + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    c::apply_json_config(cfg, ss.str(), given_flags(sub));
  }
  if (has("--g")) cfg.g_list = {f.g};
  if (has("--g-list")) cfg.g_list = f.g_list;
  if (has("--theta-min")) cfg.theta.min = f.theta_min;
  if (has("--theta-max")) cfg.theta.max = f.theta_max;
  if (has("--theta-samples")) cfg.theta.samples = f.theta_samples;
  if (has("--phi-min")) cfg.phi.min = f.phi_min;
  if (has("--phi-max")) cfg.phi.max = f.phi_max;
  if (has("--phi-samples")) cfg.phi.samples = f.phi_samples;
  if (has("--wrt")) cfg.wrt = c::parse_param(f.wrt);
  if (has("--method")) cfg.method = c::parse_method(f.method);
  if (has("--backend")) cfg.backend = c::parse_backend(f.backend);
  if (has("--observable")) cfg.observable = c::parse_observable(f.observable);
  if (has("--model")) cfg.model = c::parse_model(f.model);
  if (has("--step")) cfg.step = f.step;
  if (has("--threads")) cfg.threads = f.threads;
  if (has("--out")) cfg.out = f.out;
  if (has("--format")) cfg.format = c::parse_format(f.format);
  if (has("--g1")) cfg.g1 = f.g1;
  if (has("--g2")) cfg.g2 = f.g2;
  if (has("--theta")) cfg.circuit_theta = f.theta;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  namespace c = su11::cli;
  CLI::App app{"SU(1,1) interferometer toolkit"};
  app.set_version_flag("--version", std::string(c::version()));
  app.require_subcommand(1);

  RawFlags f;
  CLI::App* fig2 = app.add_subcommand("fig2", "QFI(theta) relative to energy at phi = pi");
  add_grid_flags(fig2, f);
  add_output_flags(fig2, f);
  CLI::App* sweep = app.add_subcommand("sweep", "QFI/SNR over a (g, theta, phi) grid");
  add_grid_flags(sweep, f);
  add_output_flags(sweep, f);
  CLI::App* check = app.add_subcommand("check-circuit", "Quadratic-Hamiltonian existence for V(g1, g2, theta)");
  check->add_option("--g1", f.g1)->required();
  check->add_option("--g2", f.g2)->required();
  check->add_option("--theta", f.theta)->required();
  add_output_flags(check, f);
  CLI::App* oracle = app.add_subcommand("oracle-compare", "Gaussian vs Fock equivalence suite");
  add_grid_flags(oracle, f);
  add_output_flags(oracle, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : c::kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    SweepConfig cfg = build_config(sub, f);
    const auto t0 = std::chrono::steady_clock::now();
    c::RunResult r;
    if (sub == fig2) {
      r = c::run_fig2(cfg);
    } else if (sub == sweep) {
      r = c::run_sweep(cfg);
    } else if (sub == check) {
      r = c::run_check_circuit(cfg);
    } else {
      r = c::run_oracle_compare(cfg);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& w : r.warnings) std::cerr << w << '\n';
    const bool table_to_stdout_by_default = sub == fig2 || sub == sweep;
    if (table_to_stdout_by_default || !cfg.out.empty()) {
      const std::string path = c::emit(r, cfg, command, elapsed, std::cout);
      if (path != "-") std::cerr << "wrote " << path << '\n';
    }
    for (const auto& m : r.messages) std::cout << m << '\n';
    return r.exit_code;
  } catch (const c::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return c::kUsage;
  } catch (const su11::TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return c::kTruncation;
  } catch (const c::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return c::kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return c::kUsage;
  }
}
