#include "su11/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "su11/circuit.hpp"

namespace su11::cli {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;

template <typename F>
auto parallel_map(size_t n, int threads, F f) {
  using R = decltype(f(size_t{}));
  std::vector<std::optional<R>> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned t = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<unsigned>(t, std::max<size_t>(n, 1));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> result;
  result.reserve(n);
  for (auto& o : out) result.push_back(std::move(*o));
  return result;
}

void require_g_list(const SweepConfig& cfg) {
  if (cfg.g_list.empty()) throw UsageError("empty grid: no g values given (--g or --g-list)");
  for (double g : cfg.g_list) {
    if (!std::isfinite(g) || g < 0) throw UsageError("g values must be finite and >= 0");
  }
}

double default_step(QfiMethod m) {
  return m == QfiMethod::kGaussianFormula ? kDefaultCovarianceStep : kDefaultFidelityStep;
}

void check_method_backend(QfiMethod m, Backend b) {
  if (m == QfiMethod::kGaussianFormula && b == Backend::kFock) {
    throw UsageError("method 'gaussian' is incompatible with backend 'fock'");
  }
  if (m == QfiMethod::kClosedForm && b == Backend::kFock) {
    throw UsageError("method 'closed' is incompatible with backend 'fock'");
  }
}

json range_json(const std::vector<double>& v) {
  json j;
  j["min"] = v.empty() ? 0.0 : v.front();
  j["max"] = v.empty() ? 0.0 : v.back();
  j["samples"] = v.size();
  return j;
}

json common_config(const SweepConfig& cfg) {
  json j;
  j["g_list"] = cfg.g_list;
  j["backend"] = to_string(cfg.backend);
  j["model"] = to_string(cfg.model);
  j["format"] = cfg.format == OutputFormat::kCsv ? "csv" : "json";
  if (cfg.method) j["method"] = to_string(*cfg.method);
  if (cfg.wrt) j["wrt"] = to_string(*cfg.wrt);
  if (cfg.observable) j["observable"] = to_string(*cfg.observable);
  if (cfg.step) j["step"] = *cfg.step;
  return j;
}

}  // namespace

const char* version() { return SU11_VERSION; }

std::vector<double> expand_range(const RangeSpec& r, double default_min, double default_max,
                                 int default_samples, const char* name) {
  const double lo = r.min.value_or(default_min);
  const double hi = r.max.value_or(default_max);
  const int n = r.samples.value_or(default_samples);
  const std::string nm(name);
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw UsageError(nm + " range must be finite");
  if (lo > hi) throw UsageError(nm + " range: min exceeds max");
  if (n <= 0) throw UsageError("empty grid: " + nm + " sample count must be positive");
  if (n == 1) {
    if (lo != hi) throw UsageError(nm + " range needs at least 2 samples unless min == max");
    return {lo};
  }
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = lo + (hi - lo) * k / (n - 1);
  v.back() = hi;
  return v;
}

Param parse_param(const std::string& s) {
  if (s == "phi") return Param::kPhi;
  if (s == "theta") return Param::kTheta;
  throw UsageError("unknown --wrt value '" + s + "'");
}

QfiMethod parse_method(const std::string& s) {
  if (s == "closed") return QfiMethod::kClosedForm;
  if (s == "gaussian") return QfiMethod::kGaussianFormula;
  if (s == "fidelity") return QfiMethod::kFidelityFD;
  throw UsageError("unknown --method value '" + s + "'");
}

Backend parse_backend(const std::string& s) {
  if (s == "gaussian") return Backend::kGaussian;
  if (s == "fock") return Backend::kFock;
  throw UsageError("unknown --backend value '" + s + "'");
}

Observable parse_observable(const std::string& s) {
  if (s == "O") return Observable::kWeightedShift;
  if (s == "Ntot") return Observable::kTotalPhotonN;
  throw UsageError("unknown --observable value '" + s + "'");
}

Model parse_model(const std::string& s) {
  if (s == "hamiltonian") return Model::kHamiltonian;
  if (s == "circuit") return Model::kCircuit;
  throw UsageError("unknown --model value '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw UsageError("unknown --format value '" + s + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(const Table& t, std::ostream& os) {
  os << "# schema: " << t.schema << '\n';
  for (size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              os << format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              os << (v ? "true" : "false");
            } else {
              os << v;
            }
          },
          row[c]);
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json rec = json::object();
    for (size_t c = 0; c < row.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              rec[t.columns[c]] = std::isfinite(v) ? json(v) : json(nullptr);
            } else {
              rec[t.columns[c]] = v;
            }
          },
          row[c]);
    }
    arr.push_back(std::move(rec));
  }
  os << arr.dump(1) << '\n';
}

RunResult run_fig2(const SweepConfig& cfg) {
  require_g_list(cfg);
  const QfiMethod method = cfg.method.value_or(QfiMethod::kGaussianFormula);
  if (method == QfiMethod::kClosedForm) throw UsageError("fig2 needs method 'gaussian' or 'fidelity'");
  check_method_backend(method, cfg.backend);
  if (cfg.wrt && *cfg.wrt != Param::kTheta) throw UsageError("fig2 is a theta sweep");
  if (cfg.model != Model::kHamiltonian) throw UsageError("fig2 uses the Hamiltonian model");
  const double step = cfg.step.value_or(default_step(method));

  struct Point {
    double g;
    double theta;
    bool boundary;
  };
  std::vector<Point> points;
  for (double g : cfg.g_list) {
    std::vector<double> thetas = expand_range(cfg.theta, 0.0, 2 * g + 6, 601, "theta");
    const double b = 2 * g;
    if (b >= thetas.front() && b <= thetas.back() &&
        std::find(thetas.begin(), thetas.end(), b) == thetas.end()) {
      thetas.insert(std::upper_bound(thetas.begin(), thetas.end(), b), b);
    }
    for (double th : thetas) points.push_back({g, th, th == b});
  }

  NumericOptions opts;
  opts.backend = cfg.backend;
  struct Out {
    double qfi;
    double energy;
    Domain domain;
  };
  auto results = parallel_map(points.size(), cfg.threads, [&](size_t i) {
    const ModelParams p(points[i].g, points[i].theta, kPi);
    return Out{qfi_numeric(p, Param::kTheta, method, step, opts).value,
               state_moments(p).energy, classify_domain(p)};
  });

  RunResult r;
  r.table.schema = "su11.fig2.v1";
  r.table.columns = {"g", "theta", "domain", "qfi", "energy", "qfi_over_energy",
                     "is_boundary", "qfi_theta0_ref"};
  json diagnostics = json::array();
  for (double g : cfg.g_list) {
    const double ref = qfi_theta0_closed(g).value;
    std::vector<double> e1, q1;
    double best_ratio = -1, best_theta = 0;
    for (size_t i = 0; i < points.size(); ++i) {
      if (points[i].g != g) continue;
      const Out& o = results[i];
      r.table.rows.push_back({g, points[i].theta, std::string(to_string(o.domain)), o.qfi,
                              o.energy, o.qfi / o.energy, points[i].boundary, ref});
      if (o.domain == Domain::kDomain1 && o.qfi > 0) {
        e1.push_back(o.energy);
        q1.push_back(o.qfi);
        if (o.qfi / o.energy > best_ratio) {
          best_ratio = o.qfi / o.energy;
          best_theta = points[i].theta;
        }
      }
    }
    json d;
    d["g"] = g;
    d["qfi_theta0_ref"] = ref;
    const double b = 2 * g;
    const double delta = 1e-6;
    const double e_lo = energy_closed_form(ModelParams(g, b - delta, kPi));
    const double e_hi = energy_closed_form(ModelParams(g, b + delta, kPi));
    const double e_b = energy_closed_form(ModelParams(g, b, kPi));
    d["boundary_theta"] = b;
    d["boundary_energy"] = e_b;
    d["boundary_energy_mismatch"] = std::abs(0.5 * (e_lo + e_hi) - e_b);
    if (e1.size() >= 2) {
      // Energies can coincide when g = 0; the fit is then undefined.
      try {
        d["domain1_alpha"] = fit_log_exponent(e1, q1);
      } catch (const std::invalid_argument&) {
        d["domain1_alpha"] = nullptr;
      }
      d["domain1_peak_theta"] = best_theta;
      d["domain1_peak_qfi_over_energy"] = best_ratio;
    }
    diagnostics.push_back(d);
  }
  json meta;
  meta["config"] = common_config(cfg);
  meta["config"]["method"] = to_string(method);
  meta["config"]["step"] = step;
  meta["config"]["phi"] = kPi;
  meta["diagnostics"] = diagnostics;
  r.meta_json = meta.dump();
  return r;
}

RunResult run_sweep(const SweepConfig& cfg) {
  require_g_list(cfg);
  const QfiMethod method = cfg.method.value_or(QfiMethod::kGaussianFormula);
  check_method_backend(method, cfg.backend);
  const Param wrt = cfg.wrt.value_or(cfg.model == Model::kCircuit ? Param::kTheta : Param::kPhi);
  if (cfg.model == Model::kCircuit && wrt == Param::kPhi) {
    throw UsageError("circuit model has no phi parameter; use --wrt theta");
  }
  if (cfg.observable == Observable::kTotalPhotonN && cfg.backend == Backend::kFock &&
      method == QfiMethod::kGaussianFormula) {
    throw UsageError("method 'gaussian' is incompatible with backend 'fock'");
  }
  const double step = cfg.step.value_or(default_step(method));
  const double snr_step = cfg.step.value_or(kDefaultFidelityStep);
  const auto thetas = expand_range(cfg.theta, 0.0, 0.0, 1, "theta");
  const auto phis = expand_range(cfg.phi, kPi, kPi, 1, "phi");

  struct Point {
    double g, theta, phi;
  };
  std::vector<Point> points;
  for (double g : cfg.g_list)
    for (double th : thetas)
      for (double ph : phis) points.push_back({g, th, ph});

  NumericOptions qopts;
  qopts.model = cfg.model;
  qopts.backend = cfg.backend;
  NumericOptions sopts = qopts;
  if (cfg.observable == Observable::kWeightedShift) sopts.backend = Backend::kFock;

  struct Out {
    double qfi;
    SnrReport snr;
  };
  auto results = parallel_map(points.size(), cfg.threads, [&](size_t i) {
    const ModelParams p(points[i].g, points[i].theta, points[i].phi);
    Out o;
    try {
      o.qfi = qfi_numeric(p, wrt, method, step, qopts).value;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (cfg.observable) o.snr = snr_numeric(*cfg.observable, p, wrt, snr_step, sopts);
    return o;
  });

  RunResult r;
  r.table.schema = cfg.observable ? "su11.sweep-snr.v1" : "su11.sweep.v1";
  r.table.columns = {"model", "g", "theta", "phi", "wrt", "method", "backend", "step", "qfi"};
  if (cfg.observable) {
    for (const char* c : {"observable", "snr_backend", "signal", "noise", "snr", "snr_over_qfi"})
      r.table.columns.emplace_back(c);
  }
  for (size_t i = 0; i < points.size(); ++i) {
    const Out& o = results[i];
    std::vector<Cell> row{std::string(to_string(cfg.model)),
                          points[i].g,
                          points[i].theta,
                          points[i].phi,
                          std::string(to_string(wrt)),
                          std::string(to_string(method)),
                          std::string(to_string(method == QfiMethod::kFidelityFD ? cfg.backend
                                                                                 : Backend::kGaussian)),
                          method == QfiMethod::kClosedForm ? 0.0 : step,
                          o.qfi};
    if (cfg.observable) {
      row.emplace_back(std::string(to_string(*cfg.observable)));
      row.emplace_back(std::string(to_string(sopts.backend)));
      row.emplace_back(o.snr.signal);
      row.emplace_back(o.snr.noise);
      row.emplace_back(o.snr.snr);
      row.emplace_back(o.qfi > 0 ? o.snr.snr / o.qfi : 0.0);
    }
    r.table.rows.push_back(std::move(row));
  }
  json meta;
  meta["config"] = common_config(cfg);
  meta["config"]["method"] = to_string(method);
  meta["config"]["wrt"] = to_string(wrt);
  meta["config"]["step"] = step;
  meta["config"]["snr_step"] = snr_step;
  meta["config"]["theta"] = range_json(thetas);
  meta["config"]["phi"] = range_json(phis);
  r.meta_json = meta.dump();
  return r;
}

RunResult run_check_circuit(const SweepConfig& cfg) {
  const CircuitSpec spec{cfg.g1, cfg.g2, cfg.circuit_theta};
  if (!std::isfinite(spec.g1) || !std::isfinite(spec.g2) || !std::isfinite(spec.theta)) {
    throw UsageError("circuit parameters must be finite");
  }
  const Rep2x2 rep = rep2_matrix(spec);
  const HamiltonianLog lg = hamiltonian_log(rep);
  RunResult r;
  r.table.schema = "su11.check-circuit.v1";
  r.table.columns = {"g1", "g2", "theta", "trace", "class", "exists", "trace_condition",
                     "s1", "s2", "s3", "log_residual", "alpha", "p1", "p2", "beta",
                     "kak_residual", "ill_conditioned"};
  auto line = [&](const std::string& k, const std::string& v) { r.messages.push_back(k + ": " + v); };
  line("circuit", "V(g1=" + format_double(spec.g1) + ", g2=" + format_double(spec.g2) +
                      ", theta=" + format_double(spec.theta) + ")");
  line("trace", format_double(lg.trace));
  line("class", to_string(lg.kind));
  line("exists", lg.exists ? "true" : "false");
  std::vector<Cell> row{spec.g1, spec.g2, spec.theta, lg.trace, std::string(to_string(lg.kind)),
                        lg.exists, trace_condition(spec)};
  if (lg.exists) {
    const KakFactors k = kak_decompose(lg.coeffs);
    const double kak_res = (kak_compose(k) - expi(lg.coeffs)).cwiseAbs().maxCoeff();
    line("coeffs", "s1=" + format_double(lg.coeffs.s1) + " s2=" + format_double(lg.coeffs.s2) +
                       " s3=" + format_double(lg.coeffs.s3));
    line("log_residual", format_double(lg.residual));
    line("kak", "alpha=" + format_double(k.alpha) + " p1=" + format_double(k.p1) +
                    " p2=" + format_double(k.p2) + " beta=" + format_double(k.beta));
    line("kak_residual", format_double(kak_res));
    for (double v : {lg.coeffs.s1, lg.coeffs.s2, lg.coeffs.s3, lg.residual, k.alpha, k.p1, k.p2,
                     k.beta, kak_res})
      row.emplace_back(v);
  } else {
    for (int k = 0; k < 9; ++k) row.emplace_back(std::nan(""));
  }
  row.emplace_back(lg.ill_conditioned);
  r.table.rows.push_back(std::move(row));
  if (lg.ill_conditioned) r.warnings.push_back("warning: " + lg.warning);
  r.exit_code = lg.exists ? kOk : kNoHamiltonian;
  json meta;
  meta["config"] = {{"g1", spec.g1}, {"g2", spec.g2}, {"theta", spec.theta}};
  r.meta_json = meta.dump();
  return r;
}

RunResult run_oracle_compare(const SweepConfig& cfg) {
  SweepConfig c = cfg;
  if (c.g_list.empty()) c.g_list = {0.25, 0.5, 1.0, 1.5};
  require_g_list(c);
  const auto thetas = expand_range(c.theta, -2.0, 3.0, 6, "theta");
  const auto phis = expand_range(c.phi, 0.0, kPi, 5, "phi");
  struct Point {
    double g, theta, phi;
  };
  std::vector<Point> points;
  for (double g : c.g_list)
    for (double th : thetas)
      for (double ph : phis) points.push_back({g, th, ph});

  struct Out {
    int nmax;
    double cov_dev, energy_dev, tmsv_dist, norm_dev;
  };
  auto results = parallel_map(points.size(), c.threads, [&](size_t i) {
    const ModelParams p(points[i].g, points[i].theta, points[i].phi);
    // The l2 distance tracks sqrt(tail mass), so 1e-8 needs a 1e-20 tail.
    TruncationPolicy fine = TruncationPolicy::for_model(p);
    fine.tail_tolerance = 1e-20;
    const FockState psi = evolve_vacuum(p, fine);
    const StateMoments sm = state_moments(p);
    const CovarianceMatrix fc = fock_covariance(psi);
    const SqueezingParams sq = tmsv_params(p);
    TruncationPolicy tp = TruncationPolicy::for_squeezing(sq.f);
    tp.initial_nmax = std::max(tp.initial_nmax, psi.nmax());
    tp.tail_tolerance = fine.tail_tolerance;
    const FockState tm = tmsv_state(sq, tp);
    Out o;
    o.nmax = psi.nmax();
    o.cov_dev = (fc.m - sm.cov.m).cwiseAbs().maxCoeff();
    o.energy_dev = std::abs(0.5 * fc.m.trace() - energy_closed_form(p));
    o.tmsv_dist = phase_aligned_distance(psi, tm);
    o.norm_dev = std::abs(psi.norm() - 1);
    return o;
  });

  constexpr double kCovTol = 1e-7, kEnergyTol = 1e-8, kDistTol = 1e-8, kNormTol = 1e-10;
  RunResult r;
  r.table.schema = "su11.oracle-compare.v1";
  r.table.columns = {"g", "theta", "phi", "nmax", "cov_dev", "energy_dev", "tmsv_dist", "norm_dev"};
  Out worst{0, 0, 0, 0, 0};
  for (size_t i = 0; i < points.size(); ++i) {
    const Out& o = results[i];
    r.table.rows.push_back({points[i].g, points[i].theta, points[i].phi, std::int64_t(o.nmax),
                            o.cov_dev, o.energy_dev, o.tmsv_dist, o.norm_dev});
    worst.cov_dev = std::max(worst.cov_dev, o.cov_dev);
    worst.energy_dev = std::max(worst.energy_dev, o.energy_dev);
    worst.tmsv_dist = std::max(worst.tmsv_dist, o.tmsv_dist);
    worst.norm_dev = std::max(worst.norm_dev, o.norm_dev);
  }
  auto report = [&](const char* name, double v, double tol) {
    r.messages.push_back(std::string(name) + ": max " + format_double(v) + " (tol " +
                         format_double(tol) + ")" + (v <= tol ? "" : " EXCEEDED"));
    return v <= tol;
  };
  bool ok = report("covariance", worst.cov_dev, kCovTol);
  ok &= report("energy", worst.energy_dev, kEnergyTol);
  ok &= report("tmsv_distance", worst.tmsv_dist, kDistTol);
  ok &= report("norm", worst.norm_dev, kNormTol);
  r.exit_code = ok ? kOk : kToleranceExceeded;
  json meta;
  meta["config"] = common_config(c);
  meta["config"]["theta"] = range_json(thetas);
  meta["config"]["phi"] = range_json(phis);
  meta["max_deviation"] = {{"covariance", worst.cov_dev},
                           {"energy", worst.energy_dev},
                           {"tmsv_distance", worst.tmsv_dist},
                           {"norm", worst.norm_dev}};
  r.meta_json = meta.dump();
  return r;
}

void apply_json_config(SweepConfig& cfg, const std::string& text,
                       const std::set<std::string>& given) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config: top level must be an object");
  for (const auto& [key, val] : j.items()) {
    if (given.count(key)) continue;
    try {
      if (key == "g") {
        cfg.g_list = {val.get<double>()};
      } else if (key == "g-list") {
        cfg.g_list = val.get<std::vector<double>>();
      } else if (key == "theta-min") {
        cfg.theta.min = val.get<double>();
      } else if (key == "theta-max") {
        cfg.theta.max = val.get<double>();
      } else if (key == "theta-samples") {
        cfg.theta.samples = val.get<int>();
      } else if (key == "phi-min") {
        cfg.phi.min = val.get<double>();
      } else if (key == "phi-max") {
        cfg.phi.max = val.get<double>();
      } else if (key == "phi-samples") {
        cfg.phi.samples = val.get<int>();
      } else if (key == "wrt") {
        cfg.wrt = parse_param(val.get<std::string>());
      } else if (key == "method") {
        cfg.method = parse_method(val.get<std::string>());
      } else if (key == "backend") {
        cfg.backend = parse_backend(val.get<std::string>());
      } else if (key == "observable") {
        cfg.observable = parse_observable(val.get<std::string>());
      } else if (key == "model") {
        cfg.model = parse_model(val.get<std::string>());
      } else if (key == "step") {
        cfg.step = val.get<double>();
      } else if (key == "out") {
        cfg.out = val.get<std::string>();
      } else if (key == "format") {
        cfg.format = parse_format(val.get<std::string>());
      } else if (key == "threads") {
        cfg.threads = val.get<int>();
      } else if (key == "g1") {
        cfg.g1 = val.get<double>();
      } else if (key == "g2") {
        cfg.g2 = val.get<double>();
      } else if (key == "theta") {
        cfg.circuit_theta = val.get<double>();
      } else {
        throw UsageError("config: unknown key '" + key + "'");
      }
    } catch (const json::exception&) {
      throw UsageError("config: wrong type for key '" + key + "'");
    }
  }
}

std::string emit(const RunResult& r, const SweepConfig& cfg, const std::string& command,
                 double elapsed_seconds, std::ostream& stdout_stream) {
  const char* ext = cfg.format == OutputFormat::kCsv ? ".csv" : ".json";
  std::string path = cfg.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("SU11_OUTPUT_DIR"); dir && *dir) {
      path = (std::filesystem::path(dir) / (command + ext)).string();
    }
  }
  auto write_table = [&](std::ostream& os) {
    if (cfg.format == OutputFormat::kCsv) {
      write_csv(r.table, os);
    } else {
      write_json(r.table, os);
    }
  };
  if (path.empty() || path == "-") {
    write_table(stdout_stream);
    return "-";
  }
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_table(f);
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
  }
  json meta = json::parse(r.meta_json.empty() ? "{}" : r.meta_json);
  meta["schema"] = r.table.schema;
  meta["tool"] = "su11";
  meta["version"] = version();
  meta["command"] = command;
  meta["columns"] = r.table.columns;
  meta["rows"] = r.table.rows.size();
  meta["elapsed_seconds"] = elapsed_seconds;
  std::ofstream m(path + ".meta.json", std::ios::trunc);
  if (!m) throw IoError("cannot open '" + path + ".meta.json' for writing");
  m << meta.dump(2) << '\n';
  if (!m) throw IoError("failed writing metadata for '" + path + "'");
  return path;
}

}  // namespace su11::cli
