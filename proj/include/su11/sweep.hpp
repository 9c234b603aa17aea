// Sweep drivers behind the su11 command-line tool.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "su11/fock.hpp"
#include "su11/metrology.hpp"

namespace su11::cli {

enum ExitCode : int {
  kOk = 0,
  kToleranceExceeded = 1,
  kUsage = 2,
  kNoHamiltonian = 3,
  kTruncation = 4,
  kIo = 5,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kCsv, kJson };

struct RangeSpec {
  std::optional<double> min;
  std::optional<double> max;
  std::optional<int> samples;
};

struct SweepConfig {
  std::vector<double> g_list;
  RangeSpec theta;
  RangeSpec phi;
  std::optional<Param> wrt;
  std::optional<QfiMethod> method;
  Backend backend = Backend::kGaussian;
  std::optional<Observable> observable;
  Model model = Model::kHamiltonian;
  std::optional<double> step;
  std::string out;  // empty: SU11_OUTPUT_DIR/<command>.<ext>, else stdout
  OutputFormat format = OutputFormat::kCsv;
  int threads = 0;  // 0: hardware concurrency

  // check-circuit
  double g1 = 0.0;
  double g2 = 0.0;
  double circuit_theta = 0.0;
};

// Grid of `samples` evenly spaced points; a single sample needs min == max.
std::vector<double> expand_range(const RangeSpec& r, double default_min,
                                 double default_max, int default_samples,
                                 const char* name);

Param parse_param(const std::string& s);
QfiMethod parse_method(const std::string& s);
Backend parse_backend(const std::string& s);
Observable parse_observable(const std::string& s);
Model parse_model(const std::string& s);
OutputFormat parse_format(const std::string& s);

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Shortest round-trip decimal.
std::string format_double(double v);
void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

struct RunResult {
  Table table;
  std::string meta_json;  // config, diagnostics, version; timing added on write
  int exit_code = kOk;
  std::vector<std::string> messages;  // human-readable lines for stdout
  std::vector<std::string> warnings;  // for stderr
};

RunResult run_fig2(const SweepConfig& cfg);
RunResult run_sweep(const SweepConfig& cfg);
RunResult run_check_circuit(const SweepConfig& cfg);
RunResult run_oracle_compare(const SweepConfig& cfg);

// Keys are flag names without dashes. Keys in `given` were set on the
// command line and are left alone.
void apply_json_config(SweepConfig& cfg, const std::string& text,
                       const std::set<std::string>& given);

// Writes the table (and <path>.meta.json next to it when writing a file).
// Returns the path written, or "-" for stdout.
std::string emit(const RunResult& r, const SweepConfig& cfg, const std::string& command,
                 double elapsed_seconds, std::ostream& stdout_stream);

const char* version();

}  // namespace su11::cli
