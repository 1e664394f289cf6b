#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/gram.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

enum class Experiment {
  gram,
  titchmarsh,
  autocorr,
  alternating,
  moment4,
  moment2,
  nyquist,
  cardinal,
  euler,
  hl_effect,
  decompose,
  acceptance,
};

const char* to_string(Experiment e) noexcept;
std::optional<Experiment> parse_experiment(std::string_view name) noexcept;

// Unset optionals take per-experiment defaults:
//   kind   half for alternating and decompose, full otherwise
//   M      max(|k|, |l|), or ceil(log T) for hl-effect
//   N      largest N with N^2 <= floor(log T) + 1 at the smallest T
struct ExperimentConfig {
  Experiment experiment = Experiment::titchmarsh;
  std::vector<double> T_ladder{1.0e3, 1.0e4, 1.0e5};
  int k = 0;
  int l = 1;
  std::optional<int> M;
  std::optional<int> N;
  std::optional<GramKind> kind;
  std::uint64_t seed = 42;
  unsigned shards = 1;
  unsigned threads = 0;
  int truncation = 64;     // cardinal
  int samples = 200;       // decompose sample size; cardinal window in samples is 10x
  std::string out_path;    // empty: no CSV file
  bool to_stdout = false;

  // Throws ErrorKind::config naming the offending field.
  void validate() const;
  GramKind resolved_kind() const;
  int resolved_M(double T) const;
  int resolved_N() const;
  Parallel parallel() const { return Parallel{shards, threads}; }
};

// Flat `key = value` lines; `#` starts a comment. Keys are the field names
// above (T_ladder also accepted as T). Throws ErrorKind::config.
std::map<std::string, std::string> read_config_file(const std::string& path);
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct ConvergenceRow {
  std::string experiment;
  double T = 0.0;
  std::int64_t point_count = 0;
  double value = 0.0;
  double main_term = 0.0;
  double ratio = 0.0;
  double wall_seconds = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "experiment,T,point_count,value,main_term,ratio,wall_seconds";

std::string format_row(const ConvergenceRow& row);
// The row without its timing column, for reproducibility checks.
std::string format_row_untimed(const ConvergenceRow& row);

using RowSink = std::function<void(const ConvergenceRow&)>;

// Runs every ladder point of a non-acceptance experiment. Rows are handed to
// `sink` as soon as they are complete. Module failures are rethrown with the
// experiment, T and nu prefixed to the message.
std::vector<ConvergenceRow> run(const ExperimentConfig& cfg, const RowSink& sink = {});

// Writes <dir>/<experiment>.dat with one "log(T) ratio" line per row, sorted
// by T. Throws ErrorKind::domain for no rows and ErrorKind::io on write
// failure.
std::vector<std::string> emit_plot_data(const std::vector<ConvergenceRow>& rows,
                                        const std::string& dir);

// Process exit status for an error: 2 config, 4 io, 3 anything else.
int exit_code(const Error& e) noexcept;

}  // namespace zetalab
