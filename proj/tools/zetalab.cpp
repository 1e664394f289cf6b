// zetalab: convergence ladders for discrete Z-function sums.
//
//   zetalab titchmarsh --T 1e3,1e4,1e5 --shards 8 --out results.csv
//   zetalab autocorr --k 0 --l 2 --M 2 --kind half --stdout
//   zetalab acceptance
//
// Exit status: 0 success, 2 configuration error, 3 compute error, 4 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "zetalab/harness.hpp"
#include "zetalab/validation/acceptance.hpp"

namespace {

struct Flags {
  std::string experiment;
  std::optional<std::string> config;
  std::vector<std::pair<std::string, std::optional<std::string>>> settings{
      {"T", {}}, {"k", {}}, {"l", {}}, {"M", {}}, {"N", {}}, {"kind", {}}, {"seed", {}},
      {"shards", {}}, {"threads", {}}, {"truncation", {}}, {"samples", {}}, {"out", {}}};
  bool to_stdout = false;
  std::optional<std::string> plot_dir;
};

int run_ladder(const zetalab::ExperimentConfig& cfg, const std::optional<std::string>& plot_dir) {
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) throw zetalab::Error(zetalab::ErrorKind::io, "cannot open '" + cfg.out_path + "'");
    file << zetalab::kCsvHeader << '\n' << std::flush;
  }
  if (cfg.to_stdout) std::cout << zetalab::kCsvHeader << '\n' << std::flush;

  const auto sink = [&](const zetalab::ConvergenceRow& row) {
    const std::string line = zetalab::format_row(row);
    if (file.is_open()) {
      file << line << '\n' << std::flush;
      if (!file) throw zetalab::Error(zetalab::ErrorKind::io, "write to '" + cfg.out_path + "' failed");
    }
    if (cfg.to_stdout) std::cout << line << '\n' << std::flush;
    std::fprintf(stderr, "[%s] T=%.6g ratio=%.6f (%.2fs)\n", row.experiment.c_str(), row.T,
                 row.ratio, row.wall_seconds);
  };
  const auto rows = zetalab::run(cfg, sink);
  if (plot_dir)
    for (const auto& path : zetalab::emit_plot_data(rows, *plot_dir))
      std::fprintf(stderr, "wrote %s\n", path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence ladders for discrete sums of the Riemann Z-function"};
  Flags flags;
  app.add_option("experiment", flags.experiment,
                 "gram, titchmarsh, autocorr, alternating, moment4, moment2, nyquist, "
                 "cardinal, euler, hl-effect, decompose or acceptance")
      ->required();
  app.add_option("--config", flags.config, "key = value configuration file");
  const char* help[] = {"Comma separated ascending T ladder", "Shift k", "Shift l",
                        "Shift bound M", "Euler terms N", "Sequence kind: full, half, half_theta1",
                        "Seed for sampled experiments", "Contiguous partitions of each index range",
                        "Worker threads (0: all, capped by ZETALAB_THREADS)",
                        "Cardinal series truncation", "Decomposition sample size",
                        "CSV output path"};
  for (std::size_t i = 0; i < flags.settings.size(); ++i) {
    auto& [key, value] = flags.settings[i];
    app.add_option("--" + key, value, help[i]);
  }
  app.add_flag("--stdout", flags.to_stdout, "Write CSV rows to standard output");
  app.add_option("--plot-dir", flags.plot_dir, "Directory for (log T, ratio) plot files");
  CLI11_PARSE(app, argc, argv);

  try {
    zetalab::ExperimentConfig cfg;
    if (flags.config)
      for (const auto& [key, value] : zetalab::read_config_file(*flags.config))
        zetalab::apply_setting(cfg, key, value);
    zetalab::apply_setting(cfg, "experiment", flags.experiment);
    for (const auto& [key, value] : flags.settings)
      if (value) zetalab::apply_setting(cfg, key, *value);
    if (flags.to_stdout) cfg.to_stdout = true;
    cfg.validate();

    if (cfg.experiment == zetalab::Experiment::acceptance) {
      zetalab::validation::AcceptanceOptions opts;
      opts.threads = cfg.threads;
      return zetalab::validation::run_acceptance(opts, std::cout) ? 0 : 1;
    }
    return run_ladder(cfg, flags.plot_dir);
  } catch (const zetalab::Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", zetalab::to_string(e.kind()), e.what());
    return zetalab::exit_code(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
