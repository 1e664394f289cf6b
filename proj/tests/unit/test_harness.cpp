#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/harness.hpp"

using namespace zetalab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("zetalab_harness_" + name);
  fs::remove_all(p);
  return p;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::domain;
}

}  // namespace

TEST_CASE("experiment names round trip") {
  for (auto e : {Experiment::gram, Experiment::titchmarsh, Experiment::autocorr, Experiment::alternating,
                 Experiment::moment4, Experiment::moment2, Experiment::nyquist, Experiment::cardinal,
                 Experiment::euler, Experiment::hl_effect, Experiment::decompose, Experiment::acceptance})
    CHECK(parse_experiment(to_string(e)) == e);
  CHECK_FALSE(parse_experiment("bogus").has_value());
}

TEST_CASE("config file then flag overrides") {
  const fs::path p = scratch("cfg.txt");
  {
    std::ofstream out(p);
    out << "# ladder\nexperiment = autocorr\nT_ladder = 1e3, 1e4\nk = 0\nl = 2  # shift\nM = 2\n"
           "kind = half\nshards = 3\nseed = 9\n";
  }
  ExperimentConfig cfg;
  for (const auto& [k, v] : read_config_file(p.string())) apply_setting(cfg, k, v);
  CHECK(cfg.experiment == Experiment::autocorr);
  CHECK(cfg.T_ladder == std::vector<double>{1e3, 1e4});
  CHECK(cfg.l == 2);
  CHECK(cfg.M == 2);
  CHECK(cfg.resolved_kind() == GramKind::half);
  CHECK(cfg.shards == 3);
  CHECK(cfg.seed == 9);
  apply_setting(cfg, "shards", "8");
  apply_setting(cfg, "T", "1e3");
  CHECK(cfg.shards == 8);
  CHECK(cfg.T_ladder.size() == 1);
  cfg.validate();
  fs::remove(p);
}

TEST_CASE("config errors name the field") {
  ExperimentConfig cfg;
  try {
    apply_setting(cfg, "k", "two");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::config);
    CHECK(std::string(e.what()).find("k:") == 0);
  }
  CHECK(kind_of([&] { apply_setting(cfg, "colour", "red"); }) == ErrorKind::config);
  CHECK(kind_of([&] { read_config_file("/nonexistent/zetalab.cfg"); }) == ErrorKind::config);

  cfg.T_ladder = {1e4, 1e3};
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::config);
  cfg.T_ladder = {1e3};
  cfg.shards = 0;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::config);
  cfg.shards = 1;
  cfg.experiment = Experiment::alternating;
  cfg.kind = GramKind::full;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::config);
  cfg.kind.reset();
  cfg.validate();
  cfg.experiment = Experiment::autocorr;
  cfg.l = 9;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::config);
  cfg.experiment = Experiment::euler;
  cfg.N = 3;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::config);
  cfg.N.reset();
  CHECK(cfg.resolved_N() == 2);
}

TEST_CASE("decompose refuses heights above its cap") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::decompose;
  cfg.T_ladder = {1e6};
  try {
    cfg.validate();
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("cap") != std::string::npos);
  }
}

TEST_CASE("CSV rows") {
  CHECK(kCsvHeader == "experiment,T,point_count,value,main_term,ratio,wall_seconds");
  const ConvergenceRow r{"titchmarsh", 1000.0, 868, 0.1, 3.0, 1.0 / 30.0, 0.5};
  CHECK(format_row(r) == "titchmarsh,1000,868,0.10000000000000001,3,0.033333333333333333,0.5");
  CHECK(format_row_untimed(r) == "titchmarsh,1000,868,0.10000000000000001,3,0.033333333333333333");
}

TEST_CASE("run streams one row per ladder point") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::titchmarsh;
  cfg.T_ladder = {1e3, 2e3, 4e3};
  std::vector<ConvergenceRow> streamed;
  const auto rows = run(cfg, [&](const ConvergenceRow& r) { streamed.push_back(r); });
  REQUIRE(rows.size() == 3);
  CHECK(streamed.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.experiment == "titchmarsh");
    CHECK(r.ratio == doctest::Approx(r.value / r.main_term));
    CHECK(r.wall_seconds > 0.0);
    CHECK(r.point_count > 0);
  }
  cfg.shards = 8;
  cfg.threads = 4;
  const auto sharded = run(cfg);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(format_row_untimed(rows[i]) == format_row_untimed(sharded[i]));
}

TEST_CASE("module errors carry experiment and T") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::acceptance;
  CHECK(kind_of([&] { run(cfg); }) == ErrorKind::config);

  cfg.experiment = Experiment::cardinal;
  cfg.T_ladder = {1e3};
  cfg.samples = 1;
  cfg.truncation = 16;
  CHECK(kind_of([&] { run(cfg); }) == ErrorKind::config);
}

TEST_CASE("gram experiment counts points") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::gram;
  cfg.T_ladder = {100.0, 1e3};
  const auto rows = run(cfg);
  CHECK(rows[1].point_count == 868);
  CHECK(rows[1].value == 868.0);
}

TEST_CASE("plot data") {
  const fs::path dir = scratch("plots");
  CHECK_THROWS_AS(emit_plot_data({}, dir.string()), Error);
  CHECK_FALSE(fs::exists(dir));

  std::vector<ConvergenceRow> rows{{"titchmarsh", 1e5, 1, 1, 1, 0.7, 1},
                                   {"titchmarsh", 1e3, 1, 1, 1, 0.9, 1},
                                   {"titchmarsh", 1e4, 1, 1, 1, 0.8, 1}};
  auto files = emit_plot_data(rows, dir.string());
  REQUIRE(files.size() == 1);
  auto lines = lines_of(files[0]);
  REQUIRE(lines.size() == 4);
  CHECK(lines[1] == "6.9077552789821368 0.90000000000000002");
  CHECK(std::stod(lines[1]) < std::stod(lines[2]));
  CHECK(std::stod(lines[2]) < std::stod(lines[3]));

  rows.push_back({"moment4", 1e3, 1, 1, 1, 2.0, 1});
  files = emit_plot_data(rows, dir.string());
  CHECK(files.size() == 2);
  CHECK(fs::exists(dir / "moment4.dat"));
  fs::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(Error(ErrorKind::config, "x")) == 2);
  CHECK(exit_code(Error(ErrorKind::io, "x")) == 4);
  CHECK(exit_code(Error(ErrorKind::domain, "x")) == 3);
  CHECK(exit_code(Error(ErrorKind::cost_guard, "x")) == 3);
}
