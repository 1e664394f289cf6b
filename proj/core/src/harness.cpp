#include "zetalab/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "zetalab/correlation.hpp"
#include "zetalab/detail/random.hpp"
#include "zetalab/nyquist.hpp"
#include "zetalab/special_functions.hpp"

namespace zetalab {
namespace {

constexpr double kPi = std::numbers::pi;

struct ExperimentName {
  Experiment e;
  const char* name;
};

constexpr ExperimentName kExperimentNames[] = {
    {Experiment::gram, "gram"},
    {Experiment::titchmarsh, "titchmarsh"},
    {Experiment::autocorr, "autocorr"},
    {Experiment::alternating, "alternating"},
    {Experiment::moment4, "moment4"},
    {Experiment::moment2, "moment2"},
    {Experiment::nyquist, "nyquist"},
    {Experiment::cardinal, "cardinal"},
    {Experiment::euler, "euler"},
    {Experiment::hl_effect, "hl-effect"},
    {Experiment::decompose, "decompose"},
    {Experiment::acceptance, "acceptance"},
};

[[noreturn]] void config_error(const std::string& field, const std::string& reason) {
  throw Error(ErrorKind::config, field + ": " + reason);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_real(const std::string& field, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    config_error(field, "not a real number: '" + text + "'");
  }
}

template <class Int>
Int parse_int(const std::string& field, const std::string& text) {
  Int v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) config_error(field, "not an integer: '" + text + "'");
  return v;
}

bool parse_bool(const std::string& field, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  config_error(field, "not a boolean: '" + text + "'");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double ratio_of(double value, double main_term) { return main_term != 0.0 ? value / main_term : 0.0; }

ConvergenceRow row_from(const std::string& name, double T, const SumResult& r) {
  return {name, T, r.point_count, r.value, r.main_term, r.ratio, 0.0};
}

ConvergenceRow make_row(const std::string& name, double T, std::int64_t count, double value,
                        double main_term) {
  return {name, T, count, value, main_term, ratio_of(value, main_term), 0.0};
}

int smallest_floor_log(const std::vector<double>& ladder) {
  return static_cast<int>(std::floor(std::log(ladder.front())));
}

std::vector<int> euler_signs(std::uint64_t seed, int N) {
  std::vector<int> signs;
  for (int n = 1; n <= N; ++n)
    signs.push_back((detail::keyed(seed, static_cast<std::uint64_t>(n)) >> 63) != 0 ? -1 : 1);
  return signs;
}

std::vector<ConvergenceRow> compute(const ExperimentConfig& cfg, double T) {
  const Parallel par = cfg.parallel();
  const std::string name = to_string(cfg.experiment);
  const double lt = std::log(T);
  switch (cfg.experiment) {
    case Experiment::gram: {
      const GramKind kind = cfg.resolved_kind();
      const IndexInterval idx = gram_indices(kind, T, 2.0 * T);
      const double main = (kind == GramKind::full ? 0.5 : 1.0) * T * lt / kPi;
      return {make_row(name, T, idx.size(), static_cast<double>(idx.size()), main)};
    }
    case Experiment::titchmarsh:
      return {row_from(name, T, titchmarsh_sum(T, par))};
    case Experiment::autocorr:
    case Experiment::alternating: {
      CorrelationSpec spec;
      spec.T = T;
      spec.kind = cfg.resolved_kind();
      spec.k = cfg.k;
      spec.l = cfg.l;
      spec.M = cfg.resolved_M(T);
      const SumResult r = cfg.experiment == Experiment::autocorr ? autocorrelation_sum(spec, par)
                                                                 : alternating_sum(spec, par);
      return {row_from(name, T, r)};
    }
    case Experiment::moment4: {
      const MomentIntegral m = moment_integral(4, T, T, {}, par);
      return {make_row(name, T, m.panels, m.value, T * std::pow(lt, 4) / (2.0 * kPi * kPi))};
    }
    case Experiment::moment2: {
      const double U = std::sqrt(T) * lt;
      const MomentIntegral m = moment_integral(2, T, U, {}, par);
      return {make_row(name, T, m.panels, m.value, U * lt)};
    }
    case Experiment::nyquist: {
      const EffectRatio q = quadratic_effect_ratio(T, std::sqrt(T) * lt, {}, par);
      const EffectRatio b = biquadratic_effect_ratio(T, {}, par);
      return {make_row("nyquist-quadratic", T, q.point_count, q.integral, q.discrete),
              make_row("nyquist-biquadratic", T, b.point_count, b.integral, b.discrete)};
    }
    case Experiment::cardinal: {
      const std::int64_t n = 10 * static_cast<std::int64_t>(cfg.samples);
      const double h = 2.0 * kPi / std::log(T / (2.0 * kPi));
      const CardinalSpec spec = CardinalSpec::for_window(T, static_cast<double>(n - 1) * h,
                                                         cfg.truncation);
      const CardinalSeries series(spec, par);
      const std::int64_t first = cfg.truncation;
      const std::int64_t last = spec.sample_count() - cfg.truncation - 2;
      const auto err = parallel_sum<2>(first, last, par, [&](std::int64_t j) {
        const double t = spec.sample_time(j) + 0.5 * spec.spacing();
        const double exact = z(t);
        const double diff = series(t) - exact;
        return std::array<double, 2>{diff * diff, exact * exact};
      });
      const double lo = T - 0.5 * spec.spacing();
      const double span = static_cast<double>(spec.sample_count()) * spec.spacing();
      const double energy = moment_integral(2, lo, span, {}, par).value;
      return {make_row(name, T, last - first + 1, err[0], err[1]),
              make_row("cardinal-energy", T, spec.sample_count(), energy,
                       series.sampled_energy())};
    }
    case Experiment::euler: {
      const std::vector<int> signs = euler_signs(cfg.seed, cfg.resolved_N());
      return {row_from(name, T, euler_weighted_sum(T, cfg.resolved_N(), signs, par))};
    }
    case Experiment::hl_effect: {
      const int M = cfg.resolved_M(T);
      return {row_from(name, T, hl_effect_biquadratic(T, M, par))};
    }
    case Experiment::decompose: {
      const DecompositionSample s =
          s_decomposition_sample(T, cfg.samples, cfg.k, cfg.l, cfg.seed, par);
      const double rest = std::max({std::fabs(s.mean_s2), std::fabs(s.mean_s3), std::fabs(s.mean_s4)});
      const auto count = static_cast<std::int64_t>(s.rows.size());
      return {make_row("decompose-s1", T, count, s.mean_s1, s.s1_main_term),
              make_row("decompose-offdiagonal", T, count, rest, s.mean_s1)};
    }
    case Experiment::acceptance:
      break;
  }
  throw Error(ErrorKind::config, "experiment: acceptance is run by the validation suite");
}

}  // namespace

const char* to_string(Experiment e) noexcept {
  for (const auto& n : kExperimentNames)
    if (n.e == e) return n.name;
  return "?";
}

std::optional<Experiment> parse_experiment(std::string_view name) noexcept {
  for (const auto& n : kExperimentNames)
    if (name == n.name) return n.e;
  if (name == "hl_effect") return Experiment::hl_effect;
  return std::nullopt;
}

GramKind ExperimentConfig::resolved_kind() const {
  if (kind) return *kind;
  return experiment == Experiment::alternating || experiment == Experiment::decompose
             ? GramKind::half
             : GramKind::full;
}

int ExperimentConfig::resolved_M(double T) const {
  if (M) return *M;
  if (experiment == Experiment::hl_effect) return static_cast<int>(std::ceil(std::log(T)));
  return std::max(std::abs(k), std::abs(l));
}

int ExperimentConfig::resolved_N() const {
  if (N) return *N;
  const int cap = smallest_floor_log(T_ladder) + 1;
  int n = 1;
  while ((n + 1) * (n + 1) <= cap) ++n;
  return n;
}

void ExperimentConfig::validate() const {
  if (T_ladder.empty()) config_error("T_ladder", "at least one T is required");
  if (!std::is_sorted(T_ladder.begin(), T_ladder.end()) ||
      std::adjacent_find(T_ladder.begin(), T_ladder.end()) != T_ladder.end())
    config_error("T_ladder", "values must be strictly ascending");
  if (shards < 1) config_error("shards", "must be >= 1");
  if (experiment == Experiment::acceptance) return;

  const double tmin = T_ladder.front();
  const bool gram_only = experiment == Experiment::gram;
  if (!(tmin >= (gram_only ? kDefaultMinT : 1.0e3)))
    config_error("T_ladder", gram_only ? "values must be >= 10" : "values must be >= 1000");

  const GramKind kd = resolved_kind();
  switch (experiment) {
    case Experiment::autocorr:
      if (kd == GramKind::half_theta1) config_error("kind", "autocorr needs full or half");
      break;
    case Experiment::alternating:
    case Experiment::decompose:
      if (kd != GramKind::half) config_error("kind", "this experiment runs on the half sequence");
      break;
    default:
      break;
  }
  if (experiment == Experiment::autocorr || experiment == Experiment::alternating) {
    for (double T : T_ladder) {
      const int m = resolved_M(T);
      if (std::abs(k) > m || std::abs(l) > m) config_error("M", "must be >= |k| and |l|");
      if (m > std::log(T)) config_error("M", "must be <= log T for every T");
    }
  }
  if (experiment == Experiment::hl_effect) {
    for (double T : T_ladder) {
      const int c = static_cast<int>(std::ceil(std::log(T)));
      const int m = resolved_M(T);
      if (m < c || m > 3 * c) config_error("M", "must lie in [ceil(log T), 3 ceil(log T)] for every T");
    }
  }
  if (experiment == Experiment::euler) {
    const int n = resolved_N();
    if (n < 1) config_error("N", "must be >= 1");
    if (n * n > smallest_floor_log(T_ladder) + 1) config_error("N", "N^2 must be <= floor(log T) + 1");
  }
  if (experiment == Experiment::cardinal && truncation < 16) config_error("truncation", "must be >= 16");
  if (experiment == Experiment::cardinal && 10 * samples < 2 * truncation + 4)
    config_error("samples", "window too short for the truncation");
  if (experiment == Experiment::decompose) {
    if (samples < 1) config_error("samples", "must be >= 1");
    for (double T : T_ladder)
      if (T >= 2.0 * kPi * kDefaultDecompositionCap)
        config_error("T_ladder", "decompose refuses t~/2pi above the cap " +
                                     fmt17(kDefaultDecompositionCap) + " (T = " + fmt17(T) + ")");
  }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::config, "config: cannot open '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::config, "config: line " + std::to_string(lineno) + " has no '='");
    out[trim(std::string_view(t).substr(0, eq))] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "experiment") {
    const auto e = parse_experiment(value);
    if (!e) config_error(key, "unknown experiment '" + value + "'");
    cfg.experiment = *e;
  } else if (key == "T_ladder" || key == "T") {
    cfg.T_ladder.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      if (!t.empty()) cfg.T_ladder.push_back(parse_real("T_ladder", t));
    }
  } else if (key == "k") {
    cfg.k = parse_int<int>(key, value);
  } else if (key == "l") {
    cfg.l = parse_int<int>(key, value);
  } else if (key == "M") {
    cfg.M = parse_int<int>(key, value);
  } else if (key == "N") {
    cfg.N = parse_int<int>(key, value);
  } else if (key == "kind") {
    const auto g = parse_gram_kind(value);
    if (!g) config_error(key, "unknown sequence kind '" + value + "'");
    cfg.kind = *g;
  } else if (key == "seed") {
    cfg.seed = parse_int<std::uint64_t>(key, value);
  } else if (key == "shards") {
    cfg.shards = parse_int<unsigned>(key, value);
  } else if (key == "threads") {
    cfg.threads = parse_int<unsigned>(key, value);
  } else if (key == "truncation") {
    cfg.truncation = parse_int<int>(key, value);
  } else if (key == "samples") {
    cfg.samples = parse_int<int>(key, value);
  } else if (key == "out_path" || key == "out") {
    cfg.out_path = value;
  } else if (key == "stdout") {
    cfg.to_stdout = parse_bool(key, value);
  } else {
    config_error(key, "unknown key");
  }
}

std::string format_row_untimed(const ConvergenceRow& row) {
  return row.experiment + "," + fmt17(row.T) + "," + std::to_string(row.point_count) + "," +
         fmt17(row.value) + "," + fmt17(row.main_term) + "," + fmt17(row.ratio);
}

std::string format_row(const ConvergenceRow& row) {
  return format_row_untimed(row) + "," + fmt17(row.wall_seconds);
}

std::vector<ConvergenceRow> run(const ExperimentConfig& cfg, const RowSink& sink) {
  cfg.validate();
  if (cfg.experiment == Experiment::acceptance)
    throw Error(ErrorKind::config, "experiment: acceptance is run by the validation suite");
  std::vector<ConvergenceRow> rows;
  for (double T : cfg.T_ladder) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<ConvergenceRow> batch;
    try {
      batch = compute(cfg, T);
    } catch (const Error& e) {
      std::string where = std::string("experiment=") + to_string(cfg.experiment) + " T=" + fmt17(T);
      if (e.nu()) where += " nu=" + std::to_string(*e.nu());
      throw Error(e.kind(), where + ": " + e.what(), e.nu());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const double per_row = std::max(elapsed.count() / static_cast<double>(batch.size()), 1e-9);
    for (auto& r : batch) {
      r.wall_seconds = per_row;
      if (sink) sink(r);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<std::string> emit_plot_data(const std::vector<ConvergenceRow>& rows,
                                        const std::string& dir) {
  if (rows.empty()) throw Error(ErrorKind::domain, "emit_plot_data: no rows to write");
  std::map<std::string, std::vector<const ConvergenceRow*>> groups;
  for (const auto& r : rows) groups[r.experiment].push_back(&r);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::io, "emit_plot_data: cannot create '" + dir + "': " + ec.message());

  std::vector<std::string> written;
  for (auto& [name, group] : groups) {
    std::stable_sort(group.begin(), group.end(),
                     [](const ConvergenceRow* a, const ConvergenceRow* b) { return a->T < b->T; });
    const std::string path = (std::filesystem::path(dir) / (name + ".dat")).string();
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::io, "emit_plot_data: cannot write '" + path + "'");
    out << "# log(T) ratio\n";
    for (const auto* r : group) out << fmt17(std::log(r->T)) << ' ' << fmt17(r->ratio) << '\n';
    if (!out) throw Error(ErrorKind::io, "emit_plot_data: write failed for '" + path + "'");
    written.push_back(path);
  }
  return written;
}

int exit_code(const Error& e) noexcept {
  switch (e.kind()) {
    case ErrorKind::config:
      return 2;
    case ErrorKind::io:
      return 4;
    default:
      return 3;
  }
}

}  // namespace zetalab
