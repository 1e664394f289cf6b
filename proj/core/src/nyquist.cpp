#include "zetalab/nyquist.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zetalab/correlation.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/gram.hpp"
#include "zetalab/special_functions.hpp"

namespace zetalab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Golub-Welsch would do as well; Newton on P_n is enough for small n.
GaussRule gauss_legendre(int n) {
  GaussRule rule{std::vector<double>(static_cast<std::size_t>(n)),
                 std::vector<double>(static_cast<std::size_t>(n))};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double sinc_pi(double x) {
  if (x == 0.0) return 1.0;
  const double px = kPi * x;
  return std::sin(px) / px;
}

double power_of(double v, int power) {
  const double v2 = v * v;
  return power == 2 ? v2 : v2 * v2;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(panel_fraction > 0.0 && panel_fraction <= 0.25))
    throw Error(ErrorKind::invalid_spec, "panel_fraction must lie in (0, 1/4]");
  if (rule_order < 2 || rule_order > 64)
    throw Error(ErrorKind::invalid_spec, "rule_order must lie in [2, 64]");
}

MomentIntegral moment_integral(int power, double T, double U, const QuadratureConfig& cfg,
                               const Parallel& par) {
  if (power != 2 && power != 4) throw Error(ErrorKind::domain, "moment power must be 2 or 4");
  if (!(T >= 1000.0)) throw Error(ErrorKind::domain, "moment_integral requires T >= 1000");
  if (!(U > 0.0)) throw Error(ErrorKind::domain, "moment_integral requires U > 0");
  cfg.validate();

  const double width_hint = cfg.panel_fraction * nyquist_spacing(T + U);
  const auto panels = static_cast<std::int64_t>(std::ceil(U / width_hint));
  const double h = U / static_cast<double>(panels);
  const GaussRule rule = gauss_legendre(cfg.rule_order);

  MomentIntegral out;
  out.panels = panels;
  out.value = parallel_sum1(0, panels - 1, par, [&](std::int64_t i) {
    const double a = T + static_cast<double>(i) * h;
    const double mid = a + 0.5 * h;
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      acc += rule.weights[j] * power_of(z(mid + 0.5 * h * rule.nodes[j]), power);
    return 0.5 * h * acc;
  });
  return out;
}

EffectRatio quadratic_effect_ratio(double T, double U, const QuadratureConfig& cfg,
                                   const Parallel& par) {
  EffectRatio out;
  out.integral = moment_integral(2, T, U, cfg, par).value;
  const SumResult sum = second_moment_discrete(T, U, par);
  out.point_count = sum.point_count;
  out.discrete = kTwoPi / std::log(T) * sum.value;
  out.degenerate = out.point_count < 2;
  out.ratio = out.discrete != 0.0 ? out.integral / out.discrete : 0.0;
  return out;
}

EffectRatio biquadratic_effect_ratio(double T, const QuadratureConfig& cfg, const Parallel& par) {
  EffectRatio out;
  out.integral = moment_integral(4, T, T, cfg, par).value;
  CorrelationSpec spec;
  spec.T = T;
  spec.k = 0;
  spec.l = 0;
  const SumResult sum = autocorrelation_sum(spec, par);
  out.point_count = sum.point_count;
  out.discrete = kTwoPi / std::log(T) * sum.value;
  out.degenerate = out.point_count < 2;
  out.ratio = out.discrete != 0.0 ? out.integral / out.discrete : 0.0;
  return out;
}

CardinalSpec CardinalSpec::for_window(double T, double span, int truncation) {
  CardinalSpec s{T, span, std::log(T / kTwoPi) / (4.0 * kPi), truncation};
  s.validate();
  return s;
}

std::int64_t CardinalSpec::sample_count() const {
  return static_cast<std::int64_t>(std::floor(2.0 * w * span * (1.0 + 1e-12))) + 1;
}

void CardinalSpec::validate() const {
  if (!(T >= kDefaultMinT)) throw Error(ErrorKind::invalid_spec, "cardinal window must start at t >= 10");
  if (!(span > 0.0) || !(w > 0.0)) throw Error(ErrorKind::invalid_spec, "cardinal span and w must be positive");
  if (truncation < 16) throw Error(ErrorKind::invalid_spec, "cardinal truncation must be >= 16");
}

namespace {

template <class Sample>
double reconstruct(const CardinalSpec& spec, double t, int truncation, Sample&& sample) {
  const double x = (t - spec.T) / spec.spacing();
  const auto n0 = static_cast<std::int64_t>(std::llround(x));
  if (n0 - truncation < 0 || n0 + truncation >= spec.sample_count())
    throw Error(ErrorKind::edge, "cardinal stencil around t = " + std::to_string(t) +
                                     " leaves the sampled window");
  if (t == spec.sample_time(n0)) return sample(n0);
  double acc = 0.0;
  for (std::int64_t n = n0 - truncation; n <= n0 + truncation; ++n)
    acc += sinc_pi(x - static_cast<double>(n)) * sample(n);
  return acc;
}

}  // namespace

double cardinal_reconstruct(const CardinalSpec& spec, double t) {
  spec.validate();
  return reconstruct(spec, t, spec.truncation,
                     [&](std::int64_t n) { return z(spec.sample_time(n)); });
}

CardinalSeries::CardinalSeries(const CardinalSpec& spec, const Parallel& par) : spec_(spec) {
  spec_.validate();
  samples_ = parallel_map<double>(0, spec_.sample_count() - 1, par,
                                  [this](std::int64_t n) { return z(spec_.sample_time(n)); });
}

double CardinalSeries::operator()(double t) const { return (*this)(t, spec_.truncation); }

double CardinalSeries::operator()(double t, int truncation) const {
  return reconstruct(spec_, t, truncation,
                     [this](std::int64_t n) { return samples_[static_cast<std::size_t>(n)]; });
}

double CardinalSeries::sampled_energy() const {
  ExactSum acc;
  for (double v : samples_) acc.add(v * v);
  return spec_.spacing() * acc.value();
}

}  // namespace zetalab
