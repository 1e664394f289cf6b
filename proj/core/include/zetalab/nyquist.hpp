#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/parallel.hpp"

namespace zetalab {

// Composite Gauss-Legendre rule with uniform panels. The panel width is
// panel_fraction times the Nyquist interval 2 pi / log(t / 2 pi) evaluated at
// the top of the range, where it is smallest.
struct QuadratureConfig {
  double panel_fraction = 0.125;
  int rule_order = 8;

  void validate() const;
};

struct MomentIntegral {
  double value = 0.0;
  std::int64_t panels = 0;
};

// int_T^{T+U} Z(t)^power dt for power in {2, 4}.
MomentIntegral moment_integral(int power, double T, double U, const QuadratureConfig& cfg = {},
                               const Parallel& par = {});

struct EffectRatio {
  double integral = 0.0;
  double discrete = 0.0;  // (2 pi / log T) sum Z^power(t_nu)
  double ratio = 0.0;     // integral / discrete
  std::int64_t point_count = 0;
  bool degenerate = false;  // fewer than two Gram points in the window
};

// int_T^{T+U} Z^2 against (2 pi / log T) sum_{T <= t_nu <= T+U} Z^2(t_nu).
EffectRatio quadratic_effect_ratio(double T, double U, const QuadratureConfig& cfg = {},
                                   const Parallel& par = {});

// int_T^{2T} Z^4 against (2 pi / log T) sum_{T <= t_nu <= 2T} Z^4(t_nu).
EffectRatio biquadratic_effect_ratio(double T, const QuadratureConfig& cfg = {},
                                     const Parallel& par = {});

// Uniform sampling grid T + n / (2w), n = 0..floor(2w span), with bandwidth
// w = log(T / 2 pi) / (4 pi), i.e. spacing 2 pi / log(T / 2 pi).
struct CardinalSpec {
  double T = 0.0;
  double span = 0.0;
  double w = 0.0;
  int truncation = 64;  // sinc terms kept on each side, >= 16

  static CardinalSpec for_window(double T, double span, int truncation = 64);
  double spacing() const { return 1.0 / (2.0 * w); }
  std::int64_t sample_count() const;  // number of grid points in the window
  double sample_time(std::int64_t n) const { return T + static_cast<double>(n) * spacing(); }
  void validate() const;
};

// Truncated cardinal series: sum_{|n - n0| <= truncation} sinc(2w(t - t_n)) Z(t_n),
// n0 the nearest sample. Throws ErrorKind::edge when the stencil leaves the
// window.
double cardinal_reconstruct(const CardinalSpec& spec, double t);

// The same reconstruction over samples evaluated once up front.
class CardinalSeries {
 public:
  explicit CardinalSeries(const CardinalSpec& spec, const Parallel& par = {});

  const CardinalSpec& spec() const noexcept { return spec_; }
  const std::vector<double>& samples() const noexcept { return samples_; }
  double operator()(double t) const;
  double operator()(double t, int truncation) const;
  // (1 / 2w) sum Z^2(t_n) over the whole grid.
  double sampled_energy() const;

 private:
  CardinalSpec spec_;
  std::vector<double> samples_;
};

}  // namespace zetalab
