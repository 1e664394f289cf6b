#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/nyquist.hpp"
#include "zetalab/special_functions.hpp"

using namespace zetalab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("quadrature config") {
  QuadratureConfig c;
  CHECK(c.panel_fraction == 0.125);
  CHECK(c.rule_order == 8);
  c.panel_fraction = 0.3;
  CHECK_THROWS_AS(c.validate(), Error);
  CHECK_THROWS_AS(moment_integral(3, 1e3, 10.0), Error);
  CHECK_THROWS_AS(moment_integral(2, 500.0, 10.0), Error);
  CHECK_THROWS_AS(moment_integral(2, 1e3, 0.0), Error);
}

TEST_CASE("quadrature refinement stability") {
  QuadratureConfig coarse;
  QuadratureConfig fine;
  fine.panel_fraction = coarse.panel_fraction / 2.0;
  for (int power : {2, 4}) {
    const MomentIntegral a = moment_integral(power, 1e4, 200.0, coarse);
    const MomentIntegral b = moment_integral(power, 1e4, 200.0, fine);
    CHECK(a.value > 0.0);
    CHECK(b.panels >= 2 * a.panels - 1);
    CHECK(std::fabs(a.value - b.value) <= 1e-6 * std::fabs(b.value));
  }
}

TEST_CASE("quadrature of a short window against dense trapezoid") {
  const double T = 2e3, U = 3.0;
  const int n = 200000;
  double trap = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double v = z(T + U * i / n);
    trap += (i == 0 || i == n ? 0.5 : 1.0) * v * v;
  }
  trap *= U / n;
  CHECK(moment_integral(2, T, U).value == doctest::Approx(trap).epsilon(1e-8));
}

TEST_CASE("effect ratios") {
  const EffectRatio tiny = quadratic_effect_ratio(1e4, 0.05);
  CHECK(tiny.degenerate);
  const EffectRatio q = quadratic_effect_ratio(1e3, std::sqrt(1e3) * std::log(1e3));
  CHECK_FALSE(q.degenerate);
  CHECK(q.ratio == doctest::Approx(q.integral / q.discrete));
  CHECK(q.ratio > 0.8);
  CHECK(q.ratio < 1.2);
}

TEST_CASE("cardinal grid") {
  const CardinalSpec s = CardinalSpec::for_window(1e5, 100.0, 16);
  CHECK(s.spacing() == doctest::Approx(2.0 * kPi / std::log(1e5 / (2.0 * kPi))).epsilon(1e-15));
  CHECK(s.w == doctest::Approx(std::log(1e5 / (2.0 * kPi)) / (4.0 * kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(CardinalSpec::for_window(1e5, 100.0, 15), Error);

  const double h = s.spacing();
  const CardinalSpec exact = CardinalSpec::for_window(1e5, 99.0 * h, 16);
  CHECK(exact.sample_count() == 100);
}

TEST_CASE("cardinal reconstruction") {
  const CardinalSpec s = CardinalSpec::for_window(1e5, 120.0 * 2.0 * kPi / std::log(1e5 / (2.0 * kPi)), 16);
  const CardinalSeries series(s);
  for (std::int64_t n = 16; n < s.sample_count() - 17; n += 5) {
    const double t = s.sample_time(n);
    CHECK(series(t) == series.samples()[static_cast<std::size_t>(n)]);
    CHECK(cardinal_reconstruct(s, t) == z(t));
  }
  const double mid = s.sample_time(60) + 0.5 * s.spacing();
  CHECK(cardinal_reconstruct(s, mid) == doctest::Approx(series(mid)).epsilon(1e-12));
  try {
    series(s.sample_time(3));
    FAIL("expected an edge error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::edge);
  }
  CHECK_THROWS_AS(series(s.sample_time(s.sample_count() - 2)), Error);
  CHECK(series.sampled_energy() > 0.0);
}
