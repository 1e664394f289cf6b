#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "zetalab/divisor.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/gram.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/validation/oracles.hpp"

using namespace zetalab;
namespace oracle = zetalab::validation;

namespace {
constexpr double kPi = std::numbers::pi;

// Z(t) and theta(t) at 30 digits, frozen from an arbitrary-precision run of
// the same definitions.
struct Frozen {
  double t, z, theta;
};
constexpr Frozen kFrozen[] = {
    {50.0, -0.340735005955024982753, 26.4613660701614096475},
    {100.0, 2.69269705666446347500, 87.9721652317872196255},
    {1000.0, 0.997794637521586613986, 2034.54642803803160870},
    {5000.0, -0.804257236352939849581, 14197.8976176021978100},
};
}  // namespace

TEST_CASE("oracles reproduce the frozen reference values") {
  for (const auto& f : kFrozen) {
    CHECK(static_cast<double>(oracle::z_exact(f.t)) == doctest::Approx(f.z).epsilon(1e-12));
    CHECK(static_cast<double>(oracle::theta_exact(f.t)) == doctest::Approx(f.theta).epsilon(1e-15));
  }
  CHECK(static_cast<double>(oracle::theta_root(0.0L, 15.0L, 20.0L)) == doctest::Approx(17.8455995404).epsilon(1e-11));
}

TEST_CASE("theta against the log-gamma oracle") {
  for (double t = 10.0; t <= 1e9; t *= 1.37) {
    const double ref = static_cast<double>(oracle::theta_exact(t));
    CHECK(std::fabs(theta(t) - ref) <= 1e-12 * (1.0 + std::fabs(ref)));
  }
  CHECK(std::fabs(theta(17.8455995404)) <= 1e-8);
}

TEST_CASE("theta remainder, monotonicity and domain") {
  CHECK(std::fabs(theta(1e4) - theta1(1e4)) <= 1e-4);
  double prev = theta(10.0);
  double worst = 0.0;
  for (double t = 10.05; t < 2e4; t *= 1.01) {
    const double v = theta(t);
    CHECK(v > prev);
    prev = v;
    worst = std::max(worst, std::fabs(v - theta1(t)) * t);
  }
  CHECK(worst <= 1.0);
  CHECK_THROWS_AS(theta(9.99), Error);
  CHECK(std::fabs(theta_prime(2.0 * kPi)) < 0.1);
}

TEST_CASE("theta1 closed forms") {
  CHECK(theta1(2.0 * kPi) == doctest::Approx(-9.0 * kPi / 8.0).epsilon(1e-15));
  CHECK(theta1_prime(2.0 * kPi * std::numbers::e) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(theta1_second(100.0) == doctest::Approx(0.005).epsilon(1e-15));
  CHECK_THROWS_AS(theta1(0.0), Error);
}

TEST_CASE("z against frozen values and the Euler-Maclaurin oracle") {
  CHECK(std::fabs(z(14.1347251417)) <= 1e-4);
  for (const auto& f : kFrozen) CHECK(std::fabs(z(f.t) - f.z) <= 1e-6);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pick(50.0, 5000.0);
  for (int i = 0; i < 20; ++i) {
    const double t = pick(rng);
    const double zt = z(t);
    const double mod2 = static_cast<double>(std::norm(oracle::zeta_em({0.5L, static_cast<long double>(t)})));
    CHECK(std::fabs(zt * zt - mod2) <= 2e-4);
  }
  CHECK_THROWS_AS(z(5.0), Error);
}

TEST_CASE("Riemann-Siegel corrections") {
  // Worst error over a short window shrinks with every added correction.
  std::vector<double> ts, ref;
  for (double t = 500.0; t < 520.0; t += 0.73) {
    ts.push_back(t);
    ref.push_back(static_cast<double>(oracle::z_exact(t)));
  }
  double prev = 1.0;
  for (int order = 0; order <= 5; ++order) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i)
      worst = std::max(worst, std::fabs(z(ts[i], {order, kDefaultMinT}) - ref[i]));
    CHECK(worst < prev);
    prev = worst;
  }
  CHECK(std::fabs(z(50.0) - kFrozen[0].z) <= 1e-6);
  CHECK_THROWS_AS(z(50.0, {6, kDefaultMinT}), Error);
  CHECK_THROWS_AS(z(50.0, {-1, kDefaultMinT}), Error);
}

TEST_CASE("Gram-law sign pattern near 1e4 is recorded") {
  const IndexInterval idx = gram_indices(GramKind::full, 1e4, 2e4);
  int alternating = 0;
  for (std::int64_t nu = idx.first; nu < idx.first + 50; ++nu) {
    const double t = gram_point(GramKind::full, nu).t;
    if ((nu % 2 == 0 ? 1.0 : -1.0) * z(t) > 0.0) ++alternating;
  }
  MESSAGE("Gram points near 1e4 with (-1)^nu Z(t_nu) > 0: " << alternating << " of 50");
}

TEST_CASE("Hardy-Littlewood main sum") {
  const DivisorTable dtab = DivisorTable::sieve(1, 5000);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> pick(1e4, 1.1e4);
  for (int i = 0; i < 100; ++i) {
    const double t = pick(rng);
    const double zt = z(t);
    CHECK(std::fabs(z2_hardy_littlewood(t, dtab) - zt * zt) / std::log(t) <= 20.0);
  }
  CHECK(z2_hardy_littlewood(11.0, dtab) == doctest::Approx(2.0 * std::cos(2.0 * theta(11.0))).epsilon(1e-14));

  const DivisorTable small = DivisorTable::sieve(1, 100);
  CHECK_THROWS_AS(z2_hardy_littlewood(1e4, small), Error);

  const IndexInterval idx = gram_indices(GramKind::full, 1e4, 2e4);
  double mean = 0.0;
  for (std::int64_t nu = idx.first; nu < idx.first + 200; ++nu)
    mean += z2_hardy_littlewood(gram_point(GramKind::full, nu).t, dtab) / 200.0;
  CHECK(mean > 0.2 * std::log(1e4));
  CHECK(mean < 5.0 * std::log(1e4));
}

TEST_CASE("phase vectors and the phase-modulated sum") {
  const DivisorTable dtab = DivisorTable::sieve(1, 2000);
  const double t = 1e4;
  const auto n = static_cast<std::size_t>(t / (2.0 * kPi));
  CHECK(z2_phase_modulated(t, PhaseVector::zeros(n), dtab) == z2_hardy_littlewood(t, dtab));

  const PhaseVector a = PhaseVector::generate(7, n);
  const PhaseVector b = PhaseVector::generate(7, 2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] >= -kPi);
    CHECK(a[i] <= kPi);
  }
  CHECK(z2_phase_modulated(t, a, dtab) == z2_phase_modulated(t, a, dtab));
  CHECK(z2_phase_modulated(t, a, dtab) == z2_phase_modulated(t, b, dtab));
  CHECK_THROWS_AS(z2_phase_modulated(t, PhaseVector::generate(7, n - 1), dtab), Error);
}

TEST_CASE("ensemble of phase-modulated fourth-moment sums near 1e4") {
  // The k = l sum over [T, 2T], estimated from every 16th Gram point and
  // averaged over 100 realizations.
  const double T = 1e4;
  const DivisorTable dtab = DivisorTable::sieve(1, 4000);
  const IndexInterval idx = gram_indices(GramKind::full, T, 2.0 * T);
  const auto n = static_cast<std::size_t>(2.0 * T / (2.0 * kPi)) + 1;
  std::vector<double> ts;
  for (std::int64_t nu = idx.first; nu <= idx.last; nu += 16) ts.push_back(gram_point(GramKind::full, nu).t);
  const double scale = static_cast<double>(idx.size()) / static_cast<double>(ts.size());
  double mean = 0.0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const PhaseVector ph = PhaseVector::generate(seed, n);
    double s = 0.0;
    for (double t : ts) {
      const double v = z2_phase_modulated(t, ph, dtab);
      s += v * v;
    }
    mean += scale * s / 100.0;
  }
  const double main_term = T * std::pow(std::log(T), 5) / (4.0 * std::pow(kPi, 3));
  MESSAGE("ensemble mean / main term = " << mean / main_term);
  CHECK(std::fabs(mean / main_term - 1.0) <= 0.5);
}
