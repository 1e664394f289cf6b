#include "zetalab/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zetalab/detail/random.hpp"
#include "zetalab/detail/rs_coefficients.hpp"
#include "zetalab/divisor.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// log(n) and n^{-1/2} for the Riemann-Siegel main sum.
struct TermTable {
  static constexpr std::size_t kSize = 1 << 16;
  std::vector<double> log_n;
  std::vector<double> inv_sqrt_n;

  TermTable() : log_n(kSize + 1), inv_sqrt_n(kSize + 1) {
    for (std::size_t n = 1; n <= kSize; ++n) {
      log_n[n] = std::log(static_cast<double>(n));
      inv_sqrt_n[n] = 1.0 / std::sqrt(static_cast<double>(n));
    }
  }

  static const TermTable& get() {
    static const TermTable table;
    return table;
  }
};

// Neumaier-compensated running sum for the long trigonometric sums.
struct Compensated {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double s = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      c += (sum - s) + x;
    else
      c += (x - s) + sum;
    sum = s;
  }
  double value() const { return sum + c; }
};

template <std::size_t N>
double horner(const std::array<double, N>& coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

double rs_correction(int k, double x) {
  switch (k) {
    case 0: return horner(detail::kRsC0, x);
    case 1: return horner(detail::kRsC1, x);
    case 2: return horner(detail::kRsC2, x);
    case 3: return horner(detail::kRsC3, x);
    default: return horner(detail::kRsC4, x);
  }
}

void check_min_t(double t, double min_t, const char* what) {
  if (!(t >= min_t))
    throw Error(ErrorKind::domain, std::string(what) + ": t = " + std::to_string(t) +
                                       " is below the domain floor " + std::to_string(min_t));
}

double modulated_sum(double t, const DivisorTable& dtab, const PhaseVector* phases) {
  check_min_t(t, kDefaultMinT, "hardy-littlewood");
  const auto cutoff = static_cast<std::int64_t>(std::floor(t / kTwoPi));
  if (dtab.lo() != 1 || dtab.hi() < cutoff)
    throw Error(ErrorKind::table_too_small,
                "divisor table must cover [1, " + std::to_string(cutoff) + "]");
  if (phases && phases->size() < static_cast<std::size_t>(cutoff))
    throw Error(ErrorKind::phase_too_short,
                "phase vector has " + std::to_string(phases->size()) + " entries, need " +
                    std::to_string(cutoff));
  const double two_theta = 2.0 * theta(t);
  const auto& tab = TermTable::get();
  Compensated acc;
  for (std::int64_t n = 1; n <= cutoff; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const double log_n = un <= TermTable::kSize ? tab.log_n[un] : std::log(static_cast<double>(n));
    double arg = two_theta - t * log_n;
    if (phases) arg += (*phases)[un];
    acc.add(dtab.d(n) / std::sqrt(static_cast<double>(n)) * std::cos(arg));
  }
  return 2.0 * acc.value();
}

}  // namespace

double theta(double t, double min_t) {
  check_min_t(t, min_t, "theta");
  const double r = 1.0 / t;
  const double r2 = r * r;
  const double tail =
      r * (1.0 / 48.0 +
           r2 * (7.0 / 5760.0 +
                 r2 * (31.0 / 80640.0 + r2 * (127.0 / 430080.0 + r2 * (511.0 / 1216512.0)))));
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 + tail;
}

double theta_prime(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "theta_prime: t must be positive");
  const double r2 = 1.0 / (t * t);
  const double tail =
      r2 * (1.0 / 48.0 +
            r2 * (7.0 / 1920.0 +
                  r2 * (31.0 / 16128.0 + r2 * (127.0 / 61440.0 + r2 * (511.0 / 135168.0)))));
  return 0.5 * std::log(t / kTwoPi) - tail;
}

double theta1(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "theta1: t must be positive");
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0;
}

double theta1_prime(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "theta1_prime: t must be positive");
  return 0.5 * std::log(t / kTwoPi);
}

double theta1_second(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::domain, "theta1_second: t must be positive");
  return 0.5 / t;
}

double z(double t, const RiemannSiegelConfig& cfg) {
  check_min_t(t, cfg.min_t, "z");
  if (cfg.correction_order < 0 || cfg.correction_order > 5)
    throw Error(ErrorKind::domain, "z: correction_order must lie in [0, 5]");

  const double a = std::sqrt(t / kTwoPi);
  const auto n_max = static_cast<std::int64_t>(std::floor(a));
  const double th = theta(t, cfg.min_t);
  const auto& tab = TermTable::get();

  Compensated acc;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (un <= TermTable::kSize) {
      acc.add(tab.inv_sqrt_n[un] * std::cos(th - t * tab.log_n[un]));
    } else {
      const double dn = static_cast<double>(n);
      acc.add(std::cos(th - t * std::log(dn)) / std::sqrt(dn));
    }
  }
  double result = 2.0 * acc.value();

  if (cfg.correction_order > 0) {
    const double x = (a - static_cast<double>(n_max)) - 0.5;
    const double inv_a = 1.0 / a;
    double scale = 1.0;
    double corr = 0.0;
    for (int k = 0; k < cfg.correction_order; ++k) {
      corr += rs_correction(k, x) * scale;
      scale *= inv_a;
    }
    const double sign = (n_max % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
    result += sign * corr / std::sqrt(a);
  }
  return result;
}

double z2_hardy_littlewood(double t, const DivisorTable& dtab) {
  return modulated_sum(t, dtab, nullptr);
}

double PhaseVector::phase(std::uint64_t seed, std::uint64_t n) {
  return -kPi + kTwoPi * detail::unit_interval(detail::keyed(seed, n));
}

PhaseVector PhaseVector::generate(std::uint64_t seed, std::size_t length) {
  std::vector<double> phases(length);
  for (std::size_t i = 0; i < length; ++i) phases[i] = phase(seed, i + 1);
  return PhaseVector(seed, std::move(phases));
}

PhaseVector PhaseVector::zeros(std::size_t length) {
  return PhaseVector(0, std::vector<double>(length, 0.0));
}

double z2_phase_modulated(double t, const PhaseVector& phases, const DivisorTable& dtab) {
  return modulated_sum(t, dtab, &phases);
}

}  // namespace zetalab
