#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zetalab {

class DivisorTable;

inline constexpr double kDefaultMinT = 10.0;

// Riemann-Siegel evaluation of Z(t).
//
// `correction_order` is the number of asymptotic corrections C_0..C_{k-1}
// added to the main sum, 0 <= k <= 5. With k corrections the absolute error
// is O(t^{-(2k+1)/4}); the default keeps all five, which gives roughly 1e-6
// at t = 50 and better than 1e-9 beyond t = 1000.
struct RiemannSiegelConfig {
  int correction_order = 5;
  double min_t = kDefaultMinT;
};

// Riemann-Siegel theta, Im log Gamma(1/4 + it/2) - (t/2) log pi, from its
// Stirling expansion. Throws ErrorKind::domain for t < min_t.
double theta(double t, double min_t = kDefaultMinT);

// Derivative of theta from the same expansion. Defined for t > 0 but only
// accurate to machine precision for t >= 10.
double theta_prime(double t);

// Elementary main part t/2 log(t/2pi) - t/2 - pi/8 and its derivatives.
double theta1(double t);
double theta1_prime(double t);
double theta1_second(double t);

double z(double t, const RiemannSiegelConfig& cfg = {});

// Main sum of the Hardy-Littlewood approximate formula for Z(t)^2:
// 2 sum_{n <= t/2pi} d(n)/sqrt(n) cos(2 theta(t) - t log n). The cutoff
// always includes n = floor(t/2pi).
double z2_hardy_littlewood(double t, const DivisorTable& dtab);

// One realization of the random phases phi_1, phi_2, ... uniform on
// [-pi, pi). Entries come from a counter-based generator keyed by
// (seed, n), so every vector built from the same seed agrees on its common
// prefix and regeneration is bit-identical.
class PhaseVector {
 public:
  static PhaseVector generate(std::uint64_t seed, std::size_t length);
  static PhaseVector zeros(std::size_t length);
  static double phase(std::uint64_t seed, std::uint64_t n);

  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t size() const noexcept { return phases_.size(); }
  // 1-based, matching phi_n.
  double operator[](std::size_t n) const { return phases_[n - 1]; }
  std::span<const double> values() const noexcept { return phases_; }

 private:
  PhaseVector(std::uint64_t seed, std::vector<double> phases)
      : seed_(seed), phases_(std::move(phases)) {}

  std::uint64_t seed_;
  std::vector<double> phases_;
};

// 2 sum_{n <= t/2pi} d(n)/sqrt(n) cos(2 theta(t) - t log n + phi_n).
double z2_phase_modulated(double t, const PhaseVector& phases, const DivisorTable& dtab);

}  // namespace zetalab
