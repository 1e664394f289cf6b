#include "zetalab/gram.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/special_functions.hpp"

namespace zetalab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxIterations = 200;

struct Phase {
  double (*value)(double);
  double (*slope)(double);
};

double theta_default(double t) { return theta(t); }

Phase phase_of(GramKind kind) {
  if (kind == GramKind::half_theta1) return {&theta1, &theta1_prime};
  return {&theta_default, &theta_prime};
}

bool converged(double step, double t) {
  return std::fabs(step) <= 8.0 * std::numeric_limits<double>::epsilon() * t;
}

// Newton on a convex increasing phase, safeguarded by a bracket found by
// geometric doubling from 2 pi max(e, nu). Starting from the upper end of
// the bracket, convexity makes the iterates decrease monotonically.
double solve(const Phase& ph, double target, std::int64_t nu, double start) {
  double lo = kDefaultMinT;
  if (ph.value(lo) >= target)
    throw Error(ErrorKind::index_too_small, "Gram index " + std::to_string(nu) +
                                                " has its root below t = 10", nu);
  double hi = std::max(lo * 1.5, start);
  while (ph.value(hi) < target) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi * 0.5 > lo && ph.value(hi * 0.5) >= target) hi *= 0.5;
  if (hi * 0.5 > lo) lo = hi * 0.5;

  double t = hi;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double r = ph.value(t) - target;
    if (r < 0.0)
      lo = t;
    else
      hi = t;
    const double step = r / ph.slope(t);
    if (converged(step, t)) return t - step;
    double next = t - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) return next;
    t = next;
  }
  throw Error(ErrorKind::no_convergence,
              "Gram solver did not converge for index " + std::to_string(nu), nu);
}

void check_index(std::int64_t nu) {
  if (nu < kNuMin)
    throw Error(ErrorKind::index_too_small,
                "Gram index " + std::to_string(nu) + " is below the minimum 1", nu);
}

}  // namespace

const char* to_string(GramKind kind) noexcept {
  switch (kind) {
    case GramKind::full: return "full";
    case GramKind::half: return "half";
    case GramKind::half_theta1: return "half_theta1";
  }
  return "unknown";
}

std::optional<GramKind> parse_gram_kind(std::string_view name) noexcept {
  if (name == "full") return GramKind::full;
  if (name == "half") return GramKind::half;
  if (name == "half_theta1" || name == "half-theta1" || name == "g") return GramKind::half_theta1;
  return std::nullopt;
}

double gram_target(GramKind kind, std::int64_t nu) {
  const double step = kind == GramKind::full ? kPi : kPi / 2.0;
  return step * static_cast<double>(nu);
}

double gram_phase(GramKind kind, double t) {
  return kind == GramKind::half_theta1 ? theta1(t) : theta(t);
}

double gram_residual(const GramPoint& p) {
  return gram_phase(p.kind, p.t) - gram_target(p.kind, p.nu);
}

GramPoint gram_point(GramKind kind, std::int64_t nu) {
  check_index(nu);
  const double target = gram_target(kind, nu);
  const double start = kTwoPi * std::max(std::numbers::e, static_cast<double>(nu));
  switch (kind) {
    case GramKind::full:
      return {kind, nu, solve(phase_of(kind), target, nu, start)};
    case GramKind::half_theta1:
      return {kind, nu, solve(phase_of(kind), target, nu, start)};
    case GramKind::half: {
      // Refine g_nu, which is within O(1/(t log t)) of the root.
      double t = solve(phase_of(GramKind::half_theta1), target, nu, start);
      for (int step = 0; step < 2; ++step) {
        const double delta = (theta(t) - target) / theta_prime(t);
        t -= delta;
        if (converged(delta, t)) return {kind, nu, t};
      }
      return {kind, nu, solve(phase_of(kind), target, nu, t)};
    }
  }
  throw Error(ErrorKind::domain, "unknown Gram kind");
}

IndexInterval gram_indices(GramKind kind, double lo, double hi) {
  if (!(lo >= kDefaultMinT))
    throw Error(ErrorKind::domain, "Gram range must start at t >= 10, got " + std::to_string(lo));
  if (!(hi >= lo)) throw Error(ErrorKind::domain, "Gram range has hi < lo");

  const double step = kind == GramKind::full ? kPi : kPi / 2.0;
  auto t_of = [kind](std::int64_t nu) { return gram_point(kind, nu).t; };

  auto first = std::max<std::int64_t>(
      kNuMin, static_cast<std::int64_t>(std::ceil(gram_phase(kind, lo) / step)));
  while (t_of(first) < lo) ++first;
  while (first > kNuMin && t_of(first - 1) >= lo) --first;

  auto last = static_cast<std::int64_t>(std::floor(gram_phase(kind, hi) / step));
  last = std::max(last, first - 1);
  while (last >= first && t_of(last) > hi) --last;
  while (t_of(last + 1) <= hi) ++last;
  return {first, last};
}

double nyquist_spacing(double t) { return kTwoPi / std::log(t / kTwoPi); }

Spacing rho(GramKind kind, std::int64_t nu) {
  return {nu, nyquist_spacing(gram_point(kind, nu).t)};
}

double g_vs_ttilde_gap(std::int64_t nu) {
  const GramPoint g = gram_point(GramKind::half_theta1, nu);
  if (g.t < 1000.0)
    throw Error(ErrorKind::domain, "g_vs_ttilde_gap requires t >= 1000", nu);
  return gram_point(GramKind::half, nu).t - g.t;
}

}  // namespace zetalab
