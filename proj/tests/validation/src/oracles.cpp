#include "zetalab/validation/oracles.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace zetalab::validation {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// B_{2k} for k = 1..20.
constexpr std::array<long double, 20> kBernoulli = {
    1.0L / 6,
    -1.0L / 30,
    1.0L / 42,
    -1.0L / 30,
    5.0L / 66,
    -691.0L / 2730,
    7.0L / 6,
    -3617.0L / 510,
    43867.0L / 798,
    -174611.0L / 330,
    854513.0L / 138,
    -236364091.0L / 2730,
    8553103.0L / 6,
    -23749461029.0L / 870,
    8615841276005.0L / 14322,
    -7709321041217.0L / 510,
    2577687858367.0L / 6,
    -26315271553053477373.0L / 1919190,
    2929993913841559.0L / 6,
    -261082718496449122051.0L / 13530,
};

}  // namespace

cld log_gamma(cld s) {
  if (s.real() <= 0.0L) throw std::domain_error("log_gamma oracle needs Re s > 0");
  cld shift = 0.0L;
  while (std::abs(s) < 40.0L || s.real() < 20.0L) {
    shift += std::log(s);
    s += 1.0L;
  }
  cld acc = (s - 0.5L) * std::log(s) - s + 0.5L * std::log(2.0L * kPiL);
  const cld inv = 1.0L / s;
  const cld inv2 = inv * inv;
  cld p = inv;
  for (int k = 1; k <= 12; ++k) {
    acc += kBernoulli[static_cast<std::size_t>(k - 1)] / ((2.0L * k) * (2.0L * k - 1.0L)) * p;
    p *= inv2;
  }
  return acc - shift;
}

long double theta_exact(long double t) {
  return log_gamma(cld(0.25L, 0.5L * t)).imag() - 0.5L * t * std::log(kPiL);
}

long double theta1_exact(long double t) {
  return 0.5L * t * std::log(t / (2.0L * kPiL)) - 0.5L * t - kPiL / 8.0L;
}

cld zeta_em(cld s, std::int64_t N, int K) {
  if (N <= 0) N = std::max<std::int64_t>(20, static_cast<std::int64_t>(std::fabs(s.imag()) / 3.0L));
  K = std::min<int>(K, static_cast<int>(kBernoulli.size()));
  cld acc = 0.0L;
  for (std::int64_t n = 1; n < N; ++n) acc += std::exp(-s * std::log(static_cast<long double>(n)));
  const long double lnN = std::log(static_cast<long double>(N));
  const cld Ns = std::exp(-s * lnN);  // N^{-s}
  acc += Ns * static_cast<long double>(N) / (s - 1.0L) + 0.5L * Ns;
  // sum_k B_{2k}/(2k)! s (s+1) ... (s+2k-2) N^{-s-2k+1}
  cld rising = s;
  cld power = Ns / static_cast<long double>(N);
  long double fact = 2.0L;
  for (int k = 1; k <= K; ++k) {
    acc += kBernoulli[static_cast<std::size_t>(k - 1)] / fact * rising * power;
    rising *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    power /= static_cast<long double>(N) * static_cast<long double>(N);
    fact *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
  }
  return acc;
}

long double z_exact(long double t) {
  const long double th = theta_exact(t);
  return (cld(std::cos(th), std::sin(th)) * zeta_em(cld(0.5L, t))).real();
}

long double theta_root(long double target, long double lo, long double hi) {
  long double flo = theta_exact(lo) - target;
  if (flo * (theta_exact(hi) - target) > 0.0L) throw std::domain_error("theta_root: no sign change");
  for (int i = 0; i < 200 && hi - lo > 0.0L; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    const long double fm = theta_exact(mid) - target;
    if ((fm < 0.0L) == (flo < 0.0L)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

std::uint32_t divisor_count(std::uint64_t n) {
  std::uint32_t c = 0;
  for (std::uint64_t i = 1; i * i <= n; ++i)
    if (n % i == 0) c += (i * i == n) ? 1 : 2;
  return c;
}

}  // namespace zetalab::validation
