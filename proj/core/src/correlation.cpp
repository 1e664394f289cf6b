#include "zetalab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <string>

#include "zetalab/detail/random.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double pow5(double x) { return x * x * x * x * x; }
double pow4(double x) { return x * x * x * x; }

double z2(double t) {
  const double v = z(t);
  return v * v;
}

void finish(SumResult& r) {
  r.ratio = r.main_term != 0.0 ? r.value / r.main_term : 0.0;
  r.point_count = r.nu_range.size();
}

void require_height(double T, const char* what) {
  if (!(T >= 1000.0))
    throw Error(ErrorKind::domain, std::string(what) + " requires T >= 1000, got " + std::to_string(T));
}

// Leading constant of the shifted fourth-moment sum over the full sequence.
double full_constant(int k, int l) {
  if (k == l) return 1.0 / (4.0 * kPi * kPi * kPi);
  const double d = static_cast<double>(k - l);
  return 3.0 / (4.0 * pow5(kPi) * d * d);
}

double shifted_product(const GramPoint& p, int k, int l) {
  const double rho = nyquist_spacing(p.t);
  const double a = z2(p.t + k * rho);
  const double b = (k == l) ? a : z2(p.t + l * rho);
  return a * b;
}

void check_cost(double t, double cap, std::int64_t nu) {
  if (t / kTwoPi > cap)
    throw Error(ErrorKind::cost_guard,
                "s_decomposition: t/2pi = " + std::to_string(t / kTwoPi) + " exceeds the cap " +
                    std::to_string(cap) + " (cost grows with t/2pi)",
                nu);
}

struct DecompositionSetup {
  double t;
  double rho;
  std::int64_t cutoff;
};

DecompositionSetup prepare(std::int64_t nu, const DivisorTable& dtab, double cap) {
  const GramPoint p = gram_point(GramKind::half, nu);
  if (p.t < 1000.0) throw Error(ErrorKind::domain, "s_decomposition requires t~_nu >= 1000", nu);
  check_cost(p.t, cap, nu);
  const auto cutoff = static_cast<std::int64_t>(std::floor(p.t / kTwoPi));
  if (dtab.lo() != 1 || dtab.hi() < cutoff)
    throw Error(ErrorKind::table_too_small,
                "divisor table must cover [1, " + std::to_string(cutoff) + "]", nu);
  return {p.t, nyquist_spacing(p.t), cutoff};
}

double product_at(const DecompositionSetup& s, int k, int l) {
  return z2(s.t + k * s.rho) * z2(s.t + l * s.rho);
}

}  // namespace

void CorrelationSpec::validate() const {
  if (!(T >= kDefaultMinT)) throw Error(ErrorKind::invalid_spec, "T must be >= 10");
  if (U && !(*U > 0.0)) throw Error(ErrorKind::invalid_spec, "U must be positive");
  if (M < 0) throw Error(ErrorKind::invalid_spec, "M must be nonnegative");
  if (std::abs(k) > M || std::abs(l) > M)
    throw Error(ErrorKind::invalid_spec, "shifts must satisfy |k|, |l| <= M (k=" +
                                             std::to_string(k) + ", l=" + std::to_string(l) +
                                             ", M=" + std::to_string(M) + ")");
  if (static_cast<double>(M) > std::log(T))
    throw Error(ErrorKind::invalid_spec,
                "M = " + std::to_string(M) + " exceeds log T = " + std::to_string(std::log(T)));
}

SumResult titchmarsh_sum(double T, const Parallel& par) {
  require_height(T, "titchmarsh_sum");
  SumResult r;
  r.spec = CorrelationSpec{T, std::nullopt, GramKind::full, 0, 1, 1};
  r.nu_range = gram_indices(GramKind::full, T, 2.0 * T);
  if (!r.nu_range.empty()) {
    const auto values = parallel_map<double>(r.nu_range.first, r.nu_range.last + 1, par,
                                             [](std::int64_t nu) {
                                               return z2(gram_point(GramKind::full, nu).t);
                                             });
    const std::int64_t base = r.nu_range.first;
    r.value = parallel_sum1(r.nu_range.first, r.nu_range.last, par, [&](std::int64_t nu) {
      const auto i = static_cast<std::size_t>(nu - base);
      return values[i] * values[i + 1];
    });
  }
  r.main_term = 3.0 / (4.0 * pow5(kPi)) * T * pow5(std::log(T));
  finish(r);
  return r;
}

SumResult autocorrelation_sum(const CorrelationSpec& spec, const Parallel& par) {
  spec.validate();
  if (spec.kind == GramKind::half_theta1)
    throw Error(ErrorKind::wrong_kind, "autocorrelation_sum supports the full and half sequences");
  SumResult r;
  r.spec = spec;
  r.nu_range = gram_indices(spec.kind, spec.T, spec.window_end());
  r.value = gram_sum(spec.kind, r.nu_range, par,
                     [&](const GramPoint& p) { return shifted_product(p, spec.k, spec.l); });
  const double scale = spec.kind == GramKind::half ? 2.0 : 1.0;
  r.main_term = scale * full_constant(spec.k, spec.l) * spec.window_length() * pow5(std::log(spec.T));
  finish(r);
  return r;
}

SumResult alternating_sum(const CorrelationSpec& spec, const Parallel& par) {
  spec.validate();
  if (spec.kind != GramKind::half)
    throw Error(ErrorKind::wrong_kind, "alternating_sum is defined on the half sequence only");
  SumResult r;
  r.spec = spec;
  r.nu_range = gram_indices(spec.kind, spec.T, spec.window_end());
  r.value = gram_sum(
      spec.kind, r.nu_range, par,
      [&](const GramPoint& p) { return shifted_product(p, spec.k, spec.l); }, true);
  r.main_term = (spec.M + 1.0) * spec.window_length() * pow4(std::log(spec.T));
  finish(r);
  return r;
}

SumResult second_moment_discrete(double T, std::optional<double> U, const Parallel& par) {
  require_height(T, "second_moment_discrete");
  const double len = U.value_or(std::sqrt(T) * std::log(T));
  if (!(len > 0.0)) throw Error(ErrorKind::invalid_spec, "U must be positive");
  SumResult r;
  r.spec = CorrelationSpec{T, len, GramKind::full, 0, 0, 0};
  r.nu_range = gram_indices(GramKind::full, T, T + len);
  r.value = gram_sum(GramKind::full, r.nu_range, par, [](const GramPoint& p) { return z2(p.t); });
  const double lt = std::log(T);
  r.main_term = len * lt * lt / kTwoPi;
  finish(r);
  return r;
}

SumResult euler_weighted_sum(double T, int N, std::span<const int> signs, const Parallel& par) {
  require_height(T, "euler_weighted_sum");
  if (N < 1) throw Error(ErrorKind::constraint, "euler_weighted_sum needs N >= 1");
  if (signs.size() != static_cast<std::size_t>(N))
    throw Error(ErrorKind::constraint, "euler_weighted_sum needs exactly N signs");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error(ErrorKind::constraint, "signs must be +1 or -1");
  const int m_max = static_cast<int>(std::floor(std::log(T)));
  if (N * N > m_max + 1)
    throw Error(ErrorKind::constraint, "N^2 = " + std::to_string(N * N) +
                                           " exceeds M + 1 = " + std::to_string(m_max + 1) +
                                           " with M <= log T");
  SumResult r;
  r.spec = CorrelationSpec{T, std::nullopt, GramKind::full, 0, 0, N * N - 1};
  r.nu_range = gram_indices(GramKind::full, T, 2.0 * T);
  const std::vector<int> sg(signs.begin(), signs.end());
  r.value = gram_sum(GramKind::full, r.nu_range, par, [&](const GramPoint& p) {
    const double rho = nyquist_spacing(p.t);
    double inner = 0.0;
    for (int n = 1; n <= N; ++n) inner += z2(p.t + sg[static_cast<std::size_t>(n - 1)] * n * rho);
    return z2(p.t) * inner;
  });
  r.main_term = 1.0 / (8.0 * kPi * kPi * kPi) * T * pow5(std::log(T));
  finish(r);
  return r;
}

SumResult hl_effect_biquadratic(double T, int M, const Parallel& par) {
  require_height(T, "hl_effect_biquadratic");
  const int base = static_cast<int>(std::ceil(std::log(T)));
  if (M < base || M > 3 * base)
    throw Error(ErrorKind::constraint, "M = " + std::to_string(M) + " outside [" +
                                           std::to_string(base) + ", " + std::to_string(3 * base) +
                                           "]");
  SumResult r;
  r.spec = CorrelationSpec{T, std::nullopt, GramKind::half_theta1, 0, 0, M};
  r.nu_range = gram_indices(GramKind::half_theta1, T, 2.0 * T);
  const double total = parallel_sum1(r.nu_range.first, r.nu_range.last, par, [&](std::int64_t nu) {
    const double t = gram_point(GramKind::full, nu).t;
    const double rho = nyquist_spacing(t);
    double avg = 0.0;
    for (int n = 1; n <= M; ++n) avg += z2(t + n * rho);
    avg /= M;
    return avg * avg;
  });
  r.value = r.nu_range.empty() ? 0.0 : total / static_cast<double>(r.nu_range.size());
  r.main_term = pow4(std::log(T)) / (kPi * M);
  finish(r);
  return r;
}

SDecomposition s_decomposition(std::int64_t nu, int k, int l, const DivisorTable& dtab,
                               double cap) {
  const DecompositionSetup s = prepare(nu, dtab, cap);
  const double tk = s.t + k * s.rho;
  const double tl = s.t + l * s.rho;
  ExactSum s1, s3, ak_re, ak_im, al_re, al_im;
  for (std::int64_t n = 1; n <= s.cutoff; ++n) {
    const double ln = std::log(static_cast<double>(n));
    const double d = dtab.d(n);
    const double a = d / std::sqrt(static_cast<double>(n));
    const double a2 = d * d / static_cast<double>(n);
    s1.add(a2 * std::cos((k - l) * s.rho * ln));
    s3.add(a2 * std::cos((2.0 * s.t + (k + l) * s.rho) * ln));
    ak_re.add(a * std::cos(tk * ln));
    ak_im.add(a * std::sin(tk * ln));
    al_re.add(a * std::cos(tl * ln));
    al_im.add(a * std::sin(tl * ln));
  }
  const std::complex<double> ak(ak_re.value(), ak_im.value());
  const std::complex<double> al(al_re.value(), al_im.value());
  SDecomposition out;
  out.nu = nu;
  out.s1 = 2.0 * s1.value();
  out.s3 = 2.0 * s3.value();
  out.s2 = 2.0 * (ak * std::conj(al)).real() - out.s1;
  out.s4 = 2.0 * (ak * al).real() - out.s3;
  out.product = product_at(s, k, l);
  return out;
}

SDecomposition s_decomposition_direct(std::int64_t nu, int k, int l, const DivisorTable& dtab,
                                      double cap) {
  const DecompositionSetup s = prepare(nu, dtab, cap);
  const auto n_max = static_cast<std::size_t>(s.cutoff);
  std::vector<double> a(n_max + 1), ln(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ln[n] = std::log(static_cast<double>(n));
    a[n] = dtab.d(static_cast<std::int64_t>(n)) / std::sqrt(static_cast<double>(n));
  }
  const double kr = k * s.rho;
  const double lr = l * s.rho;
  ExactSum s1, s2, s3, s4;
  for (std::size_t n = 1; n <= n_max; ++n) {
    s1.add(a[n] * a[n] * std::cos((k - l) * s.rho * ln[n]));
    s3.add(a[n] * a[n] * std::cos(2.0 * s.t * ln[n] + (k + l) * s.rho * ln[n]));
  }
  for (std::size_t m = 1; m <= n_max; ++m) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (m == n) continue;
      const double w = a[m] * a[n];
      s2.add(w * std::cos(s.t * (ln[m] - ln[n]) + kr * ln[m] - lr * ln[n]));
      s4.add(w * std::cos(s.t * (ln[m] + ln[n]) + kr * ln[m] + lr * ln[n]));
    }
  }
  SDecomposition out;
  out.nu = nu;
  out.s1 = 2.0 * s1.value();
  out.s2 = 2.0 * s2.value();
  out.s3 = 2.0 * s3.value();
  out.s4 = 2.0 * s4.value();
  out.product = product_at(s, k, l);
  return out;
}

DecompositionSample s_decomposition_sample(double T, int count, int k, int l,
                                           std::uint64_t seed, const Parallel& par,
                                           double cap) {
  require_height(T, "s_decomposition_sample");
  if (count < 1) throw Error(ErrorKind::constraint, "sample count must be positive");
  const double hi = std::min(2.0 * T, kTwoPi * cap);
  if (hi <= T)
    throw Error(ErrorKind::cost_guard, "s_decomposition_sample: T/2pi exceeds the cap " +
                                           std::to_string(cap));
  const IndexInterval idx = gram_indices(GramKind::half, T, hi);
  if (idx.size() < count)
    throw Error(ErrorKind::constraint, "window holds fewer points than the requested sample");

  // Floyd's algorithm keyed by the seed; indices are processed in ascending order.
  std::set<std::int64_t> chosen;
  const std::int64_t n = idx.size();
  std::uint64_t counter = 0;
  for (std::int64_t j = n - count; j < n; ++j) {
    const auto pick = static_cast<std::int64_t>(detail::keyed(seed, counter++) %
                                                static_cast<std::uint64_t>(j + 1));
    if (!chosen.insert(pick).second) chosen.insert(j);
  }
  std::vector<std::int64_t> nus;
  for (std::int64_t off : chosen) nus.push_back(idx.first + off);

  const auto cutoff = static_cast<std::int64_t>(std::floor(hi / kTwoPi));
  const DivisorTable dtab = DivisorTable::sieve(1, std::max<std::int64_t>(cutoff, 1));

  DecompositionSample out;
  out.rows = parallel_map<SDecomposition>(
      0, static_cast<std::int64_t>(nus.size()) - 1, par, [&](std::int64_t i) {
        return s_decomposition(nus[static_cast<std::size_t>(i)], k, l, dtab, cap);
      });
  ExactSum m1, m2, m3, m4, mp;
  for (const auto& r : out.rows) {
    m1.add(r.s1);
    m2.add(r.s2);
    m3.add(r.s3);
    m4.add(r.s4);
    mp.add(r.product);
  }
  const double c = static_cast<double>(out.rows.size());
  out.mean_s1 = m1.value() / c;
  out.mean_s2 = m2.value() / c;
  out.mean_s3 = m3.value() / c;
  out.mean_s4 = m4.value() / c;
  out.mean_product = mp.value() / c;
  const double l4 = pow4(std::log(T));
  if (k == l) {
    out.s1_main_term = l4 / (2.0 * kPi * kPi);
  } else {
    const double d = static_cast<double>(k - l);
    out.s1_main_term = 3.0 * l4 / (2.0 * pow4(kPi) * d * d);
  }
  return out;
}

}  // namespace zetalab
