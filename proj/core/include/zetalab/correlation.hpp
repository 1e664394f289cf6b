#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zetalab/divisor.hpp"
#include "zetalab/gram.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

// Parameters of a shifted correlation sum over the Gram points of `kind`
// lying in [T, T + U] (U defaults to T, the dyadic window [T, 2T]).
// The shift bound M stands in for a slowly growing function of T and must
// satisfy |k|, |l| <= M <= log T.
struct CorrelationSpec {
  double T = 1000.0;
  std::optional<double> U;
  GramKind kind = GramKind::full;
  int k = 0;
  int l = 1;
  int M = 1;

  double window_length() const { return U.value_or(T); }
  double window_end() const { return T + window_length(); }
  void validate() const;
};

struct SumResult {
  CorrelationSpec spec;
  IndexInterval nu_range;
  double value = 0.0;
  double main_term = 0.0;
  double ratio = 0.0;  // value / main_term, 0 when main_term is 0
  std::int64_t point_count = 0;
};

// Sum of term(point) over the points of `kind` with indices in `idx`,
// optionally weighted by (-1)^nu. The reduction is exact, so the result does
// not depend on par.
template <class Term>
double gram_sum(GramKind kind, IndexInterval idx, const Parallel& par, Term&& term,
                bool alternating = false) {
  if (idx.empty()) return 0.0;
  return parallel_sum1(idx.first, idx.last, par, [&](std::int64_t nu) {
    const double v = term(gram_point(kind, nu));
    return (alternating && (nu % 2 != 0)) ? -v : v;
  });
}

// sum_{T <= t_nu <= 2T} Z^2(t_nu) Z^2(t_{nu+1}); main term 3/(4 pi^5) T log^5 T.
SumResult titchmarsh_sum(double T, const Parallel& par = {});

// sum Z^2(t + k rho) Z^2(t + l rho) over the points of spec.kind (full or
// half), rho the local spacing 2 pi / log(t / 2 pi).
//   full: 3/(4 pi^5 (k-l)^2) U log^5 T for k != l, 1/(4 pi^3) U log^5 T for k = l
//   half: twice the full constants.
SumResult autocorrelation_sum(const CorrelationSpec& spec, const Parallel& par = {});

// The same sum over the half sequence weighted by (-1)^nu. main_term holds
// the envelope (M + 1) U log^4 T.
SumResult alternating_sum(const CorrelationSpec& spec, const Parallel& par = {});

// sum_{T <= t_nu <= T + U} Z^2(t_nu); main term U log^2 T / (2 pi).
// U defaults to sqrt(T) log T.
SumResult second_moment_discrete(double T, std::optional<double> U = std::nullopt,
                                 const Parallel& par = {});

// sum_{T <= t_nu <= 2T} Z^2(t_nu) sum_{n=1}^N Z^2(t_nu + s_n n rho_1(nu)),
// s_n = signs[n-1] in {-1, +1}; requires N^2 <= floor(log T) + 1. main term
// 1/(8 pi^3) T log^5 T.
SumResult euler_weighted_sum(double T, int N, std::span<const int> signs,
                             const Parallel& par = {});

// (1/N_2) sum_{T <= g_nu <= 2T} {(1/M) sum_{n=1}^M Z^2(t_nu + n rho_1(nu))}^2,
// where t_nu is the full-sequence point of the same index nu and N_2 counts
// the g_nu. Requires ceil(log T) <= M <= 3 ceil(log T). main_term is
// log^4 T / (pi M).
SumResult hl_effect_biquadratic(double T, int M, const Parallel& par = {});

// Pieces of Z^2{t~ + k rho_2} Z^2{t~ + l rho_2} from the Hardy-Littlewood
// main sums at t~ = t~_nu, summing over n, m <= t~/2pi:
//   s1  diagonal, cos((k-l) rho_2 log n)
//   s2  off-diagonal m != n, cos(t~ log(m/n) + k rho_2 log m - l rho_2 log n)
//   s3  diagonal, cos(2 t~ log n + (k+l) rho_2 log n)
//   s4  off-diagonal m != n, cos(t~ log(mn) + k rho_2 log m + l rho_2 log n)
// `product` is the Riemann-Siegel value of the left-hand side.
struct SDecomposition {
  std::int64_t nu = 0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double s4 = 0.0;
  double product = 0.0;
};

inline constexpr double kDefaultDecompositionCap = 2.0e4;

// O(t~/2pi): the off-diagonal sums come from the factorizations
// s1 + s2 = 2 Re(A_k conj A_l) and s3 + s4 = 2 Re(A_k A_l), with
// A_j = sum d(n)/sqrt(n) exp(i (t~ + j rho_2) log n).
SDecomposition s_decomposition(std::int64_t nu, int k, int l, const DivisorTable& dtab,
                               double cap = kDefaultDecompositionCap);

// The four sums evaluated term by term, O((t~/2pi)^2).
SDecomposition s_decomposition_direct(std::int64_t nu, int k, int l, const DivisorTable& dtab,
                                      double cap = kDefaultDecompositionCap);

struct DecompositionSample {
  std::vector<SDecomposition> rows;
  double mean_s1 = 0.0;
  double mean_s2 = 0.0;
  double mean_s3 = 0.0;
  double mean_s4 = 0.0;
  double mean_product = 0.0;
  // Per-point scale of the diagonal: 3 log^4 T / (2 pi^4 (k-l)^2), or
  // log^4 T / (2 pi^2) for k = l.
  double s1_main_term = 0.0;
};

// `count` indices drawn without replacement (seeded) from the half-sequence
// points in [T, min(2T, 2 pi cap)].
DecompositionSample s_decomposition_sample(double T, int count, int k, int l,
                                           std::uint64_t seed, const Parallel& par = {},
                                           double cap = kDefaultDecompositionCap);

}  // namespace zetalab
