#pragma once

#include <cstdint>
#include <optional>
#include <ranges>
#include <string_view>

namespace zetalab {

// The three Gram-type sequences:
//   full         t_nu     theta(t)  = pi nu
//   half         t~_nu    theta(t)  = pi nu / 2
//   half_theta1  g_nu     theta1(t) = pi nu / 2
enum class GramKind { full, half, half_theta1 };

const char* to_string(GramKind kind) noexcept;
std::optional<GramKind> parse_gram_kind(std::string_view name) noexcept;

struct GramPoint {
  GramKind kind;
  std::int64_t nu;
  double t;
};

struct Spacing {
  std::int64_t nu;
  double rho;
};

// Inclusive index range; empty when last < first.
struct IndexInterval {
  std::int64_t first = 1;
  std::int64_t last = 0;

  bool empty() const noexcept { return last < first; }
  std::int64_t size() const noexcept { return empty() ? 0 : last - first + 1; }
};

// Smallest admissible index for every kind; all solved abscissae are >= 10.
inline constexpr std::int64_t kNuMin = 1;

double gram_target(GramKind kind, std::int64_t nu);
// theta(t) for full/half, theta1(t) for half_theta1.
double gram_phase(GramKind kind, double t);
double gram_residual(const GramPoint& p);

// Solves for the nu-th member. Deterministic: repeated calls agree bit for bit.
GramPoint gram_point(GramKind kind, std::int64_t nu);

// Indices of the points with lo <= t <= hi. Throws ErrorKind::domain for
// lo < 10 or hi < lo.
IndexInterval gram_indices(GramKind kind, double lo, double hi);

// Ascending lazy sequence of the points with lo <= t <= hi.
inline auto gram_range(GramKind kind, double lo, double hi) {
  const IndexInterval idx = gram_indices(kind, lo, hi);
  return std::views::iota(idx.first, idx.empty() ? idx.first : idx.last + 1) |
         std::views::transform([kind](std::int64_t nu) { return gram_point(kind, nu); });
}

// 2 pi / log(t / 2 pi), the local Gram spacing at height t.
double nyquist_spacing(double t);

// rho_1(nu) for full, rho_2(nu) for half; the same formula for half_theta1.
Spacing rho(GramKind kind, std::int64_t nu);

// t~_nu - g_nu; requires g_nu >= 1000.
double g_vs_ttilde_gap(std::int64_t nu);

}  // namespace zetalab
