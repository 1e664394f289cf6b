#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

namespace zetalab {

// Monolithic tables are limited to this many entries; larger ranges must be
// streamed block by block with for_each_divisor_block.
inline constexpr std::int64_t kMaxTableEntries = 100'000'000;
inline constexpr std::int64_t kMaxSieveHi = 1'000'000'000;

struct SieveOptions {
  // Memory budget for one block in blocked mode.
  std::size_t memory_budget_bytes = std::size_t{256} << 20;
};

// d(n) for lo <= n <= hi. Immutable once built.
class DivisorTable {
 public:
  static DivisorTable sieve(std::int64_t lo, std::int64_t hi);

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  bool covers(std::int64_t n) const noexcept { return n >= lo_ && n <= hi_; }
  std::uint32_t d(std::int64_t n) const { return d_[static_cast<std::size_t>(n - lo_)]; }
  std::uint32_t at(std::int64_t n) const;  // bounds-checked
  std::span<const std::uint16_t> values() const noexcept { return d_; }

  // Binary format (little endian): "ZDIV", u32 version = 1, i64 lo, i64 hi,
  // u32 entry width in bytes (2), then hi - lo + 1 entries.
  void save(const std::filesystem::path& path) const;
  static DivisorTable load(const std::filesystem::path& path);

 private:
  friend void for_each_divisor_block(std::int64_t, std::int64_t, const SieveOptions&,
                                     const std::function<void(const DivisorTable&)>&);
  DivisorTable(std::int64_t lo, std::int64_t hi, std::vector<std::uint16_t> d)
      : lo_(lo), hi_(hi), d_(std::move(d)) {}

  std::int64_t lo_ = 1;
  std::int64_t hi_ = 0;
  std::vector<std::uint16_t> d_;
};

// Blocked sieve: calls fn once per consecutive block covering [lo, hi], in
// ascending order. Each block fits the memory budget.
void for_each_divisor_block(std::int64_t lo, std::int64_t hi, const SieveOptions& opts,
                            const std::function<void(const DivisorTable&)>& fn);

// D(x) = sum_{n<=x} d(n)^2 and H(x) = sum_{n<=x} d(n)^2 / n.
struct CumulativeDivisorSums {
  double x = 0.0;
  std::uint64_t D = 0;
  double H = 0.0;
};

CumulativeDivisorSums cumulative_sums(double x, const DivisorTable& dtab);
CumulativeDivisorSums cumulative_sums_blocked(double x, const SieveOptions& opts = {});

struct RamanujanReport {
  std::vector<double> x;
  std::vector<std::uint64_t> D;
  std::vector<double> main_term;   // x log^3 x / pi^2
  std::vector<double> raw_ratio;   // D / main_term
  // Leading coefficient of D(x)/x as a cubic in log x, with the lower-order
  // coefficients fitted away across the ladder. Tends to 1/pi^2.
  double leading_coefficient = 0.0;
};

// `ladder` must hold at least three ascending cutoffs, each >= 1000. With
// three points the fit is A y^3 + B y^2 + C y (y = log x); with four or more
// a full cubic is fitted by least squares.
RamanujanReport ramanujan_main_term_check(std::span<const double> ladder,
                                          const SieveOptions& opts = {});

// sum_{n <= x} d(n)^2 / n cos(alpha log n).
double s11(double x, double alpha, const DivisorTable& dtab);

// int_0^{log x} w^3 cos(alpha w) dw in closed form; the alpha -> 0 limit is
// log^4 x / 4.
double f_closed_form(double x, double alpha);

// sum_{m, n <= x} d(m) d(n) / sqrt(mn) = (sum_{n <= x} d(n) / sqrt(n))^2.
double bilinear_sum(double x, const DivisorTable& dtab);

}  // namespace zetalab
