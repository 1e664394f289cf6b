#include "zetalab/divisor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {
namespace {

std::vector<std::uint32_t> primes_up_to(std::int64_t n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::int64_t m = p * p; m <= n; m += p) composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Factor every n in [lo, hi] over the primes up to sqrt(hi); whatever
// cofactor remains is a single prime.
std::vector<std::uint16_t> sieve_block(std::int64_t lo, std::int64_t hi,
                                       std::span<const std::uint32_t> primes) {
  const auto len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::uint16_t> d(len, 1);
  std::vector<std::uint32_t> rem(len);
  for (std::size_t i = 0; i < len; ++i) rem[i] = static_cast<std::uint32_t>(lo + static_cast<std::int64_t>(i));
  for (const std::uint32_t p : primes) {
    const std::int64_t pp = p;
    if (pp * pp > hi) break;
    for (std::int64_t m = ((lo + pp - 1) / pp) * pp; m <= hi; m += pp) {
      const auto i = static_cast<std::size_t>(m - lo);
      std::uint32_t e = 0;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        ++e;
      }
      d[i] = static_cast<std::uint16_t>(d[i] * (e + 1));
    }
  }
  for (std::size_t i = 0; i < len; ++i)
    if (rem[i] > 1) d[i] = static_cast<std::uint16_t>(d[i] * 2);
  return d;
}

void check_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo || hi > kMaxSieveHi)
    throw Error(ErrorKind::domain, "sieve range must satisfy 1 <= lo <= hi <= 1e9, got [" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void require_prefix(const DivisorTable& dtab, std::int64_t n) {
  if (n >= 1 && (dtab.lo() != 1 || dtab.hi() < n))
    throw Error(ErrorKind::table_too_small,
                "divisor table [" + std::to_string(dtab.lo()) + ", " + std::to_string(dtab.hi()) +
                    "] does not cover [1, " + std::to_string(n) + "]");
}

std::int64_t floor_cutoff(double x) {
  return x < 1.0 ? 0 : static_cast<std::int64_t>(std::floor(x));
}

// Solves the least-squares problem min |V c - f| through the normal
// equations; exact when V is square.
std::vector<double> least_squares(const std::vector<std::vector<double>>& v,
                                  const std::vector<double>& f) {
  const std::size_t m = v.size();
  const std::size_t n = v.front().size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r) a[i][j] += v[r][i] * v[r][j];
    for (std::size_t r = 0; r < m; ++r) a[i][n] += v[r][i] * f[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i][n] / a[i][i];
  return c;
}

constexpr std::array<char, 4> kMagic{'Z', 'D', 'I', 'V'};
constexpr std::uint32_t kFormatVersion = 1;

template <class T>
void write_le(std::ofstream& out, T value) {
  static_assert(std::endian::native == std::endian::little, "big-endian hosts unsupported");
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T read_le(std::ifstream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  return value;
}

}  // namespace

DivisorTable DivisorTable::sieve(std::int64_t lo, std::int64_t hi) {
  check_range(lo, hi);
  if (hi - lo + 1 > kMaxTableEntries)
    throw Error(ErrorKind::capacity,
                "range of " + std::to_string(hi - lo + 1) +
                    " entries exceeds the monolithic limit of 1e8; use for_each_divisor_block");
  const auto primes = primes_up_to(isqrt(hi));
  return DivisorTable(lo, hi, sieve_block(lo, hi, primes));
}

std::uint32_t DivisorTable::at(std::int64_t n) const {
  if (!covers(n))
    throw Error(ErrorKind::table_too_small,
                "n = " + std::to_string(n) + " outside divisor table [" + std::to_string(lo_) +
                    ", " + std::to_string(hi_) + "]");
  return d(n);
}

void DivisorTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open " + path.string() + " for writing");
  out.write(kMagic.data(), kMagic.size());
  write_le<std::uint32_t>(out, kFormatVersion);
  write_le<std::int64_t>(out, lo_);
  write_le<std::int64_t>(out, hi_);
  write_le<std::uint32_t>(out, sizeof(std::uint16_t));
  out.write(reinterpret_cast<const char*>(d_.data()),
            static_cast<std::streamsize>(d_.size() * sizeof(std::uint16_t)));
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

DivisorTable DivisorTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error(ErrorKind::io, path.string() + ": not a divisor table");
  const auto version = read_le<std::uint32_t>(in);
  const auto lo = read_le<std::int64_t>(in);
  const auto hi = read_le<std::int64_t>(in);
  const auto width = read_le<std::uint32_t>(in);
  if (!in || version != kFormatVersion || width != sizeof(std::uint16_t))
    throw Error(ErrorKind::io, path.string() + ": unsupported version or entry width");
  if (lo < 1 || hi < lo || hi - lo + 1 > kMaxTableEntries)
    throw Error(ErrorKind::io, path.string() + ": corrupt range header");
  std::vector<std::uint16_t> d(static_cast<std::size_t>(hi - lo + 1));
  in.read(reinterpret_cast<char*>(d.data()),
          static_cast<std::streamsize>(d.size() * sizeof(std::uint16_t)));
  if (!in) throw Error(ErrorKind::io, path.string() + ": truncated table");
  return DivisorTable(lo, hi, std::move(d));
}

void for_each_divisor_block(std::int64_t lo, std::int64_t hi, const SieveOptions& opts,
                            const std::function<void(const DivisorTable&)>& fn) {
  check_range(lo, hi);
  constexpr std::size_t kBytesPerEntry = sizeof(std::uint16_t) + sizeof(std::uint32_t);
  const auto block = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(opts.memory_budget_bytes / kBytesPerEntry), 1, kMaxTableEntries);
  const auto primes = primes_up_to(isqrt(hi));
  for (std::int64_t start = lo; start <= hi; start += block) {
    const std::int64_t end = std::min(hi, start + block - 1);
    fn(DivisorTable(start, end, sieve_block(start, end, primes)));
  }
}

CumulativeDivisorSums cumulative_sums(double x, const DivisorTable& dtab) {
  const std::int64_t cutoff = floor_cutoff(x);
  require_prefix(dtab, cutoff);
  CumulativeDivisorSums out{x, 0, 0.0};
  ExactSum h;
  for (std::int64_t n = 1; n <= cutoff; ++n) {
    const std::uint64_t d2 = std::uint64_t{dtab.d(n)} * dtab.d(n);
    out.D += d2;
    h.add(static_cast<double>(d2) / static_cast<double>(n));
  }
  out.H = h.value();
  return out;
}

CumulativeDivisorSums cumulative_sums_blocked(double x, const SieveOptions& opts) {
  const std::int64_t cutoff = floor_cutoff(x);
  CumulativeDivisorSums out{x, 0, 0.0};
  if (cutoff < 1) return out;
  ExactSum h;
  for_each_divisor_block(1, cutoff, opts, [&](const DivisorTable& block) {
    for (std::int64_t n = block.lo(); n <= block.hi(); ++n) {
      const std::uint64_t d2 = std::uint64_t{block.d(n)} * block.d(n);
      out.D += d2;
      h.add(static_cast<double>(d2) / static_cast<double>(n));
    }
  });
  out.H = h.value();
  return out;
}

RamanujanReport ramanujan_main_term_check(std::span<const double> ladder,
                                          const SieveOptions& opts) {
  if (ladder.size() < 3) throw Error(ErrorKind::domain, "ramanujan ladder needs >= 3 points");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] >= 1000.0)) throw Error(ErrorKind::domain, "ramanujan ladder needs x >= 1e3");
    if (i > 0 && !(ladder[i] > ladder[i - 1]))
      throw Error(ErrorKind::domain, "ramanujan ladder must be ascending");
  }

  RamanujanReport rep;
  // One streamed pass over [1, max x], recording D at each cutoff.
  std::vector<std::int64_t> cutoffs;
  for (double x : ladder) cutoffs.push_back(floor_cutoff(x));
  std::size_t next = 0;
  std::uint64_t running = 0;
  for_each_divisor_block(1, cutoffs.back(), opts, [&](const DivisorTable& block) {
    for (std::int64_t n = block.lo(); n <= block.hi(); ++n) {
      running += std::uint64_t{block.d(n)} * block.d(n);
      while (next < cutoffs.size() && cutoffs[next] == n) {
        rep.D.push_back(running);
        ++next;
      }
    }
  });

  constexpr double inv_pi2 = 1.0 / (std::numbers::pi * std::numbers::pi);
  std::vector<std::vector<double>> design;
  std::vector<double> rhs;
  const bool full_cubic = ladder.size() >= 4;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    const double x = ladder[i];
    const double y = std::log(x);
    rep.x.push_back(x);
    rep.main_term.push_back(inv_pi2 * x * y * y * y);
    rep.raw_ratio.push_back(static_cast<double>(rep.D[i]) / rep.main_term.back());
    std::vector<double> row{y * y * y, y * y, y};
    if (full_cubic) row.push_back(1.0);
    design.push_back(std::move(row));
    rhs.push_back(static_cast<double>(rep.D[i]) / x);
  }
  rep.leading_coefficient = least_squares(design, rhs)[0];
  return rep;
}

double s11(double x, double alpha, const DivisorTable& dtab) {
  const std::int64_t cutoff = floor_cutoff(x);
  require_prefix(dtab, cutoff);
  ExactSum acc;
  for (std::int64_t n = 1; n <= cutoff; ++n) {
    const double d = dtab.d(n);
    acc.add(d * d / static_cast<double>(n) * std::cos(alpha * std::log(static_cast<double>(n))));
  }
  return acc.value();
}

double f_closed_form(double x, double alpha) {
  if (!(x > 1.0)) throw Error(ErrorKind::domain, "f_closed_form: x must exceed 1");
  const double L = std::log(x);
  const double u = alpha * L;
  if (std::fabs(u) < 1.0) {
    // L^4 sum_k (-1)^k u^{2k} / ((2k)! (2k + 4))
    double term = 1.0;  // (-1)^k u^{2k} / (2k)!
    double acc = 0.0;
    for (int k = 0; k < 16; ++k) {
      acc += term / (2.0 * k + 4.0);
      term *= -u * u / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    }
    const double L2 = L * L;
    return L2 * L2 * acc;
  }
  const double a2 = alpha * alpha;
  const double a4 = a2 * a2;
  return (L * L * L / alpha - 6.0 * L / (a2 * alpha)) * std::sin(u) +
         (3.0 * L * L / a2 - 6.0 / a4) * std::cos(u) + 6.0 / a4;
}

double bilinear_sum(double x, const DivisorTable& dtab) {
  const std::int64_t cutoff = floor_cutoff(x);
  require_prefix(dtab, cutoff);
  ExactSum acc;
  for (std::int64_t n = 1; n <= cutoff; ++n)
    acc.add(dtab.d(n) / std::sqrt(static_cast<double>(n)));
  const double s = acc.value();
  return s * s;
}

}  // namespace zetalab
