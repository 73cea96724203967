#pragma once

#include <algorithm>
#include <vector>

#include "pybox/intmath.hpp"

namespace pybox {

/// A solution of x^2 + y^2 + z^2 = t^2 in positive integers.
struct Quadruple {
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;
  u64 t = 0;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

/// Parameters of the general solution
///   x = 2l, y = 2m, z = (l^2 + m^2 - n^2) / n, t = (l^2 + m^2 + n^2) / n,
/// with n a divisor of l^2 + m^2 and n^2 < l^2 + m^2 so that z stays positive.
struct Eq5Params {
  u64 l = 0;
  u64 m = 0;
  u64 n = 0;

  Eq5Params(u64 l_, u64 m_, u64 n_) : l(l_), m(m_), n(n_) {
    if (l == 0 || m == 0 || n == 0) fail_domain("parameters must be positive");
    const u64 s = checked_add(checked_square(l), checked_square(m));
    if (s % n != 0) fail_domain("n must divide l^2 + m^2");
    if (n * n >= s) fail_domain("n^2 must stay below l^2 + m^2 (z would not be positive)");
  }
};

inline Quadruple quadruple_from_params(const Eq5Params& p) {
  const u64 s = checked_square(p.l) + checked_square(p.m);
  // n | s and n^2 < s make z = (s - n^2)/n a positive integer.
  return Quadruple{2 * p.l, 2 * p.m, (s - p.n * p.n) / p.n, (s + p.n * p.n) / p.n};
}

inline bool satisfies_sum_of_squares(const Quadruple& q) {
  return u128{q.x} * q.x + u128{q.y} * q.y + u128{q.z} * q.z == u128{q.t} * q.t;
}

// Cubic-scan ceiling; the brute-force oracle refuses anything larger.
inline constexpr u64 kBruteForceMaxT = 300;

/// Every (x, y, z, t) with x <= y <= z, all positive, t <= max_t and
/// x^2 + y^2 + z^2 = t^2, found by direct scan. Sorted by (t, x, y, z).
inline std::vector<Quadruple> brute_force_quadruples(u64 max_t) {
  if (max_t == 0) fail_domain("brute_force_quadruples requires max_t >= 1");
  if (max_t > kBruteForceMaxT) {
    fail_domain("brute_force_quadruples refuses max_t > 300; the cubic scan is an oracle, not a search");
  }
  std::vector<Quadruple> out;
  const u64 limit = max_t * max_t;
  for (u64 x = 1; 3 * x * x <= limit; ++x) {
    for (u64 y = x; x * x + 2 * y * y <= limit; ++y) {
      const u64 xy = x * x + y * y;
      for (u64 z = y; xy + z * z <= limit; ++z) {
        if (const auto t = perfect_square_root(xy + z * z)) {
          out.push_back(Quadruple{x, y, z, *t});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Quadruple& a, const Quadruple& b) {
    return std::tie(a.t, a.x, a.y, a.z) < std::tie(b.t, b.x, b.y, b.z);
  });
  return out;
}

/// All distinct quadruples with t <= max_t reachable from Eq5Params,
/// canonicalized to x <= y (both even by construction), deduplicated and
/// sorted by (t, x, y, z).
inline std::vector<Quadruple> enumerate_quadruples(u64 max_t) {
  if (max_t == 0) fail_domain("enumerate_quadruples requires max_t >= 1");
  if (max_t > kMaxEdge) fail_domain("enumerate_quadruples bound exceeds the overflow-safe limit");
  std::vector<Quadruple> out;
  const u128 limit = u128{max_t} * max_t;
  for (u64 l = 1; u128{8} * l * l <= limit; ++l) {
    for (u64 m = l; u128{4} * (l * l + m * m) <= limit; ++m) {
      const u64 s = l * l + m * m;
      // t = s/n + n >= 2 sqrt(s), so only n with n^2 < s can contribute.
      for (u64 n = 1; n * n < s; ++n) {
        if (s % n != 0) continue;
        const u64 t = s / n + n;
        if (t > max_t) continue;
        out.push_back(Quadruple{2 * l, 2 * m, s / n - n, t});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Quadruple& a, const Quadruple& b) {
    return std::tie(a.t, a.x, a.y, a.z) < std::tie(b.t, b.x, b.y, b.z);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pybox
