#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace pybox {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest edge length the box and search constructors accept. Keeps
// x^2 + y^2 + z^2 and every other squared quantity built from edges
// inside u64, so no arithmetic in the library can wrap.
inline constexpr u64 kMaxEdge = 2147483647;  // 2^31 - 1; 3 * kMaxEdge^2 < 2^64

[[noreturn]] inline void fail_domain(const std::string& what) {
  throw std::domain_error(what);
}

inline u64 checked_mul(u64 a, u64 b) {
  const u128 p = u128{a} * b;
  if (p > std::numeric_limits<u64>::max()) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return static_cast<u64>(p);
}

inline u64 checked_add(u64 a, u64 b) {
  if (a > std::numeric_limits<u64>::max() - b) {
    throw std::overflow_error("integer overflow in addition");
  }
  return a + b;
}

inline u64 checked_square(u64 a) { return checked_mul(a, a); }

inline bool is_even(u64 a) { return (a & 1) == 0; }
inline bool is_odd(u64 a) { return (a & 1) == 1; }
inline bool opposite_parity(u64 a, u64 b) { return ((a ^ b) & 1) == 1; }

inline u64 gcd(u64 a, u64 b) {
  if (a == 0 && b == 0) fail_domain("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

inline bool coprime(u64 a, u64 b) { return gcd(a, b) == 1; }

// Floor of the real square root. The double seed can be off by a few ulp
// near 2^64; the correction loops settle it exactly.
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  if (r > 0xFFFFFFFFu) r = 0xFFFFFFFFu;
  while (r * r > n) --r;
  while (r < 0xFFFFFFFFu && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace detail {

template <std::size_t Mod>
constexpr std::array<bool, Mod> square_residues() {
  std::array<bool, Mod> table{};
  for (std::size_t i = 0; i < Mod; ++i) table[(i * i) % Mod] = true;
  return table;
}

inline constexpr auto kSquaresMod64 = square_residues<64>();
inline constexpr auto kSquaresMod63 = square_residues<63>();
inline constexpr auto kSquaresMod65 = square_residues<65>();

}  // namespace detail

// Cheap non-square rejection used ahead of isqrt in the hot scans. It may
// never reject a square; the test suite pins equivalence with the plain
// isqrt route.
inline bool square_candidate(u64 n) {
  return detail::kSquaresMod64[n & 63] && detail::kSquaresMod63[n % 63] &&
         detail::kSquaresMod65[n % 65];
}

// Witness root when n is a perfect square, nullopt otherwise.
inline std::optional<u64> perfect_square_root(u64 n) {
  if (!square_candidate(n)) return std::nullopt;
  const u64 r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

inline bool is_perfect_square(u64 n) { return perfect_square_root(n).has_value(); }

}  // namespace pybox
