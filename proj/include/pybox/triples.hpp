#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "pybox/intmath.hpp"

namespace pybox {

/// A Pythagorean triple: a^2 + b^2 = c^2. Factories that produce primitive
/// triples store the even leg in `a` and the odd leg in `b`; classification
/// accepts the legs in either order.
struct Triple {
  u64 a = 0;
  u64 b = 0;
  u64 c = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Generator pair for a primitive triple: (2mn, m^2 - n^2, m^2 + n^2).
/// Requires m > n >= 1, gcd(m, n) = 1 and m + n odd.
struct TripleParams {
  u64 m = 0;
  u64 n = 0;

  TripleParams(u64 m_, u64 n_) : m(m_), n(n_) {
    if (n == 0 || m <= n) fail_domain("triple params require m > n >= 1");
    if (!opposite_parity(m, n)) fail_domain("triple params require m + n odd");
    if (!coprime(m, n)) fail_domain("triple params require gcd(m, n) = 1");
  }

  friend bool operator==(const TripleParams&, const TripleParams&) = default;
};

enum class TripleKind { NotPythagorean, Primitive, NonPrimitive };

struct TripleClass {
  TripleKind kind = TripleKind::NotPythagorean;
  u64 common = 1;  // gcd of the legs; > 1 exactly when NonPrimitive

  friend bool operator==(const TripleClass&, const TripleClass&) = default;
};

inline Triple make_primitive_triple(const TripleParams& p) {
  const u64 m2 = checked_square(p.m);
  const u64 n2 = checked_square(p.n);
  return Triple{checked_mul(2, checked_mul(p.m, p.n)), m2 - n2, checked_add(m2, n2)};
}

inline TripleClass classify_triple(u64 a, u64 b, u64 c) {
  if (a == 0 || b == 0 || c == 0) fail_domain("triple components must be positive");
  if (u128{a} * a + u128{b} * b != u128{c} * c) {
    return TripleClass{TripleKind::NotPythagorean, 1};
  }
  const u64 g = gcd(a, b);
  if (g == 1) return TripleClass{TripleKind::Primitive, 1};
  return TripleClass{TripleKind::NonPrimitive, g};
}

/// Inverts make_primitive_triple: recovers the unique (m, n) with
/// even leg = 2mn, odd leg = m^2 - n^2, hypotenuse = m^2 + n^2.
inline TripleParams decompose_primitive_triple(const Triple& t) {
  const TripleClass cls = classify_triple(t.a, t.b, t.c);
  if (cls.kind != TripleKind::Primitive) {
    fail_domain("decompose_primitive_triple requires a primitive Pythagorean triple");
  }
  // A primitive triple has exactly one even leg.
  const u64 even = is_even(t.a) ? t.a : t.b;
  const u64 odd = is_even(t.a) ? t.b : t.a;
  // c + odd = 2m^2 and c - odd = 2n^2.
  const auto m = perfect_square_root((t.c + odd) / 2);
  const auto n = perfect_square_root((t.c - odd) / 2);
  if (!m || !n || checked_mul(2, checked_mul(*m, *n)) != even) {
    fail_domain("triple is not in primitive form");
  }
  return TripleParams(*m, *n);
}

/// All primitive triples with hypotenuse <= max_c, with their generator
/// pairs, sorted by (hypotenuse, even leg). The grid is cut at
/// m <= isqrt(max_c) since m^2 + n^2 <= max_c forces it.
inline std::vector<std::pair<TripleParams, Triple>> enumerate_primitive_triples(u64 max_c) {
  if (max_c == 0) fail_domain("enumerate_primitive_triples requires max_c >= 1");
  std::vector<std::pair<TripleParams, Triple>> out;
  for (u64 m = 2; m * m < max_c; ++m) {
    for (u64 n = 1 + (m & 1); n < m; n += 2) {
      if (m * m + n * n > max_c) break;
      if (!coprime(m, n)) continue;
      TripleParams p(m, n);
      out.emplace_back(p, make_primitive_triple(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
    return std::tie(lhs.second.c, lhs.second.a) < std::tie(rhs.second.c, rhs.second.a);
  });
  return out;
}

/// Generator input for x^2 + 2 y^2 = z^2 solutions:
/// (scale * |t1^2 - 2 t2^2|, scale * 2 t1 t2, scale * (t1^2 + 2 t2^2)).
struct TwoSquareParams {
  u64 t1 = 0;
  u64 t2 = 0;
  u64 scale = 1;

  TwoSquareParams(u64 t1_, u64 t2_, u64 scale_) : t1(t1_), t2(t2_), scale(scale_) {
    if (t1 == 0 || t2 == 0 || scale == 0) {
      fail_domain("two-square params must be positive");
    }
  }
};

struct TwoSquareSolution {
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;

  friend bool operator==(const TwoSquareSolution&, const TwoSquareSolution&) = default;
};

inline TwoSquareSolution make_x2_plus_2y2_solution(const TwoSquareParams& p) {
  const u64 a = checked_square(p.t1);
  const u64 b = checked_mul(2, checked_square(p.t2));
  // a = b would need sqrt(2) rational, so x is never zero.
  const u64 diff = a > b ? a - b : b - a;
  if (diff == 0) fail_domain("t1^2 = 2 t2^2 is impossible for positive integers");
  return TwoSquareSolution{checked_mul(p.scale, diff),
                           checked_mul(p.scale, checked_mul(2, checked_mul(p.t1, p.t2))),
                           checked_mul(p.scale, checked_add(a, b))};
}

}  // namespace pybox
