#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "pybox/intmath.hpp"
#include "pybox/parallel.hpp"
#include "pybox/quadruples.hpp"
#include "pybox/report.hpp"
#include "pybox/triples.hpp"

namespace pybox {

/// A box with integer edges x, y, z and the squared lengths of its four
/// diagonals. Irrational face diagonals stay exactly representable through
/// their squares (the t = 13 box has s^2 = 160, u^2 = 153).
struct BoxCandidate {
  u64 x = 0, y = 0, z = 0;
  u64 s2 = 0;  // x^2 + y^2, XY face diagonal squared
  u64 u2 = 0;  // y^2 + z^2, YZ face diagonal squared
  u64 w2 = 0;  // x^2 + z^2, XZ face diagonal squared
  u64 t2 = 0;  // x^2 + y^2 + z^2, inner diagonal squared

  friend bool operator==(const BoxCandidate&, const BoxCandidate&) = default;
};

/// A box whose inner diagonal is an integer: t^2 = x^2 + y^2 + z^2.
struct PythagoreanBox {
  BoxCandidate box;
  u64 t = 0;

  friend bool operator==(const PythagoreanBox&, const PythagoreanBox&) = default;
};

inline BoxCandidate make_box(u64 x, u64 y, u64 z) {
  if (x == 0 || y == 0 || z == 0) fail_domain("box edges must be positive");
  if (x > kMaxEdge || y > kMaxEdge || z > kMaxEdge) {
    fail_domain("box edge exceeds the overflow-safe limit");
  }
  const u64 xx = x * x, yy = y * y, zz = z * z;
  return BoxCandidate{x, y, z, xx + yy, yy + zz, xx + zz, xx + yy + zz};
}

inline void ensure_consistent(const BoxCandidate& c) {
  const BoxCandidate fresh = make_box(c.x, c.y, c.z);
  if (fresh != c) fail_domain("box candidate has stale squared diagonals");
}

inline std::optional<PythagoreanBox> as_pythagorean_box(const BoxCandidate& c) {
  ensure_consistent(c);
  if (const auto t = perfect_square_root(c.t2)) return PythagoreanBox{c, *t};
  return std::nullopt;
}

enum class Face { XY, YZ, XZ };
enum class FaceStatus { NotPR, PR, PrimitivePR };

struct FaceClass {
  Face face = Face::XY;
  FaceStatus status = FaceStatus::NotPR;

  friend bool operator==(const FaceClass&, const FaceClass&) = default;
};

inline FaceStatus classify_face(u64 edge_a, u64 edge_b, u64 diag2) {
  if (!is_perfect_square(diag2)) return FaceStatus::NotPR;
  return coprime(edge_a, edge_b) ? FaceStatus::PrimitivePR : FaceStatus::PR;
}

/// Classifies the three face pairs: a face is a PR when its diagonal is an
/// integer, and a primitive PR when additionally its edges are coprime.
inline std::array<FaceClass, 3> classify_faces(const BoxCandidate& c) {
  ensure_consistent(c);
  return {FaceClass{Face::XY, classify_face(c.x, c.y, c.s2)},
          FaceClass{Face::YZ, classify_face(c.y, c.z, c.u2)},
          FaceClass{Face::XZ, classify_face(c.x, c.z, c.w2)}};
}

inline FaceStatus face_status(const std::array<FaceClass, 3>& faces, Face f) {
  for (const auto& fc : faces) {
    if (fc.face == f) return fc.status;
  }
  return FaceStatus::NotPR;
}

/// Generator input: coprime M1 > N1 of opposite parity together with
/// N2, M2 satisfying M1^2 + N1^2 + N2^2 = M2^2. Exactly the four stated
/// conditions; nothing is imposed on (M2, N2) beyond the identity.
struct Result2Params {
  u64 m1 = 0, n1 = 0, n2 = 0, m2 = 0;

  Result2Params(u64 m1_, u64 n1_, u64 n2_, u64 m2_) : m1(m1_), n1(n1_), n2(n2_), m2(m2_) {
    if (n1 == 0 || n2 == 0 || m1 <= n1) fail_domain("params require m1 > n1 >= 1 and n2 >= 1");
    if (!opposite_parity(m1, n1)) fail_domain("params require m1 + n1 odd");
    if (!coprime(m1, n1)) fail_domain("params require gcd(m1, n1) = 1");
    if (checked_add(checked_add(checked_square(m1), checked_square(n1)), checked_square(n2)) !=
        checked_square(m2)) {
      fail_domain("params require m1^2 + n1^2 + n2^2 = m2^2");
    }
  }

  friend bool operator==(const Result2Params&, const Result2Params&) = default;
};

/// Builds the box x = 2 M1 N1, y = 2 M2 N2, z = M1^2 - N1^2, whose XZ face
/// is a primitive PR and whose inner diagonal is t = M1^2 + N1^2 + 2 N2^2.
inline PythagoreanBox box_from_result2(const Result2Params& p) {
  const u64 x = checked_mul(2, checked_mul(p.m1, p.n1));
  const u64 y = checked_mul(2, checked_mul(p.m2, p.n2));
  const u64 z = checked_square(p.m1) - checked_square(p.n1);
  const auto pb = as_pythagorean_box(make_box(x, y, z));
  if (!pb) fail_domain("generated box has no integer inner diagonal");
  return *pb;
}

inline u64 result2_t(const Result2Params& p) {
  return p.m1 * p.m1 + p.n1 * p.n1 + 2 * p.n2 * p.n2;
}

enum class Result2Branch { EvenM1, OddM1 };

struct Result2Entry {
  Result2Params params;
  Result2Branch branch = Result2Branch::EvenM1;
  u64 t = 0;

  friend bool operator==(const Result2Entry&, const Result2Entry&) = default;
};

/// Enumerates every Result2Params with t = M1^2 + N1^2 + 2 N2^2 <= max_t,
/// using the two parity branches of the general sum-of-three-squares
/// solution: the even slots of (M1, N1, N2, M2) are swept as (2m, 2l) and
/// the remaining slots come from a divisor n of l^2 + m^2. Results are
/// deduplicated and sorted by (t, M1, N1, N2, M2).
inline std::vector<Result2Entry> enumerate_result2_params(
    u64 max_t, std::optional<Result2Branch> branch = std::nullopt) {
  if (max_t == 0) fail_domain("enumerate_result2_params requires max_t >= 1");
  if (max_t > kMaxEdge) fail_domain("enumerate_result2_params bound exceeds the overflow-safe limit");
  std::vector<Result2Entry> out;
  const auto want = [&](Result2Branch b) { return !branch || *branch == b; };
  const auto consider = [&](u64 m1, u64 n1, u64 n2, u64 m2, Result2Branch b) {
    if (n1 == 0 || n2 == 0 || m1 <= n1) return;
    if (!opposite_parity(m1, n1) || !coprime(m1, n1)) return;
    const u64 t = m1 * m1 + n1 * n1 + 2 * n2 * n2;
    if (t > max_t) return;
    out.push_back(Result2Entry{Result2Params(m1, n1, n2, m2), b, t});
  };
  // 2 N2^2 <= t caps l; M1^2 <= t (even branch) and N1 < M1 (odd branch) cap m.
  for (u64 l = 1; 8 * l * l <= max_t; ++l) {
    for (u64 m = 1; 4 * m * m <= max_t; ++m) {
      const u64 s = l * l + m * m;
      for (u64 n = 1; n * n < s; ++n) {
        if (s % n != 0) continue;
        const u64 zslot = s / n - n;
        const u64 tslot = s / n + n;
        // Even M1: the even slots of the quadruple are (M1, N2).
        if (want(Result2Branch::EvenM1)) {
          consider(2 * m, zslot, 2 * l, tslot, Result2Branch::EvenM1);
        }
        // Odd M1: the even slots are (N1, N2) and M1 takes the z slot.
        if (want(Result2Branch::OddM1) && is_odd(zslot)) {
          consider(zslot, 2 * m, 2 * l, tslot, Result2Branch::OddM1);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Result2Entry& a, const Result2Entry& b) {
    return std::tie(a.t, a.params.m1, a.params.n1, a.params.n2, a.params.m2) <
           std::tie(b.t, b.params.m1, b.params.n1, b.params.n2, b.params.m2);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The scale factor and primitive core of a Pythagorean pair (w, y, t) with
/// w odd and y even: w = delta (M2^2 - N2^2), y = delta 2 M2 N2,
/// t = delta (M2^2 + N2^2).
struct WytParts {
  u64 delta = 0;
  u64 m2 = 0;
  u64 n2 = 0;

  friend bool operator==(const WytParts&, const WytParts&) = default;
};

inline WytParts decompose_wyt(u64 w, u64 y, u64 t) {
  if (w == 0 || y == 0 || t == 0) fail_domain("decompose_wyt requires positive inputs");
  if (!is_odd(w) || !is_even(y)) fail_domain("decompose_wyt requires w odd and y even");
  if (u128{w} * w + u128{y} * y != u128{t} * t) {
    fail_domain("decompose_wyt requires w^2 + y^2 = t^2");
  }
  const u64 delta = gcd(w, y);  // odd, since w is odd
  const TripleParams p = decompose_primitive_triple(Triple{y / delta, w / delta, t / delta});
  return WytParts{delta, p.m, p.n};
}

/// Witness that a box with two primitive face pairs satisfies
/// M1^2 + N1^2 + delta N2^2 = delta M2^2 with the stated coprimality and
/// parity side conditions.
struct Result1Witness {
  u64 m1 = 0, n1 = 0, m2 = 0, n2 = 0;
  u64 delta = 0;

  friend bool operator==(const Result1Witness&, const Result1Witness&) = default;
};

inline bool witness_relation_holds(const Result1Witness& w) {
  return u128{w.m1} * w.m1 + u128{w.n1} * w.n1 + u128{w.delta} * w.n2 * w.n2 ==
         u128{w.delta} * w.m2 * w.m2;
}

/// Decomposes a box whose XZ and YZ faces are both primitive PRs:
/// (M1, N1) generates the XZ face and (delta, M2, N2) splits the
/// Pythagorean pair (w, y, t). Throws naming the offending face otherwise.
inline Result1Witness decompose_result1(const PythagoreanBox& pb) {
  const auto faces = classify_faces(pb.box);
  if (face_status(faces, Face::XZ) != FaceStatus::PrimitivePR) {
    fail_domain("decompose_result1: XZ face is not a primitive PR");
  }
  if (face_status(faces, Face::YZ) != FaceStatus::PrimitivePR) {
    fail_domain("decompose_result1: YZ face is not a primitive PR");
  }
  // Two primitive faces force x, y even and the shared edge z odd; an even z
  // would leave x, y both odd, impossible modulo 4.
  if (is_even(pb.box.z) || is_odd(pb.box.x) || is_odd(pb.box.y)) {
    fail_domain("decompose_result1: edges violate the even/even/odd parity pattern");
  }
  const u64 w = *perfect_square_root(pb.box.w2);
  const TripleParams xz = decompose_primitive_triple(Triple{pb.box.x, pb.box.z, w});
  const WytParts wyt = decompose_wyt(w, pb.box.y, pb.t);
  const Result1Witness witness{xz.m, xz.n, wyt.m2, wyt.n2, wyt.delta};
  if (!witness_relation_holds(witness)) {
    fail_domain("decompose_result1: witness relation failed");
  }
  return witness;
}

struct Result3Report {
  SearchReport report;
  u64 square_base_boxes = 0;  // square-base boxes with integer inner diagonal seen
  std::vector<PythagoreanBox> counterexamples;
};

/// Scans every square-base candidate (x, x, z) with x, z <= edge_bound and
/// counts those that are Pythagorean boxes whose XZ face is a primitive PR.
/// The claim under test is that the count is always zero. The XY face needs
/// no check: 2 x^2 is never a perfect square.
inline Result3Report verify_result3(u64 edge_bound, unsigned jobs = 1) {
  if (edge_bound == 0) fail_domain("verify_result3 requires edge_bound >= 1");
  if (edge_bound > kMaxEdge) fail_domain("verify_result3 bound exceeds the overflow-safe limit");
  Stopwatch timer;
  struct Chunk {
    u64 pb_count = 0;
    std::vector<PythagoreanBox> hits;
  };
  const auto chunks = map_chunks<Chunk>(1, edge_bound + 1, jobs, [&](u64 lo, u64 hi) {
    Chunk local;
    for (u64 x = lo; x < hi; ++x) {
      const u64 xx2 = 2 * x * x;
      for (u64 z = 1; z <= edge_bound; ++z) {
        const u64 t2 = xx2 + z * z;
        if (!square_candidate(t2)) continue;
        const auto t = perfect_square_root(t2);
        if (!t) continue;
        ++local.pb_count;
        if (coprime(x, z) && is_perfect_square(x * x + z * z)) {
          local.hits.push_back(PythagoreanBox{make_box(x, x, z), *t});
        }
      }
    }
    return local;
  });
  Result3Report result;
  for (const auto& c : chunks) {
    result.square_base_boxes += c.pb_count;
    result.counterexamples.insert(result.counterexamples.end(), c.hits.begin(), c.hits.end());
  }
  result.report.scope = "square-base boxes (x, x, z) with x, z <= bound";
  result.report.bound = edge_bound;
  result.report.count = result.counterexamples.size();
  if (!result.counterexamples.empty()) {
    u64 best = result.counterexamples.front().t;
    for (const auto& pb : result.counterexamples) best = std::min(best, pb.t);
    result.report.min_t = best;
  }
  result.report.elapsed_ms = timer.elapsed_ms();
  return result;
}

struct MinTReport {
  SearchReport report;
  std::vector<PythagoreanBox> matches;  // canonical edge order, sorted by (t, x, y, z)
  std::optional<Result1Witness> witness;  // for the minimal two-pair exemplar
};

namespace detail {

// Reorders a matched box so a primitive face sits as XZ with x even and
// z odd; with two primitive faces the shared odd edge becomes z and the
// smaller even edge becomes x. Orders are tried smallest-x first.
inline PythagoreanBox canonical_match(u64 a, u64 b, u64 c, u64 t) {
  std::array<u64, 3> e{a, b, c};
  std::sort(e.begin(), e.end());
  const std::array<std::array<u64, 3>, 6> orders{{{e[0], e[1], e[2]},
                                                  {e[0], e[2], e[1]},
                                                  {e[1], e[0], e[2]},
                                                  {e[1], e[2], e[0]},
                                                  {e[2], e[0], e[1]},
                                                  {e[2], e[1], e[0]}}};
  const auto pick = [&](bool need_two) -> std::optional<PythagoreanBox> {
    for (const auto& [x, y, z] : orders) {
      if (!is_even(x) || !is_odd(z)) continue;
      const BoxCandidate cand = make_box(x, y, z);
      const auto faces = classify_faces(cand);
      if (face_status(faces, Face::XZ) != FaceStatus::PrimitivePR) continue;
      if (need_two && face_status(faces, Face::YZ) != FaceStatus::PrimitivePR) continue;
      return PythagoreanBox{cand, t};
    }
    return std::nullopt;
  };
  if (auto two = pick(true)) return *two;
  if (auto one = pick(false)) return *one;
  fail_domain("canonical_match called on a box without a primitive face");
}

}  // namespace detail

/// Brute-force search, backed by the quadruple oracle, for boxes with at
/// least one primitive PR face pair and t <= max_t. Inherits the oracle's
/// scan ceiling of t <= 300.
inline MinTReport search_min_t_one_primitive_pair(u64 max_t, unsigned jobs = 1) {
  if (max_t == 0) fail_domain("search_min_t_one_primitive_pair requires max_t >= 1");
  Stopwatch timer;
  const std::vector<Quadruple> quads = brute_force_quadruples(max_t);
  const auto chunks =
      map_chunks<std::vector<PythagoreanBox>>(0, quads.size(), jobs, [&](u64 lo, u64 hi) {
        std::vector<PythagoreanBox> local;
        for (u64 i = lo; i < hi; ++i) {
          const Quadruple& q = quads[i];
          const auto faces = classify_faces(make_box(q.x, q.y, q.z));
          const bool any = std::any_of(faces.begin(), faces.end(), [](const FaceClass& f) {
            return f.status == FaceStatus::PrimitivePR;
          });
          if (any) local.push_back(detail::canonical_match(q.x, q.y, q.z, q.t));
        }
        return local;
      });
  MinTReport result;
  for (const auto& c : chunks) result.matches.insert(result.matches.end(), c.begin(), c.end());
  std::sort(result.matches.begin(), result.matches.end(),
            [](const PythagoreanBox& a, const PythagoreanBox& b) {
              return std::tie(a.t, a.box.x, a.box.y, a.box.z) <
                     std::tie(b.t, b.box.x, b.box.y, b.box.z);
            });
  result.report.scope = "boxes with at least one primitive PR face pair, t <= bound";
  result.report.bound = max_t;
  result.report.count = result.matches.size();
  if (!result.matches.empty()) result.report.min_t = result.matches.front().t;
  result.report.elapsed_ms = timer.elapsed_ms();
  return result;
}

/// Searches for boxes whose XZ and YZ faces are both primitive PRs with
/// t <= max_t. Two primitive faces must share the odd edge, so candidates
/// are pairs of primitive triples with a common odd leg; each pair is
/// accepted when x^2 + y^2 + z^2 is a perfect square. Reports the minimal
/// exemplar with its witness, or certifies that none exists up to the bound.
inline MinTReport search_min_t_two_primitive_pairs(u64 max_t, unsigned jobs = 1) {
  if (max_t == 0) fail_domain("search_min_t_two_primitive_pairs requires max_t >= 1");
  if (max_t > kMaxEdge) {
    fail_domain("search_min_t_two_primitive_pairs bound exceeds the overflow-safe limit");
  }
  Stopwatch timer;
  // Group the even legs of all primitive triples (hypotenuse < max_t; both
  // face diagonals stay below t) by their odd leg.
  std::map<u64, std::vector<u64>> by_odd_leg;
  for (const auto& [params, triple] : enumerate_primitive_triples(max_t)) {
    by_odd_leg[triple.b].push_back(triple.a);
  }
  std::vector<std::pair<u64, std::vector<u64>>> groups(by_odd_leg.begin(), by_odd_leg.end());
  for (auto& g : groups) std::sort(g.second.begin(), g.second.end());

  const auto chunks =
      map_chunks<std::vector<PythagoreanBox>>(0, groups.size(), jobs, [&](u64 lo, u64 hi) {
        std::vector<PythagoreanBox> local;
        for (u64 gi = lo; gi < hi; ++gi) {
          const auto& [z, evens] = groups[gi];
          const u64 zz = z * z;
          for (std::size_t i = 0; i < evens.size(); ++i) {
            for (std::size_t j = i; j < evens.size(); ++j) {
              const u64 x = evens[i], y = evens[j];
              const u64 t2 = x * x + y * y + zz;
              if (!square_candidate(t2)) continue;
              const auto t = perfect_square_root(t2);
              if (!t || *t > max_t) continue;
              local.push_back(PythagoreanBox{make_box(x, y, z), *t});
            }
          }
        }
        return local;
      });
  MinTReport result;
  for (const auto& c : chunks) result.matches.insert(result.matches.end(), c.begin(), c.end());
  std::sort(result.matches.begin(), result.matches.end(),
            [](const PythagoreanBox& a, const PythagoreanBox& b) {
              return std::tie(a.t, a.box.x, a.box.y, a.box.z) <
                     std::tie(b.t, b.box.x, b.box.y, b.box.z);
            });
  result.matches.erase(std::unique(result.matches.begin(), result.matches.end()),
                       result.matches.end());
  result.report.scope = "boxes whose XZ and YZ faces are both primitive PRs, t <= bound";
  result.report.bound = max_t;
  result.report.count = result.matches.size();
  if (!result.matches.empty()) {
    result.report.min_t = result.matches.front().t;
    result.witness = decompose_result1(result.matches.front());
  }
  result.report.elapsed_ms = timer.elapsed_ms();
  return result;
}

}  // namespace pybox
