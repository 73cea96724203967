#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <tuple>

#include "pybox/triples.hpp"

using namespace pybox;

namespace {

// Independent oracle: all primitive triples with hypotenuse <= max_c by
// direct scan, normalized to (even leg, odd leg, hypotenuse).
std::set<std::tuple<u64, u64, u64>> brute_force_primitive_triples(u64 max_c) {
  std::set<std::tuple<u64, u64, u64>> found;
  for (u64 c = 5; c <= max_c; ++c) {
    for (u64 a = 1; a < c; ++a) {
      const u64 b2 = c * c - a * a;
      const auto b = perfect_square_root(b2);
      if (!b || *b <= a || gcd(a, *b) != 1) continue;
      const u64 even = is_even(a) ? a : *b;
      const u64 odd = is_even(a) ? *b : a;
      found.insert({even, odd, c});
    }
  }
  return found;
}

}  // namespace

TEST_CASE("triple params validation") {
  CHECK_NOTHROW(TripleParams(2, 1));
  CHECK_THROWS_AS(TripleParams(1, 1), std::domain_error);   // m <= n
  CHECK_THROWS_AS(TripleParams(2, 2), std::domain_error);
  CHECK_THROWS_AS(TripleParams(3, 1), std::domain_error);   // both odd
  CHECK_THROWS_AS(TripleParams(6, 3), std::domain_error);   // common factor
  CHECK_THROWS_AS(TripleParams(2, 0), std::domain_error);
}

TEST_CASE("make_primitive_triple known values") {
  CHECK(make_primitive_triple(TripleParams(2, 1)) == Triple{4, 3, 5});
  CHECK(make_primitive_triple(TripleParams(7, 4)) == Triple{56, 33, 65});
  CHECK(make_primitive_triple(TripleParams(3, 2)) == Triple{12, 5, 13});
}

TEST_CASE("classify_triple") {
  CHECK(classify_triple(4, 3, 5) == TripleClass{TripleKind::Primitive, 1});
  CHECK(classify_triple(3, 4, 5) == TripleClass{TripleKind::Primitive, 1});  // any leg order
  // (12, 3, u) is never Pythagorean: 144 + 9 = 153 is not a square.
  for (u64 u = 1; u <= 20; ++u) {
    CHECK(classify_triple(12, 3, u).kind == TripleKind::NotPythagorean);
  }
  CHECK(classify_triple(6, 8, 10) == TripleClass{TripleKind::NonPrimitive, 2});
  CHECK_THROWS_AS(classify_triple(0, 3, 5), std::domain_error);
}

TEST_CASE("decompose_primitive_triple known values") {
  CHECK(decompose_primitive_triple(Triple{4, 3, 5}) == TripleParams(2, 1));
  CHECK(decompose_primitive_triple(Triple{12, 5, 13}) == TripleParams(3, 2));
  CHECK(decompose_primitive_triple(Triple{56, 33, 65}) == TripleParams(7, 4));
  // Legs may arrive in either order.
  CHECK(decompose_primitive_triple(Triple{3, 4, 5}) == TripleParams(2, 1));
  CHECK_THROWS_AS(decompose_primitive_triple(Triple{6, 8, 10}), std::domain_error);
  CHECK_THROWS_AS(decompose_primitive_triple(Triple{1, 2, 3}), std::domain_error);
}

TEST_CASE("primitive triples round-trip and structure, m <= 60") {
  int cases = 0;
  for (u64 m = 2; m <= 60; ++m) {
    for (u64 n = 1; n < m; ++n) {
      if (!opposite_parity(m, n) || !coprime(m, n)) continue;
      const TripleParams p(m, n);
      const Triple t = make_primitive_triple(p);
      CHECK(u128{t.a} * t.a + u128{t.b} * t.b == u128{t.c} * t.c);
      CHECK(is_even(t.a));
      CHECK(is_odd(t.b));
      CHECK(is_odd(t.c));
      // gcd(legs) = 1 is equivalent to pairwise coprimality.
      CHECK(gcd(t.a, t.b) == 1);
      CHECK(gcd(t.a, t.c) == 1);
      CHECK(gcd(t.b, t.c) == 1);
      CHECK(decompose_primitive_triple(t) == p);
      ++cases;
    }
  }
  CHECK(cases > 500);
}

TEST_CASE("enumerate_primitive_triples") {
  CHECK(enumerate_primitive_triples(4).empty());
  const auto smallest = enumerate_primitive_triples(5);
  REQUIRE(smallest.size() == 1);
  CHECK(smallest[0].first == TripleParams(2, 1));
  CHECK(smallest[0].second == Triple{4, 3, 5});

  const auto to13 = enumerate_primitive_triples(13);
  REQUIRE(to13.size() == 2);
  CHECK(to13[0].second == Triple{4, 3, 5});
  CHECK(to13[1].second == Triple{12, 5, 13});

  CHECK(enumerate_primitive_triples(100).size() == 16);
  CHECK_THROWS_AS(enumerate_primitive_triples(0), std::domain_error);
}

TEST_CASE("enumeration is complete and sorted up to 500") {
  const auto enumerated = enumerate_primitive_triples(500);
  const auto oracle = brute_force_primitive_triples(500);
  CHECK(enumerated.size() == 80);
  REQUIRE(enumerated.size() == oracle.size());
  std::set<std::tuple<u64, u64, u64>> seen;
  for (const auto& [params, t] : enumerated) {
    CHECK(make_primitive_triple(params) == t);
    seen.insert({t.a, t.b, t.c});
  }
  CHECK(seen == oracle);
  for (std::size_t i = 1; i < enumerated.size(); ++i) {
    const Triple& prev = enumerated[i - 1].second;
    const Triple& cur = enumerated[i].second;
    CHECK(std::tie(prev.c, prev.a) < std::tie(cur.c, cur.a));
  }
}

TEST_CASE("x^2 + 2y^2 = z^2 generator") {
  CHECK(make_x2_plus_2y2_solution(TwoSquareParams(1, 1, 1)) == TwoSquareSolution{1, 2, 3});
  CHECK(make_x2_plus_2y2_solution(TwoSquareParams(3, 2, 1)) == TwoSquareSolution{1, 12, 17});
  CHECK(make_x2_plus_2y2_solution(TwoSquareParams(1, 1, 2)) == TwoSquareSolution{2, 4, 6});
  CHECK_THROWS_AS(TwoSquareParams(0, 1, 1), std::domain_error);

  for (u64 t1 = 1; t1 <= 50; ++t1) {
    for (u64 t2 = 1; t2 <= 50; ++t2) {
      for (u64 d = 1; d <= 5; ++d) {
        const auto s = make_x2_plus_2y2_solution(TwoSquareParams(t1, t2, d));
        CHECK(s.x >= 1);
        CHECK(u128{s.x} * s.x + u128{2} * s.y * s.y == u128{s.z} * s.z);
      }
    }
  }
}

TEST_CASE("x^2 + 2y^2 = z^2 covers all primitive solutions with z <= 200") {
  std::set<std::tuple<u64, u64, u64>> oracle;
  for (u64 z = 1; z <= 200; ++z) {
    for (u64 y = 1; 2 * y * y < z * z; ++y) {
      const auto x = perfect_square_root(z * z - 2 * y * y);
      if (x && *x >= 1 && coprime(*x, y)) oracle.insert({*x, y, z});
    }
  }
  std::set<std::tuple<u64, u64, u64>> generated;
  for (u64 t1 = 1; t1 * t1 <= 200; ++t1) {
    for (u64 t2 = 1; 2 * t2 * t2 <= 200; ++t2) {
      const auto s = make_x2_plus_2y2_solution(TwoSquareParams(t1, t2, 1));
      if (s.z <= 200 && coprime(s.x, s.y)) generated.insert({s.x, s.y, s.z});
    }
  }
  CHECK(oracle.size() == 44);
  CHECK(generated == oracle);
}
