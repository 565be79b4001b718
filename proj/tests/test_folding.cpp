#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "helpers.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/folding.hpp"

using namespace hyperlat;

namespace {

bool closed_alcove(long p, long q, long n) { return p >= 0 && q >= 0 && p + q <= n; }

// Explores the reflection orbit of (p,q) in every order and returns the signs
// with which the closed alcove is reached.
std::pair<std::pair<long, long>, std::set<int>> orbit_fold(long p, long q, long n) {
  std::map<std::pair<long, long>, std::set<int>> seen;
  std::queue<std::tuple<long, long, int>> todo;
  todo.push({p, q, 1});
  const long radius = std::max(std::abs(p), std::abs(q)) + 3 * n;
  while (!todo.empty()) {
    auto [a, b, s] = todo.front();
    todo.pop();
    if (std::abs(a) > radius || std::abs(b) > radius) continue;
    if (!seen[{a, b}].insert(s).second) continue;
    todo.push({-a, a + b, -s});
    todo.push({a + b, -b, -s});
    todo.push({n - b, n - a, -s});
  }
  for (const auto& [pt, signs] : seen)
    if (closed_alcove(pt.first, pt.second, n)) return {pt, signs};
  return {{0, 0}, {}};
}

ExtendedFusion extended_A(int k) { return ExtendedFusion(build_alcove_fusion(builtin_A_generator(k).adjacency, k)); }

}  // namespace

TEST_CASE("fold examples") {
  FoldResult r = fold(1, 1, 4);
  CHECK(r.sign == 1);
  CHECK(r.target == Weight{1, 1, true});
  CHECK(fold(2, 2, 4).sign == 0);
  CHECK_FALSE(fold(2, 2, 4).target.has_value());
  for (long n = 4; n <= 8; ++n) {
    r = fold(-1, -1, n);
    CHECK(r.sign == -1);
    CHECK(r.target == Weight{1, 1, true});
  }
}

TEST_CASE("fold is independent of the reduction path") {
  for (long n = 3; n <= 7; ++n)
    for (long p = -2 * n; p <= 2 * n; ++p)
      for (long q = -2 * n; q <= 2 * n; ++q) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(q);
        const auto [target, signs] = orbit_fold(p, q, n);
        REQUIRE_FALSE(signs.empty());
        const FoldResult r = fold(p, q, n);
        const bool on_wall = target.first == 0 || target.second == 0 || target.first + target.second == n;
        if (on_wall || signs.size() == 2) {
          CHECK(r.sign == 0);
        } else {
          CHECK(r.sign == *signs.begin());
          CHECK(r.target == Weight{target.first, target.second, true});
        }
      }
}

TEST_CASE("fold: wall iff some label vanishes mod N") {
  for (long p = -12; p <= 12; ++p)
    for (long q = -12; q <= 12; ++q) {
      const long n = 5;
      const bool wall = p % n == 0 || q % n == 0 || (p + q) % n == 0;
      const FoldResult r = fold(p, q, n);
      CHECK((r.sign == 0) == wall);
      if (r.sign != 0) {
        CHECK(r.target->p >= 1);
        CHECK(r.target->q >= 1);
        CHECK(r.target->p + r.target->q <= n - 1);
      }
    }
}

TEST_CASE("extended fusion: values and periodicity") {
  const ExtendedFusion f = extended_A(1);
  CHECK(f(1, 1) == IntMatrix::identity(3));
  CHECK(f(-2, 1) == IntMatrix::identity(3));
  const long n = f.altitude();
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int i = 0; i < 200; ++i) {
    const long p = d(rng), q = d(rng);
    CHECK(f(p + 3 * n, q) == f(p, q));
    CHECK(f(p, q + 3 * n) == f(p, q));
    CHECK(f(p + n, q + n) == f(p, q));
    CHECK(f.entry(p, q, 0, 1) == f(p, q)(0, 1));
  }
}

TEST_CASE("twist P") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const ExtendedFusion f = extended_A(k);
    const IntMatrix p = f.twist_P();
    CHECK(p * p * p == IntMatrix::identity(f.rank()));
    const long n = f.altitude();
    for (long a = -n; a <= 2 * n; ++a)
      for (long b = -n; b <= 2 * n; ++b) {
        CHECK(p * f(a, b) == f(a + n, b));
        CHECK(p * p * f(a, b) == f(a, b + n));
      }
  }
  CHECK(extended_A(1).twist_P() == builtin_A_generator(1).adjacency);
}

TEST_CASE("six-term combination at the origin is 6 times the identity") {
  for (int k = 1; k <= 4; ++k) {
    const ExtendedFusion f = extended_A(k);
    const IntMatrix six = f(1, 1) + f(-2, 1) + f(1, -2) - f(-1, -1) - f(-1, 2) - f(2, -1);
    CHECK(six == IntMatrix::identity(f.rank()) * BigInt(6));
  }
}
