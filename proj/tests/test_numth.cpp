#include <doctest.h>

#include <numeric>
#include <set>

#include "hyperlat/errors.hpp"
#include "hyperlat/numth.hpp"

using namespace hyperlat;

namespace {

long order_mod(long g, long n) {
  long x = g % n, k = 1;
  while (x != 1 % n) x = x * g % n, ++k;
  return k;
}

}  // namespace

TEST_CASE("Legendre symbol") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(5, 3) == -1);
  CHECK(legendre(-4096, 3) == -1);
  CHECK(legendre(21, 7) == 0);
  CHECK_THROWS_AS(legendre(1, 2), DomainError);
  CHECK_THROWS_AS(legendre(1, 9), DomainError);
  for (long p : primes_up_to(60)) {
    if (p == 2) continue;
    std::set<long> squares;
    for (long x = 1; x < p; ++x) squares.insert(x * x % p);
    for (long a = -2 * p; a <= 2 * p; ++a) {
      const long r = ((a % p) + p) % p;
      const int want = r == 0 ? 0 : squares.count(r) ? 1 : -1;
      CHECK(legendre(a, p) == want);
    }
  }
}

TEST_CASE("Kronecker symbol agrees with Legendre on odd primes") {
  for (long p : primes_up_to(100))
    if (p > 2)
      for (long a : {-4L, 5L, -3L, 12L}) CHECK(kronecker(a, p) == legendre(a, p));
  CHECK(kronecker(-4, 1) == 1);
  CHECK_THROWS_AS(kronecker(1, 0), DomainError);
}

TEST_CASE("Euler phi") {
  CHECK(euler_phi(16) == 8);
  CHECK(euler_phi(25) == 20);
  CHECK(euler_phi(1) == 1);
  for (long n = 1; n <= 300; ++n) {
    long count = 0;
    for (long k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++count;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("unit groups") {
  auto orders = [](long n) {
    std::vector<long> o;
    for (const auto& g : unit_group(n)) o.push_back(g.order);
    std::sort(o.begin(), o.end());
    return o;
  };
  CHECK(orders(16) == std::vector<long>{2, 4});
  CHECK(orders(25) == std::vector<long>{20});
  CHECK(orders(3) == std::vector<long>{2});
  CHECK(unit_group(2).empty());
  CHECK_THROWS_AS(unit_group(1), DomainError);

  // The generators have the stated orders and their products hit every unit exactly once.
  for (long n = 2; n <= 120; ++n) {
    CAPTURE(n);
    const auto gens = unit_group(n);
    long total = 1;
    std::set<long> reached{1 % n};
    for (const auto& g : gens) {
      CHECK(std::gcd(g.generator, n) == 1);
      CHECK(order_mod(g.generator, n) == g.order);
      total *= g.order;
      std::set<long> next;
      for (long x : reached) {
        long y = x;
        for (long e = 0; e < g.order; ++e) next.insert(y), y = y * g.generator % n;
      }
      reached = next;
    }
    CHECK(total == euler_phi(n));
    CHECK(static_cast<long>(reached.size()) == euler_phi(n));
  }
}

TEST_CASE("Dirichlet characters") {
  for (long n : {3L, 16L, 18L, 25L, 49L}) {
    const auto chars = all_characters(n);
    CHECK(static_cast<long>(chars.size()) == euler_phi(n));
    CHECK(chars.front().is_principal());
    for (const auto& chi : chars) {
      for (long a = 0; a < n; ++a) {
        if (std::gcd(a, n) != 1) {
          CHECK(chi(a).zero);
          continue;
        }
        CHECK(chi(a + n) == chi(a));
        for (long b = 1; b < n; ++b) {
          if (std::gcd(b, n) != 1) continue;
          const CharacterValue ab = chi(a * b), va = chi(a), vb = chi(b);
          Rational t = va.turn + vb.turn;
          if (t >= 1) t -= 1;
          CHECK(ab.turn == t);
        }
      }
    }
  }
  const CharacterValue minus_one{false, Rational(1, 2)}, zero{true, 0}, quarter{false, Rational(1, 4)};
  CHECK(minus_one.as_integer() == -1);
  CHECK(zero.as_integer() == 0);
  CHECK_THROWS_AS(quarter.as_integer(), DomainError);
}

TEST_CASE("character matching") {
  BigInt det_a1 = 4096;
  const auto a1 = matching_characters(det_a1, 3, 16);
  REQUIRE(a1.size() == 1);
  CHECK(a1.front().parity() == -1);
  for (long p : primes_up_to(100))
    if (p > 2) CHECK(a1.front()(p).as_integer() == kronecker(-4, p));
  CHECK_FALSE(a1.front().is_principal());
  // The principal character fails because chi(3) would have to be -1.
  CHECK(legendre(-det_a1, 3) == -1);

  BigInt det_a2;
  mpz_ui_pow_ui(det_a2.get_mpz_t(), 5, 9);
  const DirichletCharacter a2 = identify_character(det_a2, 6, 25);
  CHECK(a2.is_real());
  CHECK(a2.parity() == 1);
  for (long p : primes_up_to(100))
    if (p != 5 && p > 2) CHECK(a2(p).as_integer() == kronecker(5, p));

  CHECK_THROWS_AS(identify_character(det_a1, 3, 5), InvariantError);
  CHECK_THROWS_AS(matching_characters(det_a1, 3, 16, 40), DomainError);
}
