#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hyperlat/catalog.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/golden.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/reduction.hpp"
#include "hyperlat/ribbon.hpp"
#include "hyperlat/theta.hpp"

using namespace hyperlat;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

IntMatrix module_gram(const std::string& name, int level) {
  const RootSystem sys(get_module(name, level));
  return gram_matrix(sys, basis(sys));
}

// 2 B^T B for a random B with small entries; rejected when singular or when
// the naive box would be large.
std::optional<IntMatrix> random_even_form(std::mt19937& rng, std::size_t n, std::size_t max_index) {
  std::uniform_int_distribution<long> d(-2, 2);
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
  const IntMatrix a = b.transpose() * b * BigInt(2);
  const BigInt det = testing::leibniz_det(a);
  if (det == 0) return std::nullopt;
  double box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt cof = n == 1 ? BigInt(1) : testing::leibniz_det(testing::minor_matrix(a, i, i));
    box *= 2 * std::sqrt(2.0 * max_index * cof.get_d() / det.get_d()) + 1;
  }
  if (box > 2e5) return std::nullopt;
  return a;
}

}  // namespace

TEST_CASE("theta examples") {
  CHECK(theta_coefficients(module_gram("A", 1), 7).coefficients == ints({1, 0, 0, 32, 60, 0, 0, 192}));
  CHECK(theta_coefficients(module_gram("D", 3), 5).coefficients == ints({1, 0, 36, 144, 486, 2880}));
  CHECK(theta_coefficients(testing::from_rows({{2}}), 4).coefficients == ints({1, 2, 0, 0, 2}));
  CHECK(theta_coefficients(module_gram("A", 1), 0).coefficients == ints({1}));
  CHECK(theta_coefficients(module_gram("A", 1), 0).max_index() == 0);
}

TEST_CASE("kissing terms") {
  const KissingTerm a2 = kissing_term(module_gram("A", 2));
  CHECK(a2.norm == 6);
  CHECK(a2.count == 100);
  const KissingTerm e9 = kissing_term(module_gram("E9", 9));
  CHECK(e9.norm == 4);
  CHECK(e9.count == 756);
  const auto e21 = theta_coefficients(module_gram("E21", 21), 2).coefficients;
  CHECK(e21 == ints({1, 0, 144}));
}

TEST_CASE("pruned enumeration agrees with the naive box") {
  std::vector<IntMatrix> forms = {
      testing::from_rows({{2}}),
      testing::from_rows({{6, -3}, {-3, 6}}),
      testing::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}),
      golden_table().gram_a1,
  };
  std::mt19937 rng(2024);
  for (std::size_t n = 1; n <= 6; ++n) {
    int made = 0;
    for (int attempt = 0; attempt < 400 && made < 4; ++attempt)
      if (auto a = random_even_form(rng, n, 10)) {
        forms.push_back(*a);
        ++made;
      }
  }
  CHECK(forms.size() >= 20);
  for (const auto& a : forms) {
    for (std::size_t m : {std::size_t(3), std::size_t(10)}) {
      const auto want = testing::naive_theta(a, m);
      for (bool reduce : {false, true}) {
        EnumerationOptions o;
        o.reduce = reduce;
        o.threads = reduce ? 3 : 1;
        CHECK(theta_coefficients(a, m, o).coefficients == want);
      }
    }
  }
}

TEST_CASE("output does not depend on threads, reduction or block size") {
  const IntMatrix a = module_gram("A", 2);
  EnumerationOptions o;
  const auto base = theta_coefficients(a, 11, o).coefficients;
  for (unsigned t : {2u, 3u, 5u, 8u}) {
    o.threads = t;
    CHECK(theta_coefficients(a, 11, o).coefficients == base);
  }
  for (int bs : {2, 6, 10}) {
    o.block_size = bs;
    CHECK(theta_coefficients(a, 11, o).coefficients == base);
  }
  o.reduce = false;
  EnumerationStats stats;
  CHECK(theta_coefficients(a, 11, o, &stats).coefficients == base);
  CHECK(stats.nodes > 0);
  CHECK(stats.tasks > 0);
}

TEST_CASE("theta series invariants") {
  const auto c = theta_coefficients(module_gram("D", 6), 4, 2).coefficients;
  CHECK(c.front() == 1);
  for (std::size_t m = 1; m < c.size(); ++m) {
    CHECK(c[m] >= 0);
    CHECK(c[m] % 2 == 0);
  }
  CHECK_THROWS_AS(theta_coefficients(testing::from_rows({{2, 3}, {3, 2}}), 3), DomainError);
  CHECK_THROWS_AS(theta_coefficients(testing::from_rows({{3}}), 3), DomainError);
}

TEST_CASE("reduction is unimodular and exact") {
  for (const auto& a : {module_gram("A", 3), module_gram("E5", 5)}) {
    const ReducedGram r = reduce_gram(a);
    CHECK(abs(determinant(r.transform)) == 1);
    CHECK(r.gram == r.transform * a * r.transform.transpose());
    CHECK(determinant(r.gram) == determinant(a));
  }
}

TEST_CASE("shell vectors") {
  const IntMatrix a = golden_table().gram_a1;
  const auto shell = shell_vectors(a, 6);
  CHECK(shell.size() == 16);
  for (const auto& v : shell) {
    std::vector<BigInt> b(v.begin(), v.end());
    CHECK(gram_norm(a, b) == 6);
  }
  CHECK(shell_vectors(a, 4).empty());
}

TEST_CASE("shell classification") {
  const RootSystem d3(get_module("D", 3));
  const RootExpander ex(d3, basis(d3));
  const auto cls = classify_shells(ex.gram(), ex.expand_all(build_ribbon(d3)));
  REQUIRE(cls.shells.size() == 2);
  CHECK(cls.shells[0].norm == 4);
  CHECK(cls.shells[0].vectors == 36);
  CHECK(cls.shells[0].roots == 0);
  CHECK(cls.shells[1].norm == 6);
  CHECK(cls.shells[1].vectors == 144);
  CHECK(cls.shells[1].roots == 144);
  CHECK(cls.root_count == 144);
  CHECK(cls.roots_outside_shells == 0);
}

TEST_CASE("Jacobi combination") {
  const auto j = jacobi_theta_series(40);
  CHECK(j.size() == 41);
  CHECK(j[0] == 1);
  CHECK(j[3] == 32);
  CHECK(theta_coefficients(golden_table().gram_a1, 40).coefficients == j);
}

TEST_CASE("combining series") {
  const auto& g = golden_table();
  const auto combo = combine_series(g.b_basis, g.b_weights, 24);
  CHECK(combo[0] == 1);
  CHECK(combo[3] == 32);
  CHECK(combo[8] == 252);
  CHECK(combine_series({ints({1, 2, 3})}, ints({2}), 2) == ints({2, 4}));
}
