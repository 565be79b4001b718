#include <doctest.h>

#include "helpers.hpp"
#include "hyperlat/catalog.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/fusion.hpp"
#include "hyperlat/golden.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/ribbon.hpp"

using namespace hyperlat;

TEST_CASE("ribbon sizes") {
  const std::vector<std::size_t> want = {16, 50, 120, 245};
  for (int k = 1; k <= 4; ++k) {
    const RootSystem sys(builtin_A_generator(k));
    const auto pts = build_ribbon(sys);
    CHECK(pts.size() == want[k - 1]);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const auto& x : pts) CHECK(sys.admissible(x));
  }
  CHECK_THROWS_AS(build_ribbon(RootSystem(builtin_A_generator(0))), DomainError);
}

TEST_CASE("every higher root has norm 6 and distinct roots at one position are orthogonal") {
  for (int k = 1; k <= 3; ++k) {
    const RootSystem sys(builtin_A_generator(k));
    const auto pts = build_ribbon(sys);
    for (const auto& x : pts) {
      CHECK(sys.inner_product(x, x) == 6);
      for (const auto& y : pts)
        if (x.p == y.p && x.q == y.q && x.vertex != y.vertex) CHECK(sys.inner_product(x, y) == 0);
    }
  }
}

TEST_CASE("A1 Gram matrix equals the printed one") {
  const RootSystem sys(builtin_A_generator(1));
  const auto b = basis(sys, BasisChoice::B1);
  REQUIRE(b.size() == 6);
  CHECK(gram_matrix(sys, b) == golden_table().gram_a1);
}

TEST_CASE("A0 gives three times the SU(3) Cartan matrix") {
  const RootSystem sys(get_module("A", 0));
  CHECK(gram_matrix(sys, basis(sys)) == testing::from_rows({{6, -3}, {-3, 6}}));
}

TEST_CASE("determinant and dual quotient do not depend on the basis") {
  auto same = [](const RootSystem& sys, BasisChoice c) {
    const IntMatrix g1 = gram_matrix(sys, basis(sys, BasisChoice::B1));
    const IntMatrix g = gram_matrix(sys, basis(sys, c));
    CHECK(determinant(g) == determinant(g1));
    CHECK(smith_normal_form(g) == smith_normal_form(g1));
  };
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    same(RootSystem(builtin_A_generator(k)), BasisChoice::B2);
  }
  same(RootSystem(builtin_A_generator(2)), BasisChoice::B3);
  same(RootSystem(builtin_A_generator(4)), BasisChoice::B3);
  // The corner positions are linearly dependent here.
  CHECK_THROWS_AS(basis(RootSystem(builtin_A_generator(1)), BasisChoice::B3), DomainError);
  CHECK_THROWS_AS(basis(RootSystem(builtin_A_generator(3)), BasisChoice::B3), DomainError);
  // For D3 they span an index-3 sublattice.
  const RootSystem d3(get_module("D", 3));
  std::vector<RibbonPoint> corner;
  for (const auto& [p, q] : basis_positions(BasisChoice::B3, d3.altitude()))
    for (std::size_t v = 0; v < d3.rank(); ++v)
      if (d3.admissible(RibbonPoint{p, q, v})) corner.push_back(RibbonPoint{p, q, v});
  CHECK(determinant(gram_matrix(d3, corner)) == 9 * determinant(gram_matrix(d3, basis(d3))));
  CHECK_THROWS_AS(basis(d3, BasisChoice::B3), DomainError);
  CHECK(parse_basis("B2") == BasisChoice::B2);
  CHECK(to_string(BasisChoice::B3) == "B3");
  CHECK_THROWS_AS(parse_basis("B4"), DomainError);
}

TEST_CASE("expansions are integral with norm 6 and reproduce inner products") {
  for (int k = 1; k <= 3; ++k) {
    const RootSystem sys(builtin_A_generator(k));
    const RootExpander ex(sys, basis(sys));
    const auto pts = build_ribbon(sys);
    const auto coords = ex.expand_all(pts, 2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(gram_norm(ex.gram(), coords[i]) == 6);
      // <x, b_j> from the coordinates matches the direct evaluation.
      for (std::size_t j = 0; j < ex.family().size(); ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < coords[i].size(); ++l) s += coords[i][l] * ex.gram()(l, j);
        CHECK(s == sys.inner_product(pts[i], ex.family()[j]));
      }
    }
  }
}

TEST_CASE("ribbon Gram matrix has rank 2 r_E") {
  const RootSystem sys(builtin_A_generator(2));
  const BigGram g = big_gram(sys);
  CHECK(g.rank == 12);
  CHECK(g.matrix.rows() == 50);
  CHECK(g.matrix.is_symmetric());
  CHECK(inner_product_table(sys, build_ribbon(sys), basis(sys), 3) == inner_product_table(sys, build_ribbon(sys), basis(sys), 1));
}

TEST_CASE("harmonicity") {
  for (int k = 1; k <= 3; ++k) {
    const RootSystem sys(builtin_A_generator(k));
    for (const auto& x : build_ribbon(sys)) CHECK(harmonicity_check(sys, x));
    CHECK_FALSE(is_harmonic(sys, [](long, long, std::size_t) { return 1L; }));
  }
  const RootSystem d3(get_module("D", 3));
  for (const auto& x : build_ribbon(d3)) CHECK(harmonicity_check(d3, x));
}
