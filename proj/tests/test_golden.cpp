#include <doctest.h>

#include <json.hpp>
#include <numeric>

#include "helpers.hpp"
#include "hyperlat/catalog.hpp"
#include "hyperlat/golden.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/ribbon.hpp"
#include "hyperlat/theta.hpp"
#include "hyperlat/verify.hpp"

using namespace hyperlat;
using nlohmann::json;

TEST_CASE("golden data is self-consistent") {
  const GoldenTable& g = golden_table();
  CHECK(g.rows.size() == 9);
  CHECK(g.theta.size() == 12);
  for (const auto& r : g.rows) {
    CAPTURE(r.name);
    CHECK_FALSE(r.citation.empty());
    CHECK(r.lattice_rank == 2 * r.module_rank);
    long phi = 0;
    for (long k = 1; k <= r.modular_level; ++k)
      if (std::gcd(k, r.modular_level) == 1) ++phi;
    CHECK(phi == r.euler_phi);
  }
  for (const auto& t : g.theta) {
    CHECK_FALSE(t.citation.empty());
    CHECK(t.coefficients.size() >= t.verified_prefix);
    CHECK(t.coefficients.front() == 1);
    CHECK(t.default_max + 1 == t.verified_prefix);
  }
  // Printed A1 data agree among themselves.
  const RatMatrix k = to_rational(g.inverse_a1_times_8) * Rational(1, 8);
  CHECK(to_rational(g.gram_a1) * k == RatMatrix::identity(6));
  for (const auto& v : g.root_expansions_a1) {
    std::vector<BigInt> b(v.begin(), v.end());
    CHECK(gram_norm(g.gram_a1, b) == 6);
  }
  const auto combo = combine_series(g.b_basis, g.b_weights, g.b_length);
  const auto& a1 = g.find_theta("A", 1)->coefficients;
  CHECK(combo == std::vector<BigInt>(a1.begin(), a1.begin() + 24));
  CHECK(g.find_row("E7", 7) == nullptr);
  CHECK(parse_integer_list("1, 0,-2 31") == std::vector<BigInt>{1, 0, -2, 31});
}

TEST_CASE("verify: filtering and tampering") {
  VerifyOptions o;
  o.full = false;
  o.module = ModuleFilter{"A", 1};
  const auto results = run_checks(golden_table(), o);
  CHECK_FALSE(results.empty());
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK(r.name.find("A1") != std::string::npos);
  }

  GoldenTable tampered = golden_table();
  tampered.theta[1].coefficients[7] += 1;  // A1, index 7
  o.criteria = {5};
  const auto bad = run_checks(tampered, o);
  REQUIRE(bad.size() == 1);
  CHECK_FALSE(bad[0].passed);
  CHECK(bad[0].name == "theta A1 first 40");

  const auto summary = summarize(bad);
  REQUIRE(summary.size() == 1);
  CHECK_FALSE(summary[0].passed);
  CHECK(summary[0].first_failure.find("theta A1") != std::string::npos);
}

TEST_CASE("cli: list") {
  const auto r = testing::run_cli("list");
  CHECK(r.status == 0);
  CHECK(r.out.find("A 3 → r_E=10, \U0001D52F=20") != std::string::npos);
  CHECK(r.out.find("E5 5 → r_E=12") != std::string::npos);
  CHECK(testing::run_cli("").out == r.out);
}

TEST_CASE("cli: gram") {
  auto r = testing::run_cli("gram --module A --level 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("det = 4096") != std::string::npos);
  CHECK(r.out.find("6 2 2 -2 -2 -2") != std::string::npos);
  CHECK(testing::run_cli("gram --module D --level 4").status == 2);
  CHECK(testing::run_cli("gram --module Q --level 1").status == 2);
  CHECK(testing::run_cli("gram --module A").status == 2);
  CHECK(testing::run_cli("gram --module A --level 1 --basis B7").status == 2);
  CHECK(testing::run_cli("gram --module A --level 1 --basis B3").status == 2);
  CHECK(testing::run_cli("gram --module A --level 2 --basis B3").status == 0);

  r = testing::run_cli("gram --module A --level 2 --format json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  const RootSystem sys(get_module("A", 2));
  const IntMatrix a = gram_matrix(sys, basis(sys));
  REQUIRE(j["gram"].size() == a.rows());
  IntMatrix back(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) back(i, k) = BigInt(j["gram"][i][k].get<std::string>());
  CHECK(back == a);
  CHECK(BigInt(j["determinant"].get<std::string>()) == determinant(a));
  CHECK(j["modular_level"] == "25");

  r = testing::run_cli("gram --module A --level 1 --format csv");
  CHECK(r.out.rfind("6,2,2,-2,-2,-2\n", 0) == 0);
}

TEST_CASE("cli: theta") {
  auto r = testing::run_cli("theta --module A --level 2 --max-coeff 10");
  CHECK(r.status == 0);
  CHECK(r.out == "1,0,0,100,450,960,2800,6600,12300,22400,30690\n");
  r = testing::run_cli("theta --module E9 --level 9 --max-coeff 4");
  CHECK(r.out == "1,0,756,5760,98928\n");
  CHECK(testing::run_cli("theta --module A --level 1 --max-coeff 0").out == "1\n");
  CHECK(testing::run_cli("theta --module D --level 4 --max-coeff 3").status == 2);

  r = testing::run_cli("theta --module A --level 3 --max-coeff 9");
  CHECK(r.out.find("warning") != std::string::npos);

  r = testing::run_cli("theta --module A --level 3 --max-coeff 7 --format json --threads 2");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  std::vector<BigInt> got;
  for (const auto& s : j["coefficients"]) got.push_back(BigInt(s.get<std::string>()));
  const auto& want = golden_table().find_theta("A", 3)->coefficients;
  CHECK(got == std::vector<BigInt>(want.begin(), want.begin() + 8));

  r = testing::run_cli("theta --module A --level 0 --rescale 3 --max-coeff 4 --format csv");
  CHECK(r.out == "index,coefficient\n0,1\n1,6\n2,0\n3,6\n4,6\n");
}

TEST_CASE("cli: validate-module") {
  auto r = testing::run_cli(std::string("validate-module ") + HYPERLAT_MODULE_DIR + "/E5.mod");
  CHECK(r.status == 0);
  CHECK(r.out.find("det = 1073741824") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);

  auto path = testing::scratch_file("truncated.mod", "name: A\nlevel: 1\nrank: 3\ntriality: 0 2 1\nadjacency:\n0 0 1\n");
  r = testing::run_cli("validate-module " + path.string());
  CHECK(r.status == 2);
  CHECK(r.out.find("line 7") != std::string::npos);

  path = testing::scratch_file("short_triality.mod", "name: A\nlevel: 1\nrank: 3\ntriality: 0 2\nadjacency:\n0 0 1\n1 0 0\n0 1 0\n");
  r = testing::run_cli("validate-module " + path.string());
  CHECK(r.status == 2);
  CHECK(r.out.find("line 4") != std::string::npos);

  path = testing::scratch_file("ungraded.mod", "name: A\nlevel: 1\nrank: 3\ntriality: 0 1 2\nadjacency:\n0 0 1\n1 0 0\n0 1 0\n");
  CHECK(testing::run_cli("validate-module " + path.string()).status == 1);
  CHECK(testing::run_cli("validate-module /nonexistent.mod").status == 2);
}

TEST_CASE("cli: verify") {
  auto r = testing::run_cli("verify --module A --level 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS [2] B1 Gram congruent to printed A1") != std::string::npos);
  CHECK(testing::run_cli("verify --module D --level 4").status == 2);
  CHECK(testing::run_cli("verify --suite slow").status == 2);
}
