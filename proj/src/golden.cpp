#include "hyperlat/golden.hpp"

#include <sstream>
#include <utility>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

IntMatrix rows_to_matrix(const std::vector<std::string>& rows) {
  std::vector<std::vector<BigInt>> parsed;
  for (const auto& r : rows) parsed.push_back(parse_integer_list(r));
  IntMatrix m(parsed.size(), parsed.empty() ? 0 : parsed.front().size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (parsed[i].size() != m.cols()) throw InternalError("ragged golden matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parsed[i][j];
  }
  return m;
}

std::vector<BigInt> sparse_series(std::size_t length, const std::vector<std::pair<std::size_t, long>>& terms) {
  std::vector<BigInt> out(length, 0);
  for (const auto& [i, c] : terms) out.at(i) = c;
  return out;
}

BigInt power(long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

GoldenRow row(std::string name, int level, std::size_t r_e, std::size_t roots, long kiss_norm, std::size_t kiss,
              BigInt det, long ell, long phi) {
  GoldenRow g;
  g.citation = "lattice summary table, " + name + (name == "A" || name == "D" ? std::to_string(level) : "") + " row";
  g.name = std::move(name);
  g.level = level;
  g.module_rank = r_e;
  g.lattice_rank = 2 * r_e;
  g.root_count = roots;
  g.kissing_norm = kiss_norm;
  g.kissing_count = kiss;
  g.determinant = std::move(det);
  g.modular_level = ell;
  g.euler_phi = phi;
  return g;
}

GoldenTheta theta(std::string name, int level, const std::string& list, std::size_t prefix, long rescale = 1) {
  GoldenTheta t;
  t.citation = "theta coefficient list, " + name + std::to_string(level);
  if (name == "E5" || name == "E9" || name == "E21") t.citation = "theta coefficient list, " + name;
  if (rescale != 1) t.citation += " (rescaled)";
  t.name = std::move(name);
  t.level = level;
  t.coefficients = parse_integer_list(list);
  t.verified_prefix = prefix;
  t.default_max = prefix - 1;
  t.rescale = rescale;
  return t;
}

GoldenTable build() {
  GoldenTable g;

  g.rows = {
      row("A", 1, 3, 32, 6, 32, power(4, 6), 16, 8),
      row("A", 2, 6, 100, 6, 100, power(5, 9), 25, 20),
      row("A", 3, 10, 240, 6, 240, power(6, 12), 18, 6),
      row("A", 4, 15, 490, 6, 490, power(7, 15), 49, 42),
      row("D", 3, 6, 144, 4, 36, power(3, 12), 9, 6),
      row("D", 6, 12, 648, 4, 162, power(3, 18), 27, 18),
      row("E5", 5, 12, 512, 6, 512, power(2, 30), 16, 8),
      row("E9", 9, 12, 1152, 4, 756, power(2, 24), 16, 8),
      row("E21", 21, 24, 9216, 4, 144, power(3, 12), 3, 2),
  };

  g.theta = {
      theta("A", 0,
            "1, 6, 0, 6, 6, 0, 0, 12, 0, 6, 0, 0, 6, 12, 0, 0, 6, 0, 0, 12, 0, 12, 0, 0, 0, 6, 0, 6, 12, 0, 0, 12, "
            "0, 0, 0, 0, 6, 12, 0, 12, 0, 0, 0, 12, 0, 0, 0, 0, 6, 18, 0, 0, 12, 0, 0, 0, 0, 12, 0, 0, 0, 12, 0, "
            "12, 6, 0, 0, 12, 0, 0, 0, 0, 0, 12, 0, 6, 12, 0, 0, 12, 0",
            40, 3),
      theta("A", 1,
            "1, 0, 0, 32, 60, 0, 0, 192, 252, 0, 0, 480, 544, 0, 0, 832, 1020, 0, 0, 1440, 1560, 0, 0, 2112, 2080, "
            "0, 0, 2624, 3264, 0, 0, 3840, 4092, 0, 0, 4992, 4380, 0, 0, 5440, 6552, 0, 0, 7392, 8160, 0, 0, 8832, "
            "8224",
            40),
      theta("A", 2,
            "1, 0, 0, 100, 450, 960, 2800, 6600, 12300, 22400, 30690, 63000, 93150, 144000, 203100, 236080, "
            "392850, 550800, 708350, 961800, 972780, 1581600, 1937250, 2495400, 2977400, 3063360, 4469400, "
            "5547700, 6477600, 7963200, 7344920, 11094000, 12627000, 15127200, 17091900, 16459440, 22670850, "
            "26899200",
            20),
      theta("A", 3,
            "1, 0, 0, 240, 1782, 9072, 59328, 216432, 810000, 2059152, 6080832, 12349584, 31045596, 57036960, "
            "122715648, 204193872, 418822650, 622067040, 1193611392, 1734272208, 3043596384, 4217152080, "
            "7354100160, 9446435136, 15901091892, 20507712192, 32268036096, 40493364288, 64454759856, "
            "76079125584, 118436670720, 142127536464",
            8),
      theta("A", 4,
            "1, 0, 0, 490, 4998, 45864, 464422, 3429426, 21668094, 111678742, 492567012, 1876801038, "
            "6352945942, 19484903508, 54935857326, 144330551050",
            6),
      theta("A", 5, "1, 0, 0, 896, 11856, 154368, 2331648, 27065088, 281311128", 4),
      theta("A", 6, "1, 0, 0, 1512, 24300, 425736, 8530758", 4),
      theta("D", 3, "1, 0, 36, 144, 486, 2880, 5724, 7776, 31068, 40320, 47628", 10),
      theta("D", 6,
            "1, 0, 162, 2322, 35478, 273942, 1771326, 9680148, 40813632, 150043014, 484705782", 6),
      theta("E5", 5,
            "1, 0, 0, 512, 11232, 145920, 1055616, 5618688, 25330128, 89127936, 295067136, 810542592, "
            "2185379968, 5109275136",
            6),
      theta("E9", 9,
            "1, 0, 756, 5760, 98928, 1092096, 8435760, 45142272, 202712400, 715373568, 2350118808, "
            "6501914496, 17469036096",
            5),
      theta("E21", 21, "1, 0, 144, 64512, 54181224", 4),
  };

  g.ribbon_sizes = {16, 50, 120, 245};

  g.gram_a1 = rows_to_matrix({
      "6 2 2 -2 -2 -2",
      "2 6 2 2 -2 2",
      "2 2 6 2 2 -2",
      "-2 2 2 6 2 2",
      "-2 -2 2 2 6 -2",
      "-2 2 -2 2 -2 6",
  });
  g.inverse_a1_times_8 = rows_to_matrix({
      "3 -1 -1 1 1 1",
      "-1 3 -1 -1 1 -1",
      "-1 -1 3 -1 -1 1",
      "1 -1 -1 3 -1 -1",
      "1 1 -1 -1 3 1",
      "1 -1 1 -1 1 3",
  });
  g.gram_a2 = rows_to_matrix({
      "6 0 2 0 2 0 -2 1 -2 2 -2 2",
      "0 6 2 2 2 2 1 -1 0 -2 0 -2",
      "2 2 6 0 2 2 2 2 -1 1 2 2",
      "0 2 0 6 2 0 0 2 1 -2 2 0",
      "2 2 2 2 6 0 2 2 2 2 -1 1",
      "0 2 2 0 0 6 0 2 2 0 1 -2",
      "-2 1 2 0 2 0 6 0 2 0 2 0",
      "1 -1 2 2 2 2 0 6 2 2 2 2",
      "-2 0 -1 1 2 2 2 2 6 0 0 -2",
      "2 -2 1 -2 2 0 0 2 0 6 -2 2",
      "-2 0 2 2 -1 1 2 2 0 -2 6 0",
      "2 -2 2 0 1 -2 0 2 -2 2 0 6",
  });
  g.gram_a3 = rows_to_matrix({
      "6 0 0 0 2 0 0 2 0 0 -2 1 0 0 -2 2 0 -2 2 0",
      "0 6 0 0 2 2 2 2 2 2 1 0 1 1 0 0 0 0 0 0",
      "0 0 6 0 0 0 2 0 2 0 0 1 -2 0 2 0 -2 0 -2 2",
      "0 0 0 6 0 2 0 0 0 2 0 1 0 -2 0 -2 2 2 0 -2",
      "2 2 0 0 6 0 0 2 2 0 2 2 0 0 -1 1 1 2 2 0",
      "0 2 0 2 0 6 0 2 0 2 0 2 0 2 1 -1 1 2 0 2",
      "0 2 2 0 0 0 6 0 2 2 0 2 2 0 1 1 -1 0 2 2",
      "2 2 0 0 2 2 0 6 0 0 2 2 0 0 2 2 0 -1 1 1",
      "0 2 2 0 2 0 2 0 6 0 0 2 2 0 2 0 2 1 -1 1",
      "0 2 0 2 0 2 2 0 0 6 0 2 0 2 0 2 2 1 1 -1",
      "-2 1 0 0 2 0 0 2 0 0 6 0 0 0 2 0 0 2 0 0",
      "1 0 1 1 2 2 2 2 2 2 0 6 0 0 2 2 2 2 2 2",
      "0 1 -2 0 0 0 2 0 2 0 0 0 6 0 0 0 2 0 2 0",
      "0 1 0 -2 0 2 0 0 0 2 0 0 0 6 0 2 0 0 0 2",
      "-2 0 2 0 -1 1 1 2 2 0 2 2 0 0 6 0 0 0 -2 2",
      "2 0 0 -2 1 -1 1 2 0 2 0 2 0 2 0 6 0 -2 2 0",
      "0 0 -2 2 1 1 -1 0 2 2 0 2 2 0 0 0 6 2 0 -2",
      "-2 0 0 2 2 2 0 -1 1 1 2 2 0 0 0 -2 2 6 0 0",
      "2 0 -2 0 2 0 2 1 -1 1 0 2 2 0 -2 2 0 0 6 0",
      "0 0 2 -2 0 2 2 1 1 -1 0 2 0 2 2 0 -2 0 0 6",
  });

  g.root_expansions_a1 = {
      {1, -1, 0, 0, 0, 1},  {0, -1, 1, 0, -1, 0}, {-1, 0, 1, -1, 0, 0}, {0, 0, 0, -1, 1, 1},
      {0, 0, 0, 0, 0, 1},   {0, -1, 0, 1, -1, 0}, {-1, 0, 0, 0, -1, -1}, {-1, 1, 0, -1, 0, 0},
      {0, 1, 0, 0, 0, 0},   {0, 0, 0, 1, 0, 0},   {0, 0, -1, 1, 0, -1}, {0, 1, -1, 0, 0, -1},
      {1, 0, 0, 0, 0, 0},   {0, 0, 1, 0, 0, 0},   {0, 0, 0, 0, 1, 0},   {1, 0, -1, 0, 1, 0},
  };

  g.snf_a1 = {2, 4, 4, 4, 4, 8};
  g.rescaled_group_a1 = {2, 2, 2, 2, 4};
  g.rescaled_order_a1 = 64;

  const std::size_t n = g.b_length;
  g.b_basis = {
      sparse_series(n, {{0, 1}, {8, 12}, {12, 64}, {16, 60}}),
      sparse_series(n, {{1, 1}, {9, 21}, {13, 40}, {17, 30}, {21, 72}}),
      sparse_series(n, {{2, 1}, {10, 26}, {18, 73}}),
      sparse_series(n, {{3, 1}, {7, 6}, {11, 15}, {15, 26}, {19, 45}, {23, 66}}),
      sparse_series(n, {{4, 1}, {8, 4}, {12, 8}, {16, 16}, {20, 26}}),
      sparse_series(n, {{5, 1}, {9, 2}, {13, 5}, {17, 10}, {21, 12}}),
      sparse_series(n, {{6, 1}, {14, 6}, {22, 15}}),
  };
  g.b_weights = {1, 0, 0, 32, 60, 0, 0};

  g.citations = {
      "lattice summary table (r_E, rank, |R|, kiss, determinant, level, Euler phi)",
      "theta coefficient lists in the variable q^2",
      "A1 Gram matrix and its inverse with the B1 basis",
      "A1 positive higher roots expanded on B1",
      "A1 dual quotient Z2 x (Z4)^4 x Z8; rescaled (Z2)^4 x Z4 of order 64",
      "A1 modular form basis b1..b7 through q2^23 and theta = b1 + 32 b4 + 60 b5",
      "A1 theta as half the sum of sixth powers of Jacobi theta functions at q^4",
      "A1 character: Kronecker -4; A2 character: Kronecker 5",
      "A2 Gram matrix (GramA2) and A3 Gram matrix (GramA3)",
  };
  return g;
}

}  // namespace

std::vector<BigInt> parse_integer_list(const std::string& text) {
  std::vector<BigInt> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    BigInt v;
    if (v.set_str(token, 10) != 0) throw DomainError("not an integer: '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

const GoldenRow* GoldenTable::find_row(const std::string& name, int level) const {
  for (const auto& r : rows)
    if (r.name == name && r.level == level) return &r;
  return nullptr;
}

const GoldenTheta* GoldenTable::find_theta(const std::string& name, int level) const {
  for (const auto& t : theta)
    if (t.name == name && t.level == level) return &t;
  return nullptr;
}

const GoldenTable& golden_table() {
  static const GoldenTable table = build();
  return table;
}

}  // namespace hyperlat
