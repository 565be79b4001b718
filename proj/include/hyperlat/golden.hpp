#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

/// One row of the lattice summary table.
struct GoldenRow {
  std::string name;  // A, D, E5, E9, E21
  int level = 0;
  std::size_t module_rank = 0;   // r_E
  std::size_t lattice_rank = 0;  // 2 r_E
  std::size_t root_count = 0;    // |R|, roots counted with both signs
  long kissing_norm = 0;
  std::size_t kissing_count = 0;
  BigInt determinant;
  long modular_level = 0;
  long euler_phi = 0;
  std::string citation;
};

/// A printed theta coefficient list (q^2 convention). Only the first
/// `verified_prefix` entries are part of the acceptance checks.
struct GoldenTheta {
  std::string name;
  int level = 0;
  std::vector<BigInt> coefficients;
  std::size_t verified_prefix = 0;
  std::size_t default_max = 0;  // default --max-coeff for the CLI
  long rescale = 1;             // the Gram matrix is divided by this first
  std::string citation;
};

struct GoldenTable {
  std::vector<GoldenRow> rows;
  std::vector<GoldenTheta> theta;

  // Number of positive higher roots for A1..A4.
  std::vector<std::size_t> ribbon_sizes;

  IntMatrix gram_a1, gram_a2, gram_a3;
  IntMatrix inverse_a1_times_8;
  std::vector<std::vector<long>> root_expansions_a1;  // 16 coordinate vectors on B1

  std::vector<BigInt> snf_a1;
  std::vector<BigInt> rescaled_group_a1;  // non-trivial cyclic factors of the rescaled dual quotient
  BigInt rescaled_order_a1;

  std::vector<std::vector<BigInt>> b_basis;  // b_1..b_7, indices 0..23
  std::vector<BigInt> b_weights;             // coordinates of the A1 theta series
  std::size_t b_length = 24;
  std::size_t jacobi_length = 41;

  long kronecker_a1 = -4;
  long kronecker_a2 = 5;

  std::vector<std::string> citations;

  const GoldenRow* find_row(const std::string& name, int level) const;
  const GoldenTheta* find_theta(const std::string& name, int level) const;
};

/// The published data. Read-only; copy it to experiment with altered values.
const GoldenTable& golden_table();

/// Parses "1, 0, 0, 32" into integers.
std::vector<BigInt> parse_integer_list(const std::string& text);

}  // namespace hyperlat
