#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace testing {

using hyperlat::BigInt;
using hyperlat::IntMatrix;

struct CommandResult {
  int status = -1;
  std::string out;
};

inline CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HYPERLAT_CLI) + " " + args + " 2>&1";
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

inline std::filesystem::path scratch_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "hyperlat_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

// Leibniz expansion; only for small matrices.
inline BigInt leibniz_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline IntMatrix minor_matrix(const IntMatrix& a, std::size_t skip_row, std::size_t skip_col) {
  IntMatrix m(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, r = 0; i < a.rows(); ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < a.cols(); ++j) {
      if (j == skip_col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

// Counts x in the box |x_i| <= sqrt(2M (A^-1)_ii) by norm; the inverse
// diagonal comes from cofactors.
inline std::vector<BigInt> naive_theta(const IntMatrix& a, std::size_t max_index) {
  const std::size_t n = a.rows();
  const BigInt det = leibniz_det(a);
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt cof = n == 1 ? BigInt(1) : leibniz_det(minor_matrix(a, i, i));
    const BigInt lim = (2 * static_cast<long>(max_index) * cof) / det;
    long b = 0;
    while (BigInt((b + 1) * (b + 1)) <= lim) ++b;
    bound[i] = b;
  }
  std::vector<BigInt> counts(max_index + 1, 0);
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  for (;;) {
    BigInt norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += a(i, j) * x[i] * x[j];
    if (norm <= 2 * static_cast<long>(max_index)) counts[norm.get_ui() / 2] += 1;
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) x[i] = -bound[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return counts;
}

inline IntMatrix from_rows(const std::vector<std::vector<long>>& rows) { return hyperlat::to_int_matrix(rows); }

}  // namespace testing
