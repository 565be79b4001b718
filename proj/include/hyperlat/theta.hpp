#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

/// c_m = #{x : x^T A x = 2m} for m = 0..M (coefficients of q^2 powers).
struct ThetaSeries {
  std::vector<BigInt> coefficients;
  std::size_t max_index() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

struct EnumerationOptions {
  unsigned threads = 1;
  bool reduce = true;  // LLL/BKZ pre-reduction of the form (exactly verified)
  int block_size = 20;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::size_t tasks = 0;
};

/// Throws DomainError unless A is even, symmetric and positive definite.
ThetaSeries theta_coefficients(const IntMatrix& a, std::size_t max_index, const EnumerationOptions& options,
                               EnumerationStats* stats = nullptr);
ThetaSeries theta_coefficients(const IntMatrix& a, std::size_t max_index, unsigned threads = 1);

struct KissingTerm {
  long norm = 0;
  BigInt count;
};

/// First non-empty shell above zero.
KissingTerm kissing_term(const IntMatrix& a, unsigned threads = 1);

/// One representative of each +-pair of vectors with x^T A x = norm, in the
/// coordinates of A, sorted lexicographically.
std::vector<std::vector<long>> shell_vectors(const IntMatrix& a, long norm, unsigned threads = 1);

struct ShellReport {
  long norm = 0;
  std::uint64_t vectors = 0;  // counted with sign
  std::uint64_t roots = 0;    // how many of them are +-higher roots
};

struct ShellClassification {
  std::vector<ShellReport> shells;  // non-empty shells with 0 < norm <= max_norm
  std::uint64_t root_count = 0;     // |R| = 2 |positive roots|
  std::uint64_t roots_outside_shells = 0;
};

/// Compares the shells up to `max_norm` with the +- expansions of the higher roots.
ShellClassification classify_shells(const IntMatrix& a, const std::vector<std::vector<BigInt>>& positive_roots,
                                    long max_norm = 6, unsigned threads = 1);

/// (theta_2^6 + theta_3^6 + theta_4^6) / 2 at nome q^4, coefficients of q^{2m}, m = 0..M.
std::vector<BigInt> jacobi_theta_series(std::size_t max_index);

/// sum_i weights[i] * series[i], truncated to `length` terms.
std::vector<BigInt> combine_series(const std::vector<std::vector<BigInt>>& series, const std::vector<BigInt>& weights,
                                   std::size_t length);

}  // namespace hyperlat
