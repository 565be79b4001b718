#pragma once

#include <optional>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

struct LatticeInvariants {
  std::size_t dimension = 0;
  BigInt determinant;
  std::vector<BigInt> elementary_divisors;
  BigInt modular_level;
  bool is_even = false;
  bool is_positive_definite = false;
};

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& a);

/// Leading principal minors d_1, ..., d_n.
std::vector<BigInt> leading_minors(const IntMatrix& a);

/// Invariant factors d_1 | d_2 | ... of a square integer matrix; zeros for a
/// rank-deficient input come last.
std::vector<BigInt> smith_normal_form(const IntMatrix& a);

/// Exact inverse. Throws DomainError if singular.
RatMatrix rational_inverse(const IntMatrix& a);

/// Least l > 0 with l * A^{-1} integral and of even diagonal. A must be even and non-singular.
BigInt modular_level(const IntMatrix& a);

bool is_even(const IntMatrix& a);

/// Symmetric with all leading principal minors positive.
bool is_positive_definite(const IntMatrix& a);

LatticeInvariants lattice_invariants(const IntMatrix& a);

/// Searches for a signed permutation S (as perm[i], sign[i]: column i of S is
/// sign[i] * e_{perm[i]}) with S^T A S = B. Throws DomainError above 24 dimensions.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> sign;
};
std::optional<SignedPermutation> find_signed_permutation(const IntMatrix& a, const IntMatrix& b);
bool congruent_up_to_signed_permutation(const IntMatrix& a, const IntMatrix& b);

}  // namespace hyperlat
