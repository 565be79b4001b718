#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlat/fusion.hpp"

namespace hyperlat {

/// Outcome of reducing a shifted weight into the closed alcove by signed
/// affine reflections.
struct FoldResult {
  int sign = 0;                 // -1, 0 or +1; 0 means the point lies on a wall
  std::optional<Weight> target;  // shifted, 1 <= p, 1 <= q, p + q <= N - 1; set iff sign != 0
};

/// Reflects (p,q) (shifted labels) into the alcove using
///   s1: (p,q) -> (-p, p+q),  s2: (p,q) -> (p+q, -q),  s0: (p,q) -> (N-q, N-p),
/// each flipping the sign. A reflection is only applied across a wall that
/// separates the point from the alcove, with precedence s1, s2, s0.
FoldResult fold(long p, long q, long altitude);

/// Fusion matrices extended to the whole weight lattice:
/// Fhat_{p,q} = sign * F_(p0-1, q0-1) where (sign, {p0,q0}) = fold(p, q).
/// Fold results over one 3N x 3N period are computed at construction, so the
/// object is immutable and safe to share between threads.
class ExtendedFusion {
 public:
  explicit ExtendedFusion(FusionTable table);

  long altitude() const { return altitude_; }
  std::size_t rank() const { return table_.rank(); }
  const FusionTable& table() const { return table_; }

  /// Fhat at shifted labels (p,q); total on Z^2.
  IntMatrix operator()(long p, long q) const;

  /// Sign and alcove matrix of Fhat_{p,q} without copying; matrix is null when sign is 0.
  std::pair<int, const IntMatrix*> lookup(long p, long q) const;

  /// Entry (a,b) of Fhat_{p,q}.
  BigInt entry(long p, long q, std::size_t a, std::size_t b) const;

  /// P = Fhat_{N-2,1}. Throws ValidationError unless P is a permutation matrix with P^3 = 1.
  IntMatrix twist_P() const;

 private:
  struct Cell {
    std::int8_t sign;
    const IntMatrix* matrix;
  };
  const Cell& cell(long p, long q) const;

  FusionTable table_;
  long altitude_;
  long period_;
  std::vector<Cell> cells_;
};

}  // namespace hyperlat
