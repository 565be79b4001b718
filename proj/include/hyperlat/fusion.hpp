#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hyperlat/matrix.hpp"
#include "hyperlat/quantum_module.hpp"

namespace hyperlat {

/// SU(3) weight in Dynkin labels. `shifted` records whether the labels are
/// rho-shifted, i.e. {p,q} = (p-1,q-1).
struct Weight {
  long p = 0;
  long q = 0;
  bool shifted = false;

  Weight shift() const { return shifted ? *this : Weight{p + 1, q + 1, true}; }
  Weight unshift() const { return shifted ? Weight{p - 1, q - 1, false} : *this; }

  /// Z3 grading; the rho shift does not change it.
  int triality() const { return static_cast<int>(((p - q) % 3 + 3) % 3); }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline int triality(long p, long q) { return static_cast<int>(((p - q) % 3 + 3) % 3); }

bool in_alcove(const Weight& unshifted, int level);

/// Unshifted alcove weights at `level` in lexicographic (p, q) order.
std::vector<Weight> alcove(int level);

/// Simple objects of (1,0) x w at the given level (Littlewood-Richardson step
/// truncated to the alcove). Throws DomainError if w is outside the alcove.
std::vector<Weight> fundamental_action(const Weight& w, int level);

/// The regular module A_k: vertices are the alcove weights in `alcove(k)`
/// order, edges follow `fundamental_action`, triality is (p - q) mod 3.
QuantumModule builtin_A_generator(int level);

/// Alcove fusion matrices F_(p,q) of a module, keyed by unshifted labels.
class FusionTable {
 public:
  FusionTable(int level, std::size_t rank, std::map<std::pair<long, long>, IntMatrix> entries);

  int level() const { return level_; }
  std::size_t rank() const { return rank_; }

  /// F_(p,q) for unshifted alcove labels.
  const IntMatrix& at(long p, long q) const;
  const std::map<std::pair<long, long>, IntMatrix>& entries() const { return entries_; }

 private:
  int level_;
  std::size_t rank_;
  std::map<std::pair<long, long>, IntMatrix> entries_;
};

/// Runs the SU(3) recursion on the alcove starting from the (1,0) generator.
/// Throws ValidationError if any alcove matrix acquires a negative entry.
FusionTable build_alcove_fusion(const IntMatrix& generator, int level);

}  // namespace hyperlat
