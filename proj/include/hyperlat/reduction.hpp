#pragma once

#include <cstdint>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

/// A change of basis for a positive definite Gram matrix. Row i of
/// `transform` is the i-th new basis vector in old coordinates, so
/// gram = transform * A * transform^T and x_old = transform^T * x_new.
struct ReducedGram {
  IntMatrix gram;
  IntMatrix transform;
};

struct ReductionOptions {
  double delta = 0.99;
  int block_size = 20;  // <= 2 means plain LLL
  int max_tours = 12;
};

/// LLL followed by BKZ tours, run in floating point on a 64-bit integer copy
/// of the form. The result is re-derived exactly: the transform is checked
/// to be unimodular and the reduced Gram matrix recomputed in exact
/// arithmetic. If the floating-point pass misbehaves the identity is
/// returned, which is always correct.
ReducedGram reduce_gram(const IntMatrix& a, const ReductionOptions& options = {});

/// Gram-Schmidt squared lengths B_i of a Gram matrix, in floating point.
std::vector<double> gso_profile(const IntMatrix& a);

}  // namespace hyperlat
