#pragma once

#include <string>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

/// A module over the level-k SU(3) fusion ring, given by the action of the
/// (1,0) generator on its simple objects.
struct QuantumModule {
  std::string name;
  int level = 0;
  IntMatrix adjacency;        // r_E x r_E, entry (a,b) = multiplicity of b in (1,0) x a
  std::vector<int> triality;  // one value in {0,1,2} per vertex

  std::size_t rank() const { return adjacency.rows(); }
  int altitude() const { return level + 3; }
};

}  // namespace hyperlat
