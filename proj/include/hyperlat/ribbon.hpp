#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperlat/folding.hpp"
#include "hyperlat/quantum_module.hpp"

namespace hyperlat {

/// A weight position (shifted labels, any integers) paired with a module vertex.
struct RibbonPoint {
  long p = 0;
  long q = 0;
  std::size_t vertex = 0;

  friend bool operator==(const RibbonPoint&, const RibbonPoint&) = default;
  friend auto operator<=>(const RibbonPoint&, const RibbonPoint&) = default;
};

enum class BasisChoice { B1, B2, B3 };

BasisChoice parse_basis(const std::string& s);
std::string to_string(BasisChoice b);

/// Positions used by each basis choice, in printed order.
std::vector<std::pair<long, long>> basis_positions(BasisChoice choice, long altitude);

/// A validated module together with its extended fusion matrices. Everything
/// downstream of the module datum hangs off this object; it is immutable.
class RootSystem {
 public:
  explicit RootSystem(QuantumModule module);

  const QuantumModule& module() const { return module_; }
  const ExtendedFusion& fusion() const { return fusion_; }
  long altitude() const { return fusion_.altitude(); }
  std::size_t rank() const { return module_.rank(); }
  std::size_t lattice_rank() const { return 2 * module_.rank(); }

  /// Admissible class: triality(p,q) + triality(vertex) = 0 mod 3.
  bool admissible(const RibbonPoint& x) const;

  /// The six-term fusion combination evaluated at (alpha - beta), entry (a, b).
  long inner_product(const RibbonPoint& alpha, const RibbonPoint& beta) const;

 private:
  QuantumModule module_;
  ExtendedFusion fusion_;
};

/// All admissible points over 0 <= p, q < N ordered by (p, q, vertex).
std::vector<RibbonPoint> build_ribbon(const RootSystem& sys);

/// Admissible points over the basis positions, ordered by (position index, vertex).
/// Throws InternalError when B1 is singular, DomainError when another choice
/// does not generate the same lattice as B1.
std::vector<RibbonPoint> basis(const RootSystem& sys, BasisChoice choice = BasisChoice::B1);

IntMatrix gram_matrix(const RootSystem& sys, const std::vector<RibbonPoint>& family);

/// Inner products of every point of `points` against every member of `family`.
IntMatrix inner_product_table(const RootSystem& sys, const std::vector<RibbonPoint>& points,
                              const std::vector<RibbonPoint>& family, unsigned threads = 1);

struct BigGram {
  IntMatrix matrix;
  std::size_t rank;
};

/// Gram matrix of the whole ribbon. Throws InvariantError if its rank is not 2 r_E.
BigGram big_gram(const RootSystem& sys, unsigned threads = 1);

/// Expands ribbon points in a basis by solving against its Gram matrix.
class RootExpander {
 public:
  RootExpander(const RootSystem& sys, std::vector<RibbonPoint> family);

  const std::vector<RibbonPoint>& family() const { return family_; }
  const IntMatrix& gram() const { return gram_; }

  /// Integer coordinates of `x`; throws InvariantError if any is not integral.
  std::vector<BigInt> expand(const RibbonPoint& x) const;

  /// Expansions of many points, computed in parallel.
  std::vector<std::vector<BigInt>> expand_all(const std::vector<RibbonPoint>& xs, unsigned threads = 1) const;

 private:
  const RootSystem& sys_;
  std::vector<RibbonPoint> family_;
  IntMatrix gram_;
  IntMatrix adjugate_;  // gram^{-1} = adjugate_ / denominator_
  BigInt denominator_;
};

/// Quadratic form value coords^T A coords.
BigInt gram_norm(const IntMatrix& gram, const std::vector<BigInt>& coords);

/// Predecessor sums over the weight lattice agree with predecessor sums over
/// the module graph at every (position, vertex) of one period.
bool is_harmonic(const RootSystem& sys, const std::function<long(long, long, std::size_t)>& f);

/// Harmonicity of x -> inner_product(alpha, x).
bool harmonicity_check(const RootSystem& sys, const RibbonPoint& alpha);

}  // namespace hyperlat
