#include "hyperlat/ribbon.hpp"

#include <sstream>

#include "hyperlat/catalog.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/fusion.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/parallel.hpp"

namespace hyperlat {

namespace {

ExtendedFusion make_fusion(const QuantumModule& m) {
  validate_module(m);
  return ExtendedFusion(build_alcove_fusion(m.adjacency, m.level));
}

bool graded(const QuantumModule& m) {
  for (int t : m.triality)
    if (t != m.triality.front()) return true;
  return false;
}

}  // namespace

BasisChoice parse_basis(const std::string& s) {
  if (s == "B1") return BasisChoice::B1;
  if (s == "B2") return BasisChoice::B2;
  if (s == "B3") return BasisChoice::B3;
  throw DomainError("unknown basis '" + s + "' (expected B1, B2 or B3)");
}

std::string to_string(BasisChoice b) {
  switch (b) {
    case BasisChoice::B1: return "B1";
    case BasisChoice::B2: return "B2";
    case BasisChoice::B3: return "B3";
  }
  return "?";
}

std::vector<std::pair<long, long>> basis_positions(BasisChoice choice, long n) {
  switch (choice) {
    case BasisChoice::B1: return {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}};
    case BasisChoice::B2: return {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}};
    case BasisChoice::B3: return {{0, 0}, {1, 0}, {0, 1}, {n - 1, n - 2}, {n - 2, n - 1}, {n - 1, n - 1}};
  }
  return {};
}

RootSystem::RootSystem(QuantumModule module) : module_(std::move(module)), fusion_(make_fusion(module_)) {}

bool RootSystem::admissible(const RibbonPoint& x) const {
  return (triality(x.p, x.q) + module_.triality.at(x.vertex)) % 3 == 0;
}

long RootSystem::inner_product(const RibbonPoint& alpha, const RibbonPoint& beta) const {
  const long l1 = alpha.p - beta.p, l2 = alpha.q - beta.q;
  const std::size_t a = alpha.vertex, b = beta.vertex;
  long total = 0;
  auto add = [&](long p, long q, int weight) {
    const auto [sign, m] = fusion_.lookup(p, q);
    if (sign != 0) total += weight * sign * (*m)(a, b).get_si();
  };
  add(l1 + 1, l2 + 1, 1);
  add(l1 - 2, l2 + 1, 1);
  add(l1 + 1, l2 - 2, 1);
  add(l1 - 1, l2 - 1, -1);
  add(l1 - 1, l2 + 2, -1);
  add(l1 + 2, l2 - 1, -1);
  return total;
}

std::vector<RibbonPoint> build_ribbon(const RootSystem& sys) {
  if (!graded(sys.module())) throw DomainError("ribbon needs a module with non-trivial triality grading");
  const long n = sys.altitude();
  std::vector<RibbonPoint> out;
  for (long p = 0; p < n; ++p)
    for (long q = 0; q < n; ++q)
      for (std::size_t v = 0; v < sys.rank(); ++v) {
        RibbonPoint x{p, q, v};
        if (sys.admissible(x)) out.push_back(x);
      }
  return out;
}

std::vector<RibbonPoint> basis(const RootSystem& sys, BasisChoice choice) {
  std::vector<RibbonPoint> out;
  for (const auto& [p, q] : basis_positions(choice, sys.altitude()))
    for (std::size_t v = 0; v < sys.rank(); ++v) {
      RibbonPoint x{p, q, v};
      if (sys.admissible(x)) out.push_back(x);
    }
  if (out.size() != sys.lattice_rank()) {
    std::ostringstream os;
    os << "basis " << to_string(choice) << " has " << out.size() << " elements, expected " << sys.lattice_rank();
    throw InternalError(os.str());
  }
  const BigInt det = determinant(gram_matrix(sys, out));
  if (choice == BasisChoice::B1) {
    if (det == 0) throw InternalError("basis B1 has a singular Gram matrix");
    return out;
  }
  // Other position lists must generate the same lattice as B1.
  const BigInt full = determinant(gram_matrix(sys, basis(sys, BasisChoice::B1)));
  if (det != full) {
    std::ostringstream os;
    os << "the " << to_string(choice) << " positions do not give a basis for " << sys.module().name << " at level "
       << sys.module().level;
    if (det == 0)
      os << " (their Gram matrix is singular)";
    else
      os << " (they span a sublattice, Gram determinant " << det << " instead of " << full << ")";
    throw DomainError(os.str());
  }
  return out;
}

IntMatrix gram_matrix(const RootSystem& sys, const std::vector<RibbonPoint>& family) {
  return inner_product_table(sys, family, family);
}

IntMatrix inner_product_table(const RootSystem& sys, const std::vector<RibbonPoint>& points,
                              const std::vector<RibbonPoint>& family, unsigned threads) {
  IntMatrix t(points.size(), family.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < family.size(); ++j) t(i, j) = sys.inner_product(points[i], family[j]);
  });
  return t;
}

BigGram big_gram(const RootSystem& sys, unsigned threads) {
  const auto pts = build_ribbon(sys);
  BigGram g{inner_product_table(sys, pts, pts, threads), 0};
  g.rank = rank(g.matrix);
  if (g.rank != sys.lattice_rank()) {
    std::ostringstream os;
    os << "ribbon Gram matrix has rank " << g.rank << ", expected " << sys.lattice_rank();
    throw InvariantError(os.str());
  }
  return g;
}

RootExpander::RootExpander(const RootSystem& sys, std::vector<RibbonPoint> family)
    : sys_(sys), family_(std::move(family)), gram_(gram_matrix(sys_, family_)) {
  const RatMatrix k = rational_inverse(gram_);
  denominator_ = 1;
  for (const auto& v : k.data()) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), v.get_den_mpz_t());
  adjugate_ = IntMatrix(k.rows(), k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) {
      const Rational v = k(i, j) * denominator_;
      adjugate_(i, j) = v.get_num();
    }
}

std::vector<BigInt> RootExpander::expand(const RibbonPoint& x) const {
  const std::size_t n = family_.size();
  std::vector<long> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = sys_.inner_product(x, family_[j]);
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (t[j]) s += adjugate_(i, j) * t[j];
    if (!mpz_divisible_p(s.get_mpz_t(), denominator_.get_mpz_t())) {
      std::ostringstream os;
      os << "point (" << x.p << "," << x.q << ";" << x.vertex << ") has a non-integral coordinate " << i;
      throw InvariantError(os.str());
    }
    mpz_divexact(out[i].get_mpz_t(), s.get_mpz_t(), denominator_.get_mpz_t());
  }
  return out;
}

std::vector<std::vector<BigInt>> RootExpander::expand_all(const std::vector<RibbonPoint>& xs, unsigned threads) const {
  std::vector<std::vector<BigInt>> out(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t i) { out[i] = expand(xs[i]); });
  return out;
}

BigInt gram_norm(const IntMatrix& gram, const std::vector<BigInt>& c) {
  BigInt s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < c.size(); ++j) row += gram(i, j) * c[j];
    s += c[i] * row;
  }
  return s;
}

bool is_harmonic(const RootSystem& sys, const std::function<long(long, long, std::size_t)>& f) {
  const long period = 3 * sys.altitude();
  const auto& adj = sys.module().adjacency;
  const std::size_t r = sys.rank();
  for (long p = 0; p < period; ++p)
    for (long q = 0; q < period; ++q)
      for (std::size_t b = 0; b < r; ++b) {
        const long weight_side = f(p - 1, q, b) + f(p, q + 1, b) + f(p + 1, q - 1, b);
        long module_side = 0;
        for (std::size_t c = 0; c < r; ++c)
          if (adj(c, b) != 0) module_side += adj(c, b).get_si() * f(p, q, c);
        if (weight_side != module_side) return false;
      }
  return true;
}

bool harmonicity_check(const RootSystem& sys, const RibbonPoint& alpha) {
  return is_harmonic(sys, [&](long p, long q, std::size_t v) { return sys.inner_product(alpha, RibbonPoint{p, q, v}); });
}

}  // namespace hyperlat
