#include "hyperlat/fusion.hpp"

#include <sstream>

#include "hyperlat/errors.hpp"

namespace hyperlat {

bool in_alcove(const Weight& w, int level) {
  const Weight u = w.unshift();
  return u.p >= 0 && u.q >= 0 && u.p + u.q <= level;
}

std::vector<Weight> alcove(int level) {
  std::vector<Weight> out;
  for (long p = 0; p <= level; ++p)
    for (long q = 0; p + q <= level; ++q) out.push_back(Weight{p, q, false});
  return out;
}

std::vector<Weight> fundamental_action(const Weight& w, int level) {
  const Weight u = w.unshift();
  if (!in_alcove(u, level)) {
    std::ostringstream os;
    os << "weight (" << u.p << "," << u.q << ") is outside the level-" << level << " alcove";
    throw DomainError(os.str());
  }
  std::vector<Weight> out;
  for (const Weight& c : {Weight{u.p + 1, u.q}, Weight{u.p - 1, u.q + 1}, Weight{u.p, u.q - 1}})
    if (in_alcove(c, level)) out.push_back(c);
  return out;
}

QuantumModule builtin_A_generator(int level) {
  if (level < 0) throw DomainError("level must be non-negative");
  const auto weights = alcove(level);
  const std::size_t r = weights.size();
  QuantumModule m;
  m.name = "A";
  m.level = level;
  m.adjacency = IntMatrix(r, r);
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < r; ++i) index[weights[i]] = i;
  for (std::size_t i = 0; i < r; ++i) {
    for (const Weight& w : fundamental_action(weights[i], level)) m.adjacency(i, index.at(w)) = 1;
    m.triality.push_back(weights[i].triality());
  }
  return m;
}

FusionTable::FusionTable(int level, std::size_t rank, std::map<std::pair<long, long>, IntMatrix> entries)
    : level_(level), rank_(rank), entries_(std::move(entries)) {}

const IntMatrix& FusionTable::at(long p, long q) const {
  auto it = entries_.find({p, q});
  if (it == entries_.end()) {
    std::ostringstream os;
    os << "no fusion matrix for (" << p << "," << q << ") at level " << level_;
    throw DomainError(os.str());
  }
  return it->second;
}

FusionTable build_alcove_fusion(const IntMatrix& generator, int level) {
  if (!generator.square()) throw DomainError("fusion generator must be square");
  if (level < 0) throw DomainError("level must be non-negative");
  const std::size_t r = generator.rows();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (generator(i, j) < 0) throw ValidationError("fusion generator has a negative entry");

  std::map<std::pair<long, long>, IntMatrix> f;
  const IntMatrix zero(r, r);
  // Labels with a -1 component sit on a shifted wall and contribute nothing.
  auto get = [&](long p, long q) -> const IntMatrix& {
    if (p < 0 || q < 0) return zero;
    return f.at({p, q});
  };

  f.emplace(std::make_pair(0L, 0L), IntMatrix::identity(r));
  if (level >= 1) {
    f.emplace(std::make_pair(1L, 0L), generator);
    f.emplace(std::make_pair(0L, 1L), generator.transpose());
  }
  for (long n = 2; n <= level; ++n) {
    for (long q = 0; q <= n; ++q) {
      const long p = n - q;
      IntMatrix m;
      if (p == 0)
        m = f.at({q, 0}).transpose();
      else if (q == 0)
        m = generator * get(p - 1, 0) - get(p - 2, 1);
      else
        m = generator * get(p - 1, q) - get(p - 1, q - 1) - get(p - 2, q + 1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (m(i, j) < 0) {
            std::ostringstream os;
            os << "fusion matrix F_(" << p << "," << q << ") has a negative entry at (" << i << ","
               << j << "); generator and level are incompatible";
            throw ValidationError(os.str());
          }
      f.emplace(std::make_pair(p, q), std::move(m));
    }
  }
  return FusionTable(level, r, std::move(f));
}

}  // namespace hyperlat
