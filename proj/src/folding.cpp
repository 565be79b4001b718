#include "hyperlat/folding.hpp"

#include <cstdlib>
#include <sstream>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

long floor_mod(long a, long m) { return ((a % m) + m) % m; }

bool on_wall(long p, long q, long n) {
  return floor_mod(p, n) == 0 || floor_mod(q, n) == 0 || floor_mod(p + q, n) == 0;
}

}  // namespace

FoldResult fold(long p, long q, long altitude) {
  if (altitude < 3) throw DomainError("altitude must be at least 3");
  const long n = altitude;
  if (on_wall(p, q, n)) return {};
  int sign = 1;
  // Each step crosses one wall separating the point from the alcove, so the
  // number of separating walls strictly decreases.
  const long bound = 8 * (std::abs(p) + std::abs(q) + n);
  for (long step = 0; step <= bound; ++step) {
    if (p > 0 && q > 0 && p + q < n) return {sign, Weight{p, q, true}};
    if (p < 0) {
      const long np = -p, nq = p + q;
      p = np, q = nq;
    } else if (q < 0) {
      const long np = p + q, nq = -q;
      p = np, q = nq;
    } else {
      const long np = n - q, nq = n - p;
      p = np, q = nq;
    }
    sign = -sign;
  }
  std::ostringstream os;
  os << "fold did not terminate for (" << p << "," << q << ") with N=" << n;
  throw InternalError(os.str());
}

ExtendedFusion::ExtendedFusion(FusionTable table)
    : table_(std::move(table)), altitude_(table_.level() + 3), period_(3 * altitude_) {
  cells_.resize(static_cast<std::size_t>(period_ * period_));
  for (long p = 0; p < period_; ++p)
    for (long q = 0; q < period_; ++q) {
      const FoldResult r = fold(p, q, altitude_);
      Cell c{static_cast<std::int8_t>(r.sign), nullptr};
      if (r.sign != 0) c.matrix = &table_.at(r.target->p - 1, r.target->q - 1);
      cells_[static_cast<std::size_t>(p * period_ + q)] = c;
    }
}

const ExtendedFusion::Cell& ExtendedFusion::cell(long p, long q) const {
  const long pp = floor_mod(p, period_), qq = floor_mod(q, period_);
  return cells_[static_cast<std::size_t>(pp * period_ + qq)];
}

std::pair<int, const IntMatrix*> ExtendedFusion::lookup(long p, long q) const {
  const Cell& c = cell(p, q);
  return {c.sign, c.matrix};
}

IntMatrix ExtendedFusion::operator()(long p, long q) const {
  const Cell& c = cell(p, q);
  if (c.sign == 0) return IntMatrix(rank(), rank());
  return c.sign > 0 ? *c.matrix : -*c.matrix;
}

BigInt ExtendedFusion::entry(long p, long q, std::size_t a, std::size_t b) const {
  const Cell& c = cell(p, q);
  if (c.sign == 0) return 0;
  return c.sign > 0 ? (*c.matrix)(a, b) : BigInt(-(*c.matrix)(a, b));
}

IntMatrix ExtendedFusion::twist_P() const {
  IntMatrix p = (*this)(altitude_ - 2, 1);
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i) {
    int ones_row = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (p(i, j) != 0 && p(i, j) != 1) throw ValidationError("twist P is not a permutation matrix");
      if (p(i, j) == 1) ++ones_row;
    }
    if (ones_row != 1) throw ValidationError("twist P is not a permutation matrix");
  }
  for (std::size_t j = 0; j < r; ++j) {
    int ones_col = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (p(i, j) == 1) ++ones_col;
    if (ones_col != 1) throw ValidationError("twist P is not a permutation matrix");
  }
  if (!(p * p * p == IntMatrix::identity(r))) throw ValidationError("twist P does not satisfy P^3 = 1");
  return p;
}

}  // namespace hyperlat
