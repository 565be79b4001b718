#include "hyperlat/reduction.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

namespace {

using i64 = std::int64_t;
using real = long double;

struct Failure {};

class Reducer {
 public:
  Reducer(const IntMatrix& a, const ReductionOptions& opt)
      : n_(a.rows()), opt_(opt), g_(n_ * n_), t_(n_ * n_, 0), mu_(n_ * n_, 0), b_(n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      t_[i * n_ + i] = 1;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!a(i, j).fits_slong_p()) throw Failure{};
        g_[i * n_ + j] = a(i, j).get_si();
      }
    }
  }

  void run() {
    if (n_ < 2) return;
    lll(1);
    if (opt_.block_size > 2) bkz();
  }

  IntMatrix transform() const {
    IntMatrix t(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(i, j) = static_cast<long>(t_[i * n_ + j]);
    return t;
  }

 private:
  i64& g(std::size_t i, std::size_t j) { return g_[i * n_ + j]; }
  real& mu(std::size_t i, std::size_t j) { return mu_[i * n_ + j]; }

  static void guard(i64 v) {
    if (v > (i64{1} << 40) || v < -(i64{1} << 40)) throw Failure{};
  }

  void compute_row(std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      real s = static_cast<real>(g(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * b_[k];
      mu(i, j) = s / b_[j];
    }
    real s = static_cast<real>(g(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * b_[k];
    if (!(s > 0)) throw Failure{};
    b_[i] = s;
  }

  void compute_all() {
    for (std::size_t i = 0; i < n_; ++i) compute_row(i);
  }

  // b_k -= r * b_j
  void sub(std::size_t k, std::size_t j, i64 r) {
    for (std::size_t c = 0; c < n_; ++c) {
      t_[k * n_ + c] -= r * t_[j * n_ + c];
      guard(t_[k * n_ + c]);
    }
    const i64 gkk = g(k, k) - 2 * r * g(k, j) + r * r * g(j, j);
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == k) continue;
      g(k, c) -= r * g(j, c);
      g(c, k) = g(k, c);
    }
    g(k, k) = gkk;
    guard(gkk);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n_; ++c) std::swap(t_[i * n_ + c], t_[j * n_ + c]);
    for (std::size_t c = 0; c < n_; ++c) std::swap(g(i, c), g(j, c));
    for (std::size_t c = 0; c < n_; ++c) std::swap(g(c, i), g(c, j));
  }

  // (b_i, b_j) <- (p b_i + q b_j, r b_i + s b_j) with ps - qr = 1.
  void combine(std::size_t i, std::size_t j, i64 p, i64 q, i64 r, i64 s) {
    for (std::size_t c = 0; c < n_; ++c) {
      const i64 ti = t_[i * n_ + c], tj = t_[j * n_ + c];
      t_[i * n_ + c] = p * ti + q * tj;
      t_[j * n_ + c] = r * ti + s * tj;
      guard(t_[i * n_ + c]);
      guard(t_[j * n_ + c]);
    }
    const i64 gii = g(i, i), gjj = g(j, j), gij = g(i, j);
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == i || c == j) continue;
      const i64 ci = g(c, i), cj = g(c, j);
      g(c, i) = g(i, c) = p * ci + q * cj;
      g(c, j) = g(j, c) = r * ci + s * cj;
    }
    g(i, i) = p * p * gii + 2 * p * q * gij + q * q * gjj;
    g(j, j) = r * r * gii + 2 * r * s * gij + s * s * gjj;
    g(i, j) = g(j, i) = p * r * gii + (p * s + q * r) * gij + q * s * gjj;
    guard(g(i, i));
    guard(g(j, j));
  }

  void lll(std::size_t start) {
    for (std::size_t i = 0; i < start && i < n_; ++i) compute_row(i);
    std::size_t k = std::max<std::size_t>(start, 1);
    long iterations = 0;
    while (k < n_) {
      if (++iterations > 2000000) throw Failure{};
      compute_row(k);
      for (std::size_t jj = k; jj-- > 0;) {
        const real m = mu(k, jj);
        if (std::fabs(m) <= 0.51L) continue;
        const i64 r = std::llround(m);
        sub(k, jj, r);
        for (std::size_t c = 0; c < jj; ++c) mu(k, c) -= static_cast<real>(r) * mu(jj, c);
        mu(k, jj) -= static_cast<real>(r);
      }
      compute_row(k);
      const real m = mu(k, k - 1);
      if (b_[k] >= (static_cast<real>(opt_.delta) - m * m) * b_[k - 1]) {
        ++k;
      } else {
        swap_rows(k, k - 1);
        compute_row(k - 1);
        k = std::max<std::size_t>(k - 1, 1);
      }
    }
  }

  // Shortest non-zero vector of the projected block [k, h) if shorter than `bound`.
  bool block_svp(std::size_t k, std::size_t h, real bound, std::vector<i64>& best) {
    svp_k_ = k;
    svp_x_.assign(h - k, 0);
    svp_radius_ = bound;
    svp_nodes_ = 0;
    svp_found_ = false;
    svp_best_ = &best;
    svp_level(h - k - 1, 0, true);
    return svp_found_;
  }

  void svp_level(std::size_t level, real partial, bool above_zero) {
    const std::size_t d = svp_x_.size();
    real c = 0;
    for (std::size_t j = level + 1; j < d; ++j) c -= mu(svp_k_ + j, svp_k_ + level) * static_cast<real>(svp_x_[j]);
    const real bl = b_[svp_k_ + level];
    auto visit = [&](i64 v) {
      if (++svp_nodes_ > 4000000) return false;
      const real diff = static_cast<real>(v) - c;
      const real len = partial + diff * diff * bl;
      if (len >= svp_radius_) return false;
      svp_x_[level] = v;
      if (level == 0) {
        if (!(above_zero && v == 0)) {
          svp_radius_ = len;
          *svp_best_ = svp_x_;
          svp_found_ = true;
        }
      } else {
        svp_level(level - 1, len, above_zero && v == 0);
      }
      return true;
    };
    if (above_zero) {
      // x and -x have the same length: the first non-zero coefficient from the top is positive.
      for (i64 v = 0; visit(v); ++v) {
      }
    } else {
      const i64 v0 = std::llround(c);
      const bool up_first = static_cast<real>(v0) <= c;
      bool up = true, down = true;
      if (!visit(v0)) up = down = false;
      for (i64 t = 1; up || down; ++t) {
        if (up_first) {
          if (up) up = visit(v0 + t);
          if (down) down = visit(v0 - t);
        } else {
          if (down) down = visit(v0 - t);
          if (up) up = visit(v0 + t);
        }
      }
    }
    svp_x_[level] = 0;
  }

  bool insert(std::size_t k, const std::vector<i64>& coeff) {
    std::vector<i64> x = coeff;
    const std::size_t d = x.size();
    i64 content = 0;
    for (i64 v : x) content = std::gcd(content, v);
    if (content != 1) return false;
    for (std::size_t i = d - 1; i > 0; --i) {
      if (x[i] == 0) continue;
      // extended gcd: u x[i-1] + v x[i] = g
      i64 a = x[i - 1], b = x[i];
      i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        const i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
      }
      i64 gcd = old_r, u = old_s, v = old_t;
      if (gcd < 0) gcd = -gcd, u = -u, v = -v;
      // new b_{i-1} = (a/g) b_{i-1} + (b/g) b_i ; new b_i = -v b_{i-1} + u b_i
      combine(k + i - 1, k + i, a / gcd, b / gcd, -v, u);
      x[i - 1] = gcd;
      x[i] = 0;
    }
    if (x[0] != 1 && x[0] != -1) throw Failure{};
    return true;
  }

  void bkz() {
    for (int tour = 0; tour < opt_.max_tours; ++tour) {
      bool changed = false;
      for (std::size_t k = 0; k + 1 < n_; ++k) {
        const std::size_t h = std::min(n_, k + static_cast<std::size_t>(opt_.block_size));
        compute_all();
        std::vector<i64> best;
        if (block_svp(k, h, static_cast<real>(opt_.delta) * b_[k], best) && insert(k, best)) {
          lll(std::max<std::size_t>(k, 1));
          changed = true;
        }
      }
      if (!changed) break;
    }
  }

  std::size_t n_;
  ReductionOptions opt_;
  std::vector<i64> g_, t_;
  std::vector<real> mu_, b_;
  std::size_t svp_k_ = 0;
  std::vector<i64> svp_x_;
  real svp_radius_ = 0;
  long svp_nodes_ = 0;
  bool svp_found_ = false;
  std::vector<i64>* svp_best_ = nullptr;
};

}  // namespace

std::vector<double> gso_profile(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> mu(n * n, 0), b(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double s = a(i, j).get_d();
      for (std::size_t k = 0; k < j; ++k) s -= mu[j * n + k] * mu[i * n + k] * b[k];
      mu[i * n + j] = s / b[j];
    }
    double s = a(i, i).get_d();
    for (std::size_t k = 0; k < i; ++k) s -= mu[i * n + k] * mu[i * n + k] * b[k];
    b[i] = s;
  }
  return b;
}

ReducedGram reduce_gram(const IntMatrix& a, const ReductionOptions& options) {
  ReducedGram identity{a, IntMatrix::identity(a.rows())};
  IntMatrix t;
  try {
    Reducer r(a, options);
    r.run();
    t = r.transform();
  } catch (const Failure&) {
    return identity;
  }
  const BigInt det = determinant(t);
  if (det != 1 && det != -1) return identity;
  return {t * a * t.transpose(), t};
}

}  // namespace hyperlat
