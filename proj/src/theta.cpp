#include "hyperlat/theta.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include "hyperlat/errors.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/parallel.hpp"
#include "hyperlat/reduction.hpp"

namespace hyperlat {

namespace {

using i64 = std::int64_t;

// Floating-point triangular form Q(x) = sum_i r_i (x_i + sum_{j>i} m_ij x_j)^2
// together with the exact integer form.
struct Form {
  std::size_t n = 0;
  std::vector<double> r;  // n
  std::vector<double> m;  // n x n, upper part used
  std::vector<i64> a;     // n x n exact Gram

  explicit Form(const IntMatrix& gram) : n(gram.rows()), r(n), m(n * n, 0.0), a(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!gram(i, j).fits_slong_p()) throw DomainError("Gram entries exceed 64-bit range");
        a[i * n + j] = gram(i, j).get_si();
      }
    std::vector<double> s(n * n);
    for (std::size_t i = 0; i < n * n; ++i) s[i] = static_cast<double>(a[i]);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = s[i * n + i];
      if (!(r[i] > 0)) throw DomainError("Gram matrix is not positive definite");
      for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = s[i * n + j] / r[i];
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = i + 1; l < n; ++l) s[j * n + l] -= m[i * n + j] * m[i * n + l] * r[i];
    }
  }
};

// Visits every x with x^T A x <= bound whose top-most non-zero coordinate is
// positive. Pruning uses the floating form widened by a margin of 1/2; the
// leaf test is exact.
class Walker {
 public:
  using Leaf = std::function<void(const std::vector<i64>&, i64)>;

  Walker(const Form& f, i64 bound)
      : f_(f), n_(f.n), bound_(bound), limit_(static_cast<double>(bound) + 0.5), x_(n_, 0),
        sig_((n_ + 1) * (n_ + 1), 0.0), isig_((n_ + 1) * (n_ + 1), 0), stale_(n_ + 1, 0) {}

  std::uint64_t nodes() const { return nodes_; }

  // Count mode: counts[e / 2] += 2 for every visited non-zero vector of norm e.
  void count_into(std::vector<std::uint64_t>* counts) { counts_ = counts; }
  void on_leaf(Leaf leaf) { leaf_ = std::move(leaf); }

  // Runs the subtree below a fixed assignment of the top `prefix.size()` coordinates.
  void run(const std::vector<i64>& prefix) {
    std::fill(x_.begin(), x_.end(), 0);
    const std::size_t t = prefix.size();
    double partial = 0;
    i64 exact = 0;
    bool above_zero = true;
    for (std::size_t idx = 0; idx < t; ++idx) {
      const std::size_t k = n_ - 1 - idx;
      x_[k] = prefix[idx];
    }
    for (std::size_t idx = 0; idx < t; ++idx) {
      const std::size_t k = n_ - 1 - idx;
      double c = 0;
      i64 s = 0;
      for (std::size_t j = k + 1; j < n_; ++j) {
        c -= f_.m[k * n_ + j] * static_cast<double>(x_[j]);
        s += f_.a[k * n_ + j] * x_[j];
      }
      const double d = static_cast<double>(x_[k]) - c;
      partial += d * d * f_.r[k];
      exact += x_[k] * (f_.a[k * n_ + k] * x_[k] + 2 * s);
      above_zero = above_zero && x_[k] == 0;
    }
    if (partial > limit_) return;
    if (t == n_) {
      leaf(exact, above_zero);
      return;
    }
    const std::size_t k = n_ - 1 - t;
    std::fill(stale_.begin(), stale_.end(), static_cast<long>(n_) - 1);
    refresh_row(k, static_cast<long>(n_) - 1);
    descend(k, partial, exact, above_zero);
  }

 private:
  void refresh_row(std::size_t k, long top) {
    for (long j = top; j > static_cast<long>(k); --j) {
      sig_[k * (n_ + 1) + j] = sig_[k * (n_ + 1) + j + 1] + f_.m[k * n_ + j] * static_cast<double>(x_[j]);
      isig_[k * (n_ + 1) + j] = isig_[k * (n_ + 1) + j + 1] + f_.a[k * n_ + j] * x_[j];
    }
  }

  void leaf(i64 exact, bool above_zero) {
    if (above_zero || exact > bound_) return;
    if (counts_) (*counts_)[static_cast<std::size_t>(exact / 2)] += 2;
    if (leaf_) leaf_(x_, exact);
  }

  void descend(std::size_t k, double partial, i64 exact_above, bool above_zero) {
    const double c = -sig_[k * (n_ + 1) + k + 1];
    const i64 s = isig_[k * (n_ + 1) + k + 1];
    const double rk = f_.r[k];
    const i64 akk = f_.a[k * n_ + k];
    const double rem = (limit_ - partial) / rk;
    if (rem < 0) return;
    const double w = std::sqrt(rem);
    i64 lo = static_cast<i64>(std::ceil(c - w));
    const i64 hi = static_cast<i64>(std::floor(c + w));
    if (above_zero) lo = std::max<i64>(lo, 0);
    for (i64 v = lo; v <= hi; ++v) {
      ++nodes_;
      x_[k] = v;
      const double d = static_cast<double>(v) - c;
      const double p2 = partial + d * d * rk;
      if (p2 > limit_) continue;
      const i64 e = exact_above + v * (akk * v + 2 * s);
      if (k == 0) {
        leaf(e, above_zero && v == 0);
        continue;
      }
      // stale_[k] is the highest coordinate changed since row k-1 was refreshed.
      stale_[k - 1] = std::max(stale_[k - 1], stale_[k]);
      refresh_row(k - 1, stale_[k]);
      stale_[k] = static_cast<long>(k);
      descend(k - 1, p2, e, above_zero && v == 0);
    }
    x_[k] = 0;
  }

  const Form& f_;
  std::size_t n_;
  i64 bound_;
  double limit_;
  std::vector<i64> x_;
  std::vector<double> sig_;
  std::vector<i64> isig_;
  std::vector<long> stale_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t>* counts_ = nullptr;
  Leaf leaf_;
};

// Top-level work items: assignments of the highest coordinates that survive pruning.
std::vector<std::vector<i64>> partition(const Form& f, i64 bound, std::size_t depth) {
  const std::size_t n = f.n;
  depth = std::min(depth, n);
  const double limit = static_cast<double>(bound) + 0.5;
  std::vector<std::vector<i64>> out;
  std::vector<i64> x(n, 0), prefix;
  std::function<void(std::size_t, double, bool)> rec = [&](std::size_t idx, double partial, bool above_zero) {
    if (idx == depth) {
      out.push_back(prefix);
      return;
    }
    const std::size_t k = n - 1 - idx;
    double c = 0;
    for (std::size_t j = k + 1; j < n; ++j) c -= f.m[k * n + j] * static_cast<double>(x[j]);
    const double rem = (limit - partial) / f.r[k];
    if (rem < 0) return;
    const double w = std::sqrt(rem);
    i64 lo = static_cast<i64>(std::ceil(c - w));
    const i64 hi = static_cast<i64>(std::floor(c + w));
    if (above_zero) lo = std::max<i64>(lo, 0);
    for (i64 v = lo; v <= hi; ++v) {
      const double d = static_cast<double>(v) - c;
      const double p2 = partial + d * d * f.r[k];
      if (p2 > limit) continue;
      x[k] = v;
      prefix.push_back(v);
      rec(idx + 1, p2, above_zero && v == 0);
      prefix.pop_back();
    }
    x[k] = 0;
  };
  rec(0, 0.0, true);
  return out;
}

void require_form(const IntMatrix& a) {
  if (!a.square() || a.rows() == 0) throw DomainError("Gram matrix must be square and non-empty");
  if (!is_even(a)) throw DomainError("Gram matrix must be even and symmetric");
  if (!is_positive_definite(a)) throw DomainError("Gram matrix is not positive definite");
}

ReducedGram prepare(const IntMatrix& a, const EnumerationOptions& options) {
  require_form(a);
  if (!options.reduce || a.rows() < 3) return {a, IntMatrix::identity(a.rows())};
  ReductionOptions ro;
  ro.block_size = options.block_size;
  return reduce_gram(a, ro);
}

std::size_t partition_depth(std::size_t n, unsigned threads) {
  if (threads <= 1) return 0;
  return std::min<std::size_t>(n, 3);
}

}  // namespace

ThetaSeries theta_coefficients(const IntMatrix& a, std::size_t max_index, const EnumerationOptions& options,
                               EnumerationStats* stats) {
  const ReducedGram red = prepare(a, options);
  const Form form(red.gram);
  const i64 bound = static_cast<i64>(2 * max_index);
  const unsigned threads = resolve_threads(options.threads);
  const auto tasks = partition(form, bound, partition_depth(form.n, threads));

  std::vector<std::vector<std::uint64_t>> counts(tasks.size(), std::vector<std::uint64_t>(max_index + 1, 0));
  std::vector<std::uint64_t> nodes(tasks.size(), 0);
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    Walker w(form, bound);
    w.count_into(&counts[i]);
    w.run(tasks[i]);
    nodes[i] = w.nodes();
  });

  ThetaSeries out;
  out.coefficients.assign(max_index + 1, 0);
  out.coefficients[0] = 1;
  for (const auto& c : counts)
    for (std::size_t m = 1; m <= max_index; ++m) out.coefficients[m] += static_cast<unsigned long>(c[m]);
  if (stats) {
    stats->tasks = tasks.size();
    stats->nodes = 0;
    for (auto v : nodes) stats->nodes += v;
  }
  return out;
}

ThetaSeries theta_coefficients(const IntMatrix& a, std::size_t max_index, unsigned threads) {
  EnumerationOptions o;
  o.threads = threads;
  return theta_coefficients(a, max_index, o);
}

KissingTerm kissing_term(const IntMatrix& a, unsigned threads) {
  require_form(a);
  BigInt min_diag = a(0, 0);
  for (std::size_t i = 1; i < a.rows(); ++i) min_diag = std::min(min_diag, BigInt(a(i, i)));
  // A basis vector has norm min_diag, so the first shell is no higher.
  const std::size_t m = min_diag.get_ui() / 2;
  const ThetaSeries t = theta_coefficients(a, m, threads);
  for (std::size_t i = 1; i <= m; ++i)
    if (t.coefficients[i] != 0) return {static_cast<long>(2 * i), t.coefficients[i]};
  throw InternalError("no vector found up to the minimal diagonal entry");
}

std::vector<std::vector<long>> shell_vectors(const IntMatrix& a, long norm, unsigned threads) {
  EnumerationOptions o;
  o.threads = threads;
  const ReducedGram red = prepare(a, o);
  const Form form(red.gram);
  const std::size_t n = form.n;
  std::vector<std::vector<i64>> t(n, std::vector<i64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = red.transform(i, j).get_si();

  const unsigned nt = resolve_threads(threads);
  const auto tasks = partition(form, norm, partition_depth(n, nt));
  std::vector<std::vector<std::vector<long>>> found(tasks.size());
  parallel_for(tasks.size(), nt, [&](std::size_t i) {
    Walker w(form, norm);
    w.on_leaf([&](const std::vector<i64>& y, i64 e) {
      if (e != norm) return;
      std::vector<long> x(n, 0);
      for (std::size_t r = 0; r < n; ++r)
        if (y[r])
          for (std::size_t c = 0; c < n; ++c) x[c] += y[r] * t[r][c];
      // canonical sign: first non-zero coordinate positive
      for (long v : x) {
        if (v == 0) continue;
        if (v < 0)
          for (auto& u : x) u = -u;
        break;
      }
      found[i].push_back(std::move(x));
    });
    w.run(tasks[i]);
  });
  std::vector<std::vector<long>> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

ShellClassification classify_shells(const IntMatrix& a, const std::vector<std::vector<BigInt>>& positive_roots,
                                    long max_norm, unsigned threads) {
  std::set<std::vector<long>> roots;
  for (const auto& r : positive_roots) {
    std::vector<long> v;
    for (const auto& c : r) v.push_back(c.get_si());
    for (long c : v) {
      if (c == 0) continue;
      if (c < 0)
        for (auto& u : v) u = -u;
      break;
    }
    roots.insert(v);
  }
  ShellClassification out;
  out.root_count = 2 * positive_roots.size();
  std::uint64_t matched = 0;
  for (long norm = 2; norm <= max_norm; norm += 2) {
    const auto shell = shell_vectors(a, norm, threads);
    if (shell.empty()) continue;
    ShellReport rep{norm, 2 * shell.size(), 0};
    for (const auto& v : shell)
      if (roots.count(v)) rep.roots += 2;
    matched += rep.roots;
    out.shells.push_back(rep);
  }
  out.roots_outside_shells = 2 * roots.size() - matched;
  return out;
}

std::vector<BigInt> jacobi_theta_series(std::size_t max_index) {
  // Work in powers of q up to q^{2M}.
  const std::size_t len = 2 * max_index + 1;
  std::vector<BigInt> t2(len, 0), t3(len, 0), t4(len, 0);
  for (long k = 0;; ++k) {
    const std::size_t e = static_cast<std::size_t>((2 * k + 1) * (2 * k + 1));
    if (e >= len) break;
    t2[e] += 2;  // n = k and n = -k-1
  }
  for (long k = 0;; ++k) {
    const std::size_t e = static_cast<std::size_t>(4 * k * k);
    if (e >= len) break;
    const int mult = k == 0 ? 1 : 2;
    t3[e] += mult;
    t4[e] += (k % 2 ? -mult : mult);
  }
  auto mul = [len](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> z(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j)
        if (y[j] != 0) z[i + j] += x[i] * y[j];
    }
    return z;
  };
  auto pow6 = [&](const std::vector<BigInt>& x) {
    const auto x2 = mul(x, x);
    return mul(mul(x2, x2), x2);
  };
  const auto a = pow6(t2), b = pow6(t3), c = pow6(t4);
  std::vector<BigInt> out(max_index + 1);
  for (std::size_t m = 0; m <= max_index; ++m) {
    BigInt s = a[2 * m] + b[2 * m] + c[2 * m];
    mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), 2);
    out[m] = s;
  }
  return out;
}

std::vector<BigInt> combine_series(const std::vector<std::vector<BigInt>>& series, const std::vector<BigInt>& weights,
                                   std::size_t length) {
  if (series.size() != weights.size()) throw DomainError("one weight per series is required");
  std::vector<BigInt> out(length, 0);
  for (std::size_t s = 0; s < series.size(); ++s)
    for (std::size_t i = 0; i < length && i < series[s].size(); ++i) out[i] += weights[s] * series[s][i];
  return out;
}

}  // namespace hyperlat
