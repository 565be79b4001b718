#include "hyperlat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

void require_square(const IntMatrix& a, const char* what) {
  if (!a.square()) throw DomainError(std::string(what) + " needs a square matrix");
}

// Bareiss elimination; calls on_minor(k, d_k) for each leading minor while no
// pivoting has happened. Returns the determinant.
BigInt bareiss(IntMatrix m, const std::function<void(std::size_t, const BigInt&)>& on_minor) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  bool pivoted = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) {
        if (!pivoted && on_minor)
          for (std::size_t j = k; j < n; ++j) on_minor(j, BigInt(0));
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
      pivoted = true;
    }
    if (!pivoted && on_minor) on_minor(k, m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace

BigInt determinant(const IntMatrix& a) {
  require_square(a, "determinant");
  return bareiss(a, nullptr);
}

std::vector<BigInt> leading_minors(const IntMatrix& a) {
  require_square(a, "leading_minors");
  std::vector<BigInt> out(a.rows());
  // Minors past a zero pivot are computed directly.
  bool complete = true;
  bareiss(a, [&](std::size_t k, const BigInt& d) {
    out[k] = d;
    if (d == 0) complete = false;
  });
  if (!complete) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
      IntMatrix sub(k + 1, k + 1);
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j <= k; ++j) sub(i, j) = a(i, j);
      out[k] = determinant(sub);
    }
  }
  return out;
}

std::vector<BigInt> smith_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (pi == rows || abs(m(i, j)) < abs(m(pi, pj)))) pi = i, pj = j;
      if (pi == rows) {
        for (std::size_t k = t; k < n; ++k) diag.push_back(0);
        return diag;
      }
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));
      const BigInt piv = m(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        BigInt qt;
        mpz_fdiv_q(qt.get_mpz_t(), m(i, t).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= qt * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        BigInt qt;
        mpz_fdiv_q(qt.get_mpz_t(), m(t, j).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= qt * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the whole trailing block; otherwise fold an
      // offending row into row t and repeat.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), piv.get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad, j);
    }
    diag.push_back(abs(m(t, t)));
  }
  return diag;
}

RatMatrix rational_inverse(const IntMatrix& a) {
  require_square(a, "rational_inverse");
  const std::size_t n = a.rows();
  RatMatrix m = to_rational(a);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c) == 0) ++r;
    if (r == n) throw DomainError("matrix is singular");
    if (r != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(c, j), m(r, j));
        std::swap(inv(c, j), inv(r, j));
      }
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_even(const IntMatrix& a) {
  if (!a.is_symmetric()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!mpz_even_p(a(i, i).get_mpz_t())) return false;
  return true;
}

BigInt modular_level(const IntMatrix& a) {
  if (!is_even(a)) throw DomainError("modular level needs an even symmetric matrix");
  const RatMatrix k = rational_inverse(a);
  BigInt level = 1;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) {
      Rational v = k(i, j);
      if (i == j) v /= 2;
      mpz_lcm(level.get_mpz_t(), level.get_mpz_t(), v.get_den_mpz_t());
    }
  return level;
}

bool is_positive_definite(const IntMatrix& a) {
  if (!a.is_symmetric()) return false;
  for (const BigInt& d : leading_minors(a))
    if (d <= 0) return false;
  return true;
}

LatticeInvariants lattice_invariants(const IntMatrix& a) {
  LatticeInvariants inv;
  inv.dimension = a.rows();
  inv.determinant = determinant(a);
  inv.elementary_divisors = smith_normal_form(a);
  inv.is_even = is_even(a);
  inv.is_positive_definite = is_positive_definite(a);
  if (inv.is_even && inv.determinant != 0) inv.modular_level = modular_level(a);
  return inv;
}

std::optional<SignedPermutation> find_signed_permutation(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) return std::nullopt;
  const std::size_t n = a.rows();
  if (n > 24) throw DomainError("signed-permutation search is limited to 24 dimensions");

  auto profile = [](const IntMatrix& m, std::size_t i) {
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(abs(m(i, j)));
    std::sort(row.begin(), row.end());
    row.push_back(m(i, i));
    return row;
  };
  std::vector<std::vector<BigInt>> pa(n), pb(n);
  for (std::size_t i = 0; i < n; ++i) pa[i] = profile(a, i), pb[i] = profile(b, i);

  SignedPermutation s{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || pa[c] != pb[i]) continue;
      for (int sg : {1, -1}) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          ok = sg * s.sign[j] * a(c, s.perm[j]) == b(i, j);
        if (!ok) continue;
        s.perm[i] = c;
        s.sign[i] = sg;
        used[c] = true;
        if (place(i + 1)) return true;
        used[c] = false;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return s;
}

bool congruent_up_to_signed_permutation(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) return false;
  if (a.rows() > 24) throw DomainError("signed-permutation search is limited to 24 dimensions");
  if (determinant(a) != determinant(b)) return false;
  return find_signed_permutation(a, b).has_value();
}

}  // namespace hyperlat
