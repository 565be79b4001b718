#include "hyperlat/numth.hpp"

#include <numeric>
#include <sstream>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

long pow_mod(long base, long exp, long m) {
  long result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = static_cast<long>((__int128)result * base % m);
    base = static_cast<long>((__int128)base * base % m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<long, int>> factor(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long primitive_root_prime_power(long p, int e) {
  const long phi_p = p - 1;
  const auto fs = factor(phi_p);
  long g = 2;
  for (;; ++g) {
    bool ok = true;
    for (const auto& [q, k] : fs)
      if (pow_mod(g, phi_p / q, p) == 1) ok = false;
    if (ok) break;
  }
  if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
  return g;
}

// x = r mod m, x = 1 mod n (gcd(m, n) = 1)
long crt_with_one(long r, long m, long n) {
  if (n == 1) return mod(r, m);
  for (long x = r; x < m * n; x += m)
    if (mod(x, n) == 1 % n) return x;
  throw InternalError("CRT failed");
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

int legendre(const BigInt& a, long p) {
  if (p < 3 || !is_prime(p)) {
    std::ostringstream os;
    os << p << " is not an odd prime";
    throw DomainError(os.str());
  }
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  const long v = pow_mod(r.get_si(), (p - 1) / 2, p);
  if (v == 0) return 0;
  return v == 1 ? 1 : -1;
}

int kronecker(long a, long n) {
  if (n < 1) throw DomainError("kronecker symbol needs n >= 1");
  return mpz_kronecker(BigInt(a).get_mpz_t(), BigInt(n).get_mpz_t());
}

long euler_phi(long n) {
  if (n < 1) throw DomainError("euler_phi needs n >= 1");
  long result = n;
  for (const auto& [p, e] : factor(n)) result = result / p * (p - 1);
  return result;
}

std::vector<UnitGenerator> unit_group(long modulus) {
  if (modulus < 2) throw DomainError("unit group needs a modulus >= 2");
  std::vector<UnitGenerator> out;
  for (const auto& [p, e] : factor(modulus)) {
    const long pe = ipow(p, e);
    const long rest = modulus / pe;
    if (p == 2) {
      if (e == 1) continue;
      out.push_back({crt_with_one(pe - 1, pe, rest), 2});
      if (e >= 3) out.push_back({crt_with_one(5, pe, rest), pe / 4});
    } else {
      out.push_back({crt_with_one(primitive_root_prime_power(p, e), pe, rest), pe / p * (p - 1)});
    }
  }
  return out;
}

int CharacterValue::as_integer() const {
  if (zero) return 0;
  if (turn == 0) return 1;
  if (turn == Rational(1, 2)) return -1;
  throw DomainError("character value is not real");
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<UnitGenerator> generators, std::vector<long> exponents)
    : modulus_(modulus), generators_(std::move(generators)), exponents_(std::move(exponents)), log_(modulus) {
  if (generators_.size() != exponents_.size()) throw DomainError("one exponent per generator is required");
  for (std::size_t i = 0; i < generators_.size(); ++i) exponents_[i] = mod(exponents_[i], generators_[i].order);
  // Walk the whole group once, recording the discrete log of each unit.
  std::vector<long> a(generators_.size(), 0);
  for (;;) {
    long x = 1 % modulus_;
    for (std::size_t i = 0; i < a.size(); ++i) x = x * pow_mod(generators_[i].generator, a[i], modulus_) % modulus_;
    if (!log_[x].empty() || (a.empty() && x != 1 % modulus_)) throw InternalError("unit group generators are not independent");
    log_[x] = a.empty() ? std::vector<long>{0} : a;
    std::size_t i = 0;
    while (i < a.size() && ++a[i] == generators_[i].order) a[i++] = 0;
    if (i == a.size()) break;
  }
}

CharacterValue DirichletCharacter::operator()(long n) const {
  const auto& lg = log_[mod(n, modulus_)];
  if (lg.empty()) return {true, 0};
  Rational t = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) t += Rational(exponents_[i] * lg[i], generators_[i].order);
  t -= BigInt(t.get_num() / t.get_den());
  if (t < 0) t += 1;
  t.canonicalize();
  return {false, t};
}

bool DirichletCharacter::is_real() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if ((2 * exponents_[i]) % generators_[i].order != 0) return false;
  return true;
}

bool DirichletCharacter::is_principal() const {
  for (long e : exponents_)
    if (e != 0) return false;
  return true;
}

int DirichletCharacter::parity() const { return (*this)(-1).as_integer(); }

std::vector<DirichletCharacter> all_characters(long modulus) {
  const auto gens = unit_group(modulus);
  std::vector<DirichletCharacter> out;
  std::vector<long> e(gens.size(), 0);
  for (;;) {
    out.emplace_back(modulus, gens, e);
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++e[i] < gens[i].order) break;
      e[i] = 0;
      if (i == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

std::vector<DirichletCharacter> matching_characters(const BigInt& det, long half_dimension, long modulus,
                                                    long prime_bound) {
  if (prime_bound < 50) throw DomainError("prime bound must be at least 50");
  const BigInt disc = (half_dimension % 2 ? -det : det);
  std::vector<long> primes;
  for (long p : primes_up_to(prime_bound))
    if (p > 2 && modulus % p != 0) primes.push_back(p);
  std::vector<DirichletCharacter> out;
  for (auto& chi : all_characters(modulus)) {
    bool ok = true;
    for (long p : primes) {
      const CharacterValue v = chi(p);
      if (!v.is_real() || v.as_integer() != legendre(disc, p)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(chi));
  }
  return out;
}

DirichletCharacter identify_character(const BigInt& det, long half_dimension, long modulus, long prime_bound) {
  auto found = matching_characters(det, half_dimension, modulus, prime_bound);
  if (found.size() != 1) {
    std::ostringstream os;
    os << found.size() << " characters mod " << modulus << " match the Legendre symbols of the discriminant";
    throw InvariantError(os.str());
  }
  return std::move(found.front());
}

}  // namespace hyperlat
