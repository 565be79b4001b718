#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

bool is_prime(long n);
std::vector<long> primes_up_to(long bound);

/// Legendre symbol (a/p) for an odd prime p. Throws DomainError otherwise.
int legendre(const BigInt& a, long p);

/// Kronecker symbol (a/n) for n >= 1.
int kronecker(long a, long n);

long euler_phi(long n);

struct UnitGenerator {
  long generator;
  long order;
};

/// Generators of the unit group mod l as a direct product of cyclic groups
/// (one factor per odd prime power, at most two for the power of 2). The
/// trivial group gives an empty list.
std::vector<UnitGenerator> unit_group(long modulus);

/// exp(2 pi i * turn) with turn in [0, 1), or zero.
struct CharacterValue {
  bool zero = false;
  Rational turn = 0;

  bool is_real() const { return zero || turn == 0 || turn == Rational(1, 2); }
  /// -1, 0 or 1; throws DomainError for a non-real value.
  int as_integer() const;
  friend bool operator==(const CharacterValue&, const CharacterValue&) = default;
};

/// A Dirichlet character mod l, given by the exponent e_i of its value
/// exp(2 pi i e_i / order_i) on each unit-group generator.
class DirichletCharacter {
 public:
  DirichletCharacter(long modulus, std::vector<UnitGenerator> generators, std::vector<long> exponents);

  long modulus() const { return modulus_; }
  const std::vector<long>& exponents() const { return exponents_; }

  CharacterValue operator()(long n) const;
  bool is_real() const;
  bool is_principal() const;
  /// chi(-1) as -1 or 1.
  int parity() const;

 private:
  long modulus_;
  std::vector<UnitGenerator> generators_;
  std::vector<long> exponents_;
  std::vector<std::vector<long>> log_;  // discrete logs of residues, empty for non-units
};

/// All phi(l) characters mod l in lexicographic exponent order.
std::vector<DirichletCharacter> all_characters(long modulus);

/// Characters mod l with chi(p) = legendre((-1)^s det A, p) for every odd
/// prime p <= prime_bound not dividing l.
std::vector<DirichletCharacter> matching_characters(const BigInt& det, long half_dimension, long modulus,
                                                    long prime_bound = 100);

/// The unique match; throws InvariantError when there are zero or several.
DirichletCharacter identify_character(const BigInt& det, long half_dimension, long modulus, long prime_bound = 100);

}  // namespace hyperlat
