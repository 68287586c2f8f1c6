#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hall {

// Arbitrary-precision integer. Group orders (e.g. exceptional Lie types)
// overflow 64-bit quickly, so every order-valued quantity uses this type.
using Int = boost::multiprecision::cpp_int;

// A finite set of distinct primes, kept sorted ascending. This is the "pi"
// object every existence condition is phrased in terms of.
class PrimeSet {
 public:
  PrimeSet() = default;

  // Throws std::invalid_argument if any value is not prime.
  static PrimeSet of(std::initializer_list<long long> values);
  static PrimeSet from(std::vector<Int> values);

  // Wraps values that are already known to be prime (no primality test).
  static PrimeSet from_primes_unchecked(std::vector<Int> primes);

  bool contains(const Int& p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  const std::vector<Int>& primes() const { return primes_; }

  PrimeSet set_union(const PrimeSet& other) const;
  PrimeSet set_intersection(const PrimeSet& other) const;
  PrimeSet set_difference(const PrimeSet& other) const;
  bool subset_of(const PrimeSet& other) const;

  // "{2,3,5}"; "{}" for the empty set.
  std::string to_string() const;

  bool operator==(const PrimeSet&) const = default;
  // Lexicographic on the sorted prime list; used only for canonical ordering.
  bool operator<(const PrimeSet& other) const { return primes_ < other.primes_; }

 private:
  std::vector<Int> primes_;
};

// Prime factorisation with primes strictly increasing and exponents >= 1.
// factorize(1) is the empty factorisation.
struct Factorization {
  std::vector<std::pair<Int, int>> factors;

  Int value() const;
  PrimeSet prime_set() const;
  int exponent_of(const Int& p) const;
  // "2^4 * 3^2 * 5"; "1" for the empty factorisation.
  std::string to_string() const;

  bool operator==(const Factorization&) const = default;
};

// Deterministic for n < 3.3e24 (fixed Miller-Rabin witness set); above that
// bound the test adds further fixed witnesses and is correct for every input
// that can arise from the supported group catalogue.
bool is_prime(const Int& n);

// Exact factorisation of n >= 1: wheel trial division, then Pollard rho
// (Brent variant) on the remaining cofactors.
Factorization factorize(Int n);

// The set of primes dividing n (n >= 1).
PrimeSet prime_divisors(const Int& n);

// Largest divisor of n composed only of primes in pi; pi_part(n, {}) == 1.
Int pi_part(const Int& n, const PrimeSet& pi);

// Greatest common divisor; requires a and b not both zero.
Int gcd(const Int& a, const Int& b);

// Value of the k-th cyclotomic polynomial at q (k >= 1, q >= 2), computed
// by the Moebius product over q^d - 1 with exact division.
Int cyclotomic_eval(int k, const Int& q);

// +1 if q = 1 (mod 4), -1 if q = 3 (mod 4). Requires odd q >= 3.
int epsilon(const Int& q);

// (p, a) with q = p^a if q >= 2 is a prime power, otherwise nullopt.
std::optional<std::pair<Int, int>> is_prime_power(const Int& q);

// floor(a / b) for b >= 1 (exact floor, also for negative a).
Int floor_div(const Int& a, const Int& b);

// Moebius function for 1 <= n <= 10^6.
int mobius(long long n);

// Factorisation of n! computed by Legendre's formula (0 <= n <= 10^5).
Factorization factorial_factorization(long long n);

}  // namespace hall
