#pragma once

// Exact integer arithmetic kernel: factorization, divisor enumeration and
// the classical multiplicative functions (tau, phi, mu) that the counting,
// enumeration and series layers are built on.  Everything is exact 64-bit;
// overflow throws instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace zrings {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("u64 addition overflow");
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("u64 multiplication overflow");
  return r;
}

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i64 addition overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i64 subtraction overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i64 multiplication overflow");
  return r;
}

inline u64 checked_pow(u64 base, u32 exp) {
  u64 r = 1;
  while (exp-- > 0) r = checked_mul(r, base);
  return r;
}

inline i64 checked_signed(u64 v) {
  if (v > static_cast<u64>(INT64_MAX)) throw std::overflow_error("u64 does not fit in i64");
  return static_cast<i64>(v);
}

// lcm(a,b) = a/gcd * b, overflow-checked.
inline u64 checked_lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

namespace arith {

struct PrimePower {
  u64 prime;
  u32 exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n as an ordered list of (prime, exponent) pairs, primes strictly
// increasing, every exponent >= 1.  value == 1 iff factors is empty.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  u32 exponent_of(u64 p) const {
    for (const auto& f : factors)
      if (f.prime == p) return f.exponent;
    return 0;
  }
};

// Primes <= limit by sieve of Eratosthenes.
std::vector<u32> primes_upto(u32 limit);

// Deterministic trial division against a sieved prime table (default bound
// 10^6); inputs whose cofactor survives the table fall back to plain trial
// division.  Rejects n = 0.
Factorization factorize(u64 n);
Factorization factorize(u64 n, const std::vector<u32>& primes);

// All tau(n) divisors, ascending.  Rejects n = 0.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

struct Classical {
  u64 tau;
  u64 phi;
  int mobius;  // in {-1, 0, 1}
};

// tau / phi / mu in one pass over the factorization.  Rejects n = 0.
Classical classical(u64 n);
Classical classical(const Factorization& f);

u64 tau(u64 n);
u64 phi(u64 n);
int mobius(u64 n);

// Batched tables for all n <= limit built by a single linear sieve; used
// wherever millions of evaluations are needed (summatory grids, sweeps).
// Built once, then read-only and safe to share across threads.
class SieveTables {
 public:
  explicit SieveTables(u64 limit);

  u64 limit() const { return limit_; }
  u32 smallest_prime_factor(u64 n) const { return spf_[check(n)]; }
  u64 tau(u64 n) const { return tau_[check(n)]; }
  u64 phi(u64 n) const { return phi_[check(n)]; }
  int mobius(u64 n) const { return mu_[check(n)]; }

  Factorization factorize(u64 n) const;

 private:
  u64 check(u64 n) const {
    if (n == 0 || n > limit_) throw std::invalid_argument("SieveTables: n out of range");
    return n;
  }

  u64 limit_;
  std::vector<u32> spf_;
  std::vector<u32> tau_;
  std::vector<u64> phi_;
  std::vector<signed char> mu_;
};

}  // namespace arith
}  // namespace zrings
