#pragma once

// Closed-form counting for Z_m x Z_n.
//
//   s(m,n)      subgroups       = sum_{i|m, j|n} gcd(i,j)
//                               = sum_{t|gcd(m,n)} phi(t) tau(m/t) tau(n/t)
//   N_s(m,n)    subrings        = sum_{i|m, j|n} h(i,j)
//   N_us(m,n)   unital subrings = tau(gcd(m,n))
//   ideals                      = tau(m) tau(n)
//
// with h(i,j) = sum over d | gcd(i,j) with gcd(d,i/d) = gcd(d,j/d) = t of
// phi(d)/phi(d/t).  All of s, h, N_s, N_us are multiplicative as functions
// of two variables, so each is a product of local factors at prime powers;
// the per-prime closed forms live here alongside a generic evaluator.

#include <functional>

#include "zrings/arith.hpp"

namespace zrings::counting {

// Local factor of a two-variable multiplicative function.  Must satisfy
// rule(p, 0, 0) = 1 for every prime p.
using LocalRule = std::function<u64(u64 p, u32 alpha, u32 beta)>;

// h(i,j) by local factors at the primes of gcd(i,j) (primes dividing only
// one argument contribute 1).  Fast path used everywhere by default.
u64 h(u64 i, u64 j);

// h(i,j) straight from the defining divisor sum, independently of the
// prime-power form; each summand phi(d)/phi(d/t) is an exact division.
u64 h_divisor_sum(u64 i, u64 j);

// Local factor of h at (p^alpha, p^beta), symmetric in (alpha, beta):
//   alpha = beta = 2g      ->  1 + p + ... + p^g
//   alpha = 2g     < beta  ->  p^g
//   alpha = beta = 2g - 1  ->  p^(g-1) + (1 + p + ... + p^(g-1))
//   alpha = 2g - 1 < beta  ->  p^(g-1)
u64 h_prime_power(u64 p, u32 alpha, u32 beta);

// Local factor of N_s at (p^alpha, p^beta) in division-free sum form
// (for alpha <= beta, g as above):
//   alpha = beta = 2g      ->  p^g + 10 sum_{j=1..g} j p^(g-j)
//   alpha = 2g     < beta  ->  (beta-2g+1) p^g + 2 sum_{j=1..g} (5j+beta-2g) p^(g-j)
//   alpha = beta = 2g - 1  ->  5 sum_{j=1..g} (2j-1) p^(g-j)
//   alpha = 2g - 1 < beta  ->  sum_{j=1..g} (10j+2beta-4g-3) p^(g-j)
u64 ns_prime_power(u64 p, u32 alpha, u32 beta);

// The same local factor as a rational expression with denominator (p-1)^2;
// exact divisibility is asserted.  Kept as a cross-check of the sum form.
u64 ns_prime_power_rational(u64 p, u32 alpha, u32 beta);

// Local factor of N_us: min(alpha, beta) + 1.
u64 nus_prime_power(u64 p, u32 alpha, u32 beta);

// Local factor of s at (p^alpha, p^beta), normalized so alpha <= beta:
//   ((b-a+1)p^(a+2) - (b-a-1)p^(a+1) - (a+b+3)p + (a+b+1)) / (p-1)^2
// extended by s(p^0, p^beta) = beta + 1; divisibility by (p-1)^2 asserted.
u64 s_prime_power(u64 p, u32 alpha, u32 beta);

// prod over primes p of rule(p, v_p(m), v_p(n)).
u64 eval_multiplicative(u64 m, u64 n, const LocalRule& rule);

u64 count_subrings(u64 m, u64 n);
u64 count_unital_subrings(u64 m, u64 n);
u64 count_ideals(u64 m, u64 n);

// Evaluates both divisor-sum forms of s(m,n) and requires them to agree;
// disagreement is an internal defect and throws std::logic_error.
u64 count_subgroups(u64 m, u64 n);

}  // namespace zrings::counting
