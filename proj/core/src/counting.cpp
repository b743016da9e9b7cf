#include "zrings/counting.hpp"

#include <algorithm>

namespace zrings::counting {

namespace {

void require_positive(u64 m, u64 n, const char* who) {
  if (m == 0 || n == 0) throw std::invalid_argument(std::string(who) + ": arguments must be positive");
}

// 1 + p + ... + p^g
u64 geometric(u64 p, u32 g) {
  u64 sum = 0, pk = 1;
  for (u32 t = 0; t <= g; ++t) {
    sum = checked_add(sum, pk);
    if (t < g) pk = checked_mul(pk, p);
  }
  return sum;
}

// numerator / (p-1)^2, exact by construction of the closed forms
u64 divide_by_p1_squared(i64 numerator, u64 p, const char* who) {
  const i64 den = checked_mul(static_cast<i64>(p) - 1, static_cast<i64>(p) - 1);
  if (numerator % den != 0)
    throw std::logic_error(std::string(who) + ": numerator not divisible by (p-1)^2");
  const i64 q = numerator / den;
  if (q < 0) throw std::logic_error(std::string(who) + ": negative local factor");
  return static_cast<u64>(q);
}

}  // namespace

u64 h_prime_power(u64 p, u32 alpha, u32 beta) {
  if (p < 2) throw std::invalid_argument("h_prime_power: p must be a prime >= 2");
  if (alpha > beta) std::swap(alpha, beta);
  if (alpha == beta) {
    if (alpha % 2 == 0) return geometric(p, alpha / 2);                      // 2g
    const u32 g = (alpha + 1) / 2;                                           // 2g-1
    return checked_add(checked_pow(p, g - 1), geometric(p, g - 1));
  }
  if (alpha % 2 == 0) return checked_pow(p, alpha / 2);                      // 2g < beta
  return checked_pow(p, (alpha + 1) / 2 - 1);                                // 2g-1 < beta
}

u64 ns_prime_power(u64 p, u32 alpha, u32 beta) {
  if (p < 2) throw std::invalid_argument("ns_prime_power: p must be a prime >= 2");
  if (alpha > beta) std::swap(alpha, beta);
  u64 sum = 0;
  if (alpha == beta && alpha % 2 == 0) {
    const u32 g = alpha / 2;
    sum = checked_pow(p, g);
    for (u32 j = 1; j <= g; ++j)
      sum = checked_add(sum, checked_mul(10 * static_cast<u64>(j), checked_pow(p, g - j)));
  } else if (alpha % 2 == 0) {
    const u32 g = alpha / 2;
    const u64 q = beta - 2 * g;
    sum = checked_mul(q + 1, checked_pow(p, g));
    for (u32 j = 1; j <= g; ++j)
      sum = checked_add(sum, checked_mul(2 * (5 * static_cast<u64>(j) + q), checked_pow(p, g - j)));
  } else if (alpha == beta) {
    const u32 g = (alpha + 1) / 2;
    for (u32 j = 1; j <= g; ++j)
      sum = checked_add(sum, checked_mul(5 * (2 * static_cast<u64>(j) - 1), checked_pow(p, g - j)));
  } else {
    const u32 g = (alpha + 1) / 2;
    for (u32 j = 1; j <= g; ++j)
      sum = checked_add(sum, checked_mul(10 * static_cast<u64>(j) + 2 * static_cast<u64>(beta) - 4 * g - 3,
                                         checked_pow(p, g - j)));
  }
  return sum;
}

u64 ns_prime_power_rational(u64 p, u32 alpha, u32 beta) {
  if (p < 2) throw std::invalid_argument("ns_prime_power_rational: p must be a prime >= 2");
  if (alpha > beta) std::swap(alpha, beta);
  const i64 ip = static_cast<i64>(p);
  auto ipow = [&](u32 e) { return checked_signed(checked_pow(p, e)); };
  i64 num = 0;
  if (alpha == beta && alpha % 2 == 0) {
    const i64 g = alpha / 2;
    num = ipow(alpha / 2 + 2) + 8 * ipow(alpha / 2 + 1) + ipow(alpha / 2)
          - checked_mul(10 * (g + 1), ip) + 10 * g;
  } else if (alpha % 2 == 0) {
    const i64 g = alpha / 2;
    const i64 b = beta;
    num = checked_mul(b - 2 * g + 1, ipow(alpha / 2 + 2)) + 8 * ipow(alpha / 2 + 1)
          - checked_mul(b - 2 * g - 1, ipow(alpha / 2))
          - checked_mul(2 * (b + 3 * g + 5), ip) + 2 * (b + 3 * g);
  } else if (alpha == beta) {
    const u32 g = (alpha + 1) / 2;
    const i64 ig = g;
    num = 5 * (ipow(g + 1) + ipow(g) - checked_mul(2 * ig + 1, ip) + 2 * ig - 1);
  } else {
    const u32 g = (alpha + 1) / 2;
    const i64 ig = g;
    const i64 b = beta;
    num = checked_mul(2 * b - 4 * ig + 7, ipow(g + 1)) - checked_mul(2 * b - 4 * ig - 3, ipow(g))
          - checked_mul(2 * b + 6 * ig + 7, ip) + 2 * b + 6 * ig - 3;
  }
  return divide_by_p1_squared(num, p, "ns_prime_power_rational");
}

u64 nus_prime_power(u64 p, u32 alpha, u32 beta) {
  if (p < 2) throw std::invalid_argument("nus_prime_power: p must be a prime >= 2");
  return static_cast<u64>(std::min(alpha, beta)) + 1;
}

u64 s_prime_power(u64 p, u32 alpha, u32 beta) {
  if (p < 2) throw std::invalid_argument("s_prime_power: p must be a prime >= 2");
  if (alpha > beta) std::swap(alpha, beta);
  if (alpha == 0) return static_cast<u64>(beta) + 1;  // subgroup chain of Z_{p^beta}
  const i64 ia = alpha, ib = beta, ip = static_cast<i64>(p);
  const i64 num = checked_sub(
      checked_sub(checked_mul(ib - ia + 1, checked_signed(checked_pow(p, alpha + 2))),
                  checked_mul(ib - ia - 1, checked_signed(checked_pow(p, alpha + 1)))),
      checked_sub(checked_mul(ia + ib + 3, ip), ia + ib + 1));
  return divide_by_p1_squared(num, p, "s_prime_power");
}

u64 h(u64 i, u64 j) {
  require_positive(i, j, "h");
  const u64 g = std::gcd(i, j);
  if (g == 1) return 1;  // local factors at primes dividing only one side are 1
  u64 result = 1;
  for (const auto& [p, eg] : arith::factorize(g).factors) {
    u32 a = 0, b = 0;
    for (u64 v = i; v % p == 0; v /= p) ++a;
    for (u64 v = j; v % p == 0; v /= p) ++b;
    result = checked_mul(result, h_prime_power(p, a, b));
  }
  return result;
}

u64 h_divisor_sum(u64 i, u64 j) {
  require_positive(i, j, "h_divisor_sum");
  u64 sum = 0;
  for (u64 d : arith::divisors(std::gcd(i, j))) {
    const u64 t = std::gcd(d, i / d);
    if (t != std::gcd(d, j / d)) continue;
    const u64 phi_d = arith::phi(d);
    const u64 phi_q = arith::phi(d / t);
    if (phi_d % phi_q != 0)
      throw std::logic_error("h_divisor_sum: phi(d/t) must divide phi(d)");
    sum = checked_add(sum, phi_d / phi_q);
  }
  return sum;
}

u64 eval_multiplicative(u64 m, u64 n, const LocalRule& rule) {
  require_positive(m, n, "eval_multiplicative");
  const auto fm = arith::factorize(m);
  const auto fn = arith::factorize(n);
  u64 result = 1;
  std::size_t im = 0, in = 0;
  while (im < fm.factors.size() || in < fn.factors.size()) {
    u64 p;
    u32 alpha = 0, beta = 0;
    if (in == fn.factors.size() ||
        (im < fm.factors.size() && fm.factors[im].prime <= fn.factors[in].prime)) {
      p = fm.factors[im].prime;
      alpha = fm.factors[im].exponent;
      ++im;
      if (in < fn.factors.size() && fn.factors[in].prime == p) {
        beta = fn.factors[in].exponent;
        ++in;
      }
    } else {
      p = fn.factors[in].prime;
      beta = fn.factors[in].exponent;
      ++in;
    }
    result = checked_mul(result, rule(p, alpha, beta));
  }
  return result;
}

u64 count_subrings(u64 m, u64 n) {
  require_positive(m, n, "count_subrings");
  return eval_multiplicative(m, n, ns_prime_power);
}

u64 count_unital_subrings(u64 m, u64 n) {
  require_positive(m, n, "count_unital_subrings");
  return arith::tau(std::gcd(m, n));
}

u64 count_ideals(u64 m, u64 n) {
  require_positive(m, n, "count_ideals");
  return checked_mul(arith::tau(m), arith::tau(n));
}

u64 count_subgroups(u64 m, u64 n) {
  require_positive(m, n, "count_subgroups");
  u64 gcd_form = 0;
  for (u64 i : arith::divisors(m))
    for (u64 j : arith::divisors(n)) gcd_form = checked_add(gcd_form, std::gcd(i, j));
  u64 phi_tau_form = 0;
  for (u64 t : arith::divisors(std::gcd(m, n)))
    phi_tau_form = checked_add(
        phi_tau_form, checked_mul(arith::phi(t), checked_mul(arith::tau(m / t), arith::tau(n / t))));
  if (gcd_form != phi_tau_form)
    throw std::logic_error("count_subgroups: the two divisor-sum forms disagree");
  return gcd_form;
}

}  // namespace zrings::counting
