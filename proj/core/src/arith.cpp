#include "zrings/arith.hpp"

#include <algorithm>

namespace zrings::arith {

namespace {

constexpr u32 kDefaultSieveBound = 1'000'000;

const std::vector<u32>& default_primes() {
  static const std::vector<u32> primes = primes_upto(kDefaultSieveBound);
  return primes;
}

}  // namespace

std::vector<u32> primes_upto(u32 limit) {
  std::vector<u32> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<u32>(p));
    for (u64 q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

Factorization factorize(u64 n) { return factorize(n, default_primes()); }

Factorization factorize(u64 n, const std::vector<u32>& primes) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.value = n;
  u64 rest = n;
  for (u32 p : primes) {
    if (static_cast<u64>(p) * p > rest) break;
    if (rest % p == 0) {
      u32 e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      f.factors.push_back({p, e});
    }
  }
  if (rest > 1) {
    const u64 table_end = primes.empty() ? 1 : primes.back();
    if (table_end * table_end >= rest) {
      // no prime <= sqrt(rest) divides the cofactor, so it is prime
      f.factors.push_back({rest, 1});
    } else {
      // beyond the sieve square: plain trial division past the table end
      if (rest % 2 == 0) {  // only reachable with an empty/tiny table
        u32 e = 0;
        while (rest % 2 == 0) {
          rest /= 2;
          ++e;
        }
        f.factors.push_back({2, e});
      }
      u64 q = table_end < 3 ? 3 : table_end + 2;
      if (q % 2 == 0) ++q;
      for (; q * q <= rest; q += 2) {
        if (rest % q == 0) {
          u32 e = 0;
          while (rest % q == 0) {
            rest /= q;
            ++e;
          }
          f.factors.push_back({q, e});
        }
      }
      if (rest > 1) f.factors.push_back({rest, 1});
    }
  }
  return f;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (u32 k = 1; k <= e; ++k) {
      pk = checked_mul(pk, p);
      for (std::size_t i = 0; i < base; ++i) divs.push_back(checked_mul(divs[i], pk));
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Classical classical(u64 n) { return classical(factorize(n)); }

Classical classical(const Factorization& f) {
  Classical c{1, 1, 1};
  for (const auto& [p, e] : f.factors) {
    c.tau = checked_mul(c.tau, e + 1);
    c.phi = checked_mul(c.phi, checked_mul(checked_pow(p, e - 1), p - 1));
    c.mobius = (e > 1) ? 0 : -c.mobius;
  }
  return c;
}

u64 tau(u64 n) { return classical(n).tau; }
u64 phi(u64 n) { return classical(n).phi; }
int mobius(u64 n) { return classical(n).mobius; }

SieveTables::SieveTables(u64 limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("SieveTables: limit must be positive");
  if (limit > 0xFFFFFFFFull) throw std::invalid_argument("SieveTables: limit too large");
  const std::size_t size = static_cast<std::size_t>(limit) + 1;
  spf_.assign(size, 0);
  tau_.assign(size, 0);
  phi_.assign(size, 0);
  mu_.assign(size, 0);
  spf_[1] = 1;
  tau_[1] = 1;
  phi_[1] = 1;
  mu_[1] = 1;

  // linear sieve; cnt[n] = exponent of spf(n) in n, carried to fill tau
  std::vector<u32> primes;
  std::vector<u32> cnt(size, 0);
  for (u64 n = 2; n <= limit; ++n) {
    if (spf_[n] == 0) {
      spf_[n] = static_cast<u32>(n);
      primes.push_back(static_cast<u32>(n));
      tau_[n] = 2;
      phi_[n] = n - 1;
      mu_[n] = -1;
      cnt[n] = 1;
    }
    for (u32 p : primes) {
      const u64 np = n * p;
      if (p > spf_[n] || np > limit) break;
      spf_[np] = p;
      if (n % p == 0) {
        cnt[np] = cnt[n] + 1;
        tau_[np] = tau_[n] / (cnt[n] + 1) * (cnt[n] + 2);
        phi_[np] = phi_[n] * p;
        mu_[np] = 0;
      } else {
        cnt[np] = 1;
        tau_[np] = tau_[n] * 2;
        phi_[np] = phi_[n] * (p - 1);
        mu_[np] = -mu_[n];
      }
    }
  }
}

Factorization SieveTables::factorize(u64 n) const {
  check(n);
  Factorization f;
  f.value = n;
  while (n > 1) {
    const u64 p = spf_[n];
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

}  // namespace zrings::arith
