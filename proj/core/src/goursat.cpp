#include "zrings/goursat.hpp"

#include <algorithm>
#include <tuple>

namespace zrings::goursat {

void validate_ambient(const Ambient& ambient) {
  if (ambient.m == 0 || ambient.n == 0)
    throw std::invalid_argument("Ambient: moduli must be positive");
}

std::vector<std::string> tuple_violations(const GoursatTuple& t) {
  std::vector<std::string> bad;
  validate_ambient(t.ambient);
  const auto [m, n] = t.ambient;
  auto divides = [](u64 x, u64 y) { return x != 0 && y % x == 0; };
  if (t.a == 0 || !divides(t.a, m)) bad.push_back("a must divide m");
  if (t.b == 0 || !divides(t.b, t.a)) bad.push_back("b must divide a");
  if (t.c == 0 || !divides(t.c, n)) bad.push_back("c must divide n");
  if (t.d == 0 || !divides(t.d, t.c)) bad.push_back("d must divide c");
  if (!bad.empty()) return bad;
  if (t.a / t.b != t.c / t.d) {
    bad.push_back("a/b must equal c/d");
    return bad;
  }
  const u64 e = t.a / t.b;
  if (t.ell < 1 || t.ell > e) bad.push_back("ell must satisfy 1 <= ell <= a/b");
  if (std::gcd(t.ell, e) != 1) bad.push_back("ell must be coprime to a/b");
  return bad;
}

bool tuple_valid(const GoursatTuple& t) { return tuple_violations(t).empty(); }

namespace {

void require_valid(const GoursatTuple& t) {
  auto bad = tuple_violations(t);
  if (!bad.empty()) throw std::invalid_argument("GoursatTuple: " + bad.front());
}

}  // namespace

std::vector<GoursatTuple> enumerate_tuples(const Ambient& ambient) {
  validate_ambient(ambient);
  const auto [m, n] = ambient;
  std::vector<GoursatTuple> tuples;
  // a | m, e | a (b = a/e), then d | n with c = d*e | n, then ell coprime to e
  for (u64 a : arith::divisors(m)) {
    for (u64 e : arith::divisors(a)) {
      const u64 b = a / e;
      for (u64 d : arith::divisors(n)) {
        const u64 c = checked_mul(d, e);
        if (c == 0 || n % c != 0) continue;
        for (u64 ell = 1; ell <= e; ++ell) {
          if (std::gcd(ell, e) != 1) continue;
          tuples.push_back({ambient, a, b, c, d, ell});
        }
      }
    }
  }
  std::sort(tuples.begin(), tuples.end(), [](const GoursatTuple& x, const GoursatTuple& y) {
    return std::tie(x.a, x.b, x.c, x.d, x.ell) < std::tie(y.a, y.b, y.c, y.d, y.ell);
  });
  return tuples;
}

SubgroupPoints materialize(const GoursatTuple& t) {
  require_valid(t);
  const auto [m, n] = t.ambient;
  const u64 xstep = m / t.a;
  const u64 yshear = checked_mul(t.ell, n / t.c) % n;
  const u64 ystep = n / t.d;
  const u64 order = checked_mul(t.a, t.d);
  SubgroupPoints s;
  s.ambient = t.ambient;
  s.points.reserve(order);
  for (u64 i = 0; i < t.a; ++i) {
    const u64 x = checked_mul(i, xstep) % m;
    const u64 ybase = checked_mul(i, yshear) % n;
    for (u64 j = 0; j < t.d; ++j) {
      const u64 y = checked_add(ybase, checked_mul(j, ystep) % n) % n;
      s.points.emplace_back(x, y);
    }
  }
  std::sort(s.points.begin(), s.points.end());
  s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
  if (s.points.size() != order)
    throw std::logic_error("materialize: point set is not of order a*d");
  return s;
}

bool SubgroupPoints::contains(u64 x, u64 y) const {
  return std::binary_search(points.begin(), points.end(), std::pair{x, y});
}

bool is_subring(const GoursatTuple& t) {
  require_valid(t);
  const auto [m, n] = t.ambient;
  // c/d | ell*n/c - m/a, evaluated sign-agnostically over signed integers
  const i64 lhs = checked_sub(checked_mul(static_cast<i64>(t.ell), static_cast<i64>(n / t.c)),
                              static_cast<i64>(m / t.a));
  const i64 mod = static_cast<i64>(t.c / t.d);
  return lhs % mod == 0;
}

bool is_unital(const GoursatTuple& t) {
  require_valid(t);
  return t.a == t.ambient.m && t.c == t.ambient.n && t.ell == 1;
}

bool is_ideal(const GoursatTuple& t) {
  require_valid(t);
  return t.a == t.b && t.c == t.d && t.ell == 1;
}

ClassificationReport classify(const GoursatTuple& t) {
  require_valid(t);
  ClassificationReport r;
  r.is_subring = is_subring(t);
  r.is_unital = is_unital(t);
  r.is_ideal = is_ideal(t);
  const u64 d1 = std::gcd(t.b, t.d);
  const u64 d2 = checked_lcm(t.a, t.c);
  r.is_cyclic = d1 == 1;
  r.order = checked_mul(t.a, t.d);
  r.exponent = d2;
  r.invariant_factors = {d1, d2};
  return r;
}

u64 count_coprime_congruence(i64 a, i64 b, u64 n) {
  if (n == 0) throw std::invalid_argument("count_coprime_congruence: n must be positive");
  const i64 nn = static_cast<i64>(n);
  const u64 ra = static_cast<u64>(((a % nn) + nn) % nn);
  const u64 rb = static_cast<u64>(((b % nn) + nn) % nn);
  const u64 da = std::gcd(ra, n);  // gcd(0, n) = n
  const u64 db = std::gcd(rb, n);
  if (da != db) return 0;
  const u64 phi_n = arith::phi(n);
  const u64 phi_q = arith::phi(n / da);
  if (phi_n % phi_q != 0)
    throw std::logic_error("count_coprime_congruence: phi(n/d) must divide phi(n)");
  return phi_n / phi_q;
}

}  // namespace zrings::goursat
