#include "zrings/dirichlet.hpp"

#include <cmath>
#include <numeric>

#include "parallel_util.hpp"
#include "zrings/counting.hpp"

namespace zrings::dirichlet {

namespace {

void check_index(u64 m, u64 n, u64 bound) {
  if (m == 0 || n == 0 || m > bound || n > bound)
    throw std::invalid_argument("BivariateSeries: index out of range");
}

// k^e, saturating just past cap instead of overflowing
u64 pow_capped(u64 k, u32 e, u64 cap) {
  u64 r = 1;
  while (e-- > 0) {
    if (r > cap / k) return cap + 1;
    r *= k;
  }
  return r;
}

}  // namespace

BivariateSeries::BivariateSeries(u64 bound) : bound_(bound) {
  if (bound == 0) throw std::invalid_argument("BivariateSeries: bound must be positive");
}

i64 BivariateSeries::coeff(u64 m, u64 n) const {
  check_index(m, n, bound_);
  const auto row = rows_.find(m);
  if (row == rows_.end()) return 0;
  const auto it = row->second.find(n);
  return it == row->second.end() ? 0 : it->second;
}

void BivariateSeries::set(u64 m, u64 n, i64 value) {
  check_index(m, n, bound_);
  if (value == 0) {
    const auto row = rows_.find(m);
    if (row != rows_.end()) {
      row->second.erase(n);
      if (row->second.empty()) rows_.erase(row);
    }
    return;
  }
  rows_[m][n] = value;
}

void BivariateSeries::add(u64 m, u64 n, i64 delta) { set(m, n, checked_add(coeff(m, n), delta)); }

u64 BivariateSeries::nonzero_count() const {
  u64 count = 0;
  for (const auto& [m, row] : rows_) count += row.size();
  return count;
}

BivariateSeries identity_series(u64 bound) {
  BivariateSeries s(bound);
  s.set(1, 1, 1);
  return s;
}

BivariateSeries zeta_block(u32 za, u32 wb, u32 shift, u64 bound) {
  if (za == 0 && wb == 0)
    throw std::invalid_argument("zeta_block: exponents (0,0) do not form a zeta factor");
  BivariateSeries s(bound);
  for (u64 k = 1;; ++k) {
    const u64 pm = pow_capped(k, za, bound);
    const u64 pn = pow_capped(k, wb, bound);
    if (pm > bound || pn > bound) break;
    s.add(pm, pn, static_cast<i64>(checked_pow(k, shift)));
  }
  return s;
}

BivariateSeries multiply(const BivariateSeries& F, const BivariateSeries& G) {
  if (F.bound() != G.bound()) throw std::invalid_argument("multiply: bound mismatch");
  const u64 X = F.bound();
  BivariateSeries R(X);
  for (const auto& [a, rowF] : F.rows()) {
    for (const auto& [b, rowG] : G.rows()) {
      if (a > X / b) break;  // a*b > X, and b only grows
      const u64 m = a * b;
      for (const auto& [c, fv] : rowF) {
        for (const auto& [d, gv] : rowG) {
          if (c > X / d) break;
          R.add(m, c * d, checked_mul(fv, gv));
        }
      }
    }
  }
  return R;
}

BivariateSeries divide(const BivariateSeries& F, const BivariateSeries& G) {
  if (F.bound() != G.bound()) throw std::invalid_argument("divide: bound mismatch");
  if (G.coeff(1, 1) != 1)
    throw std::invalid_argument("divide: divisor must have leading coefficient 1");
  const u64 X = F.bound();
  BivariateSeries H(X);
  // eliminate in lexicographic (m,n) order; every needed H(m/a, n/c) with
  // (a,c) != (1,1) is already final
  for (u64 m = 1; m <= X; ++m) {
    for (u64 n = 1; n <= X; ++n) {
      i64 acc = F.coeff(m, n);
      for (const auto& [a, rowG] : G.rows()) {
        if (a > m) break;
        if (m % a != 0) continue;
        for (const auto& [c, gv] : rowG) {
          if (c > n) break;
          if (n % c != 0 || (a == 1 && c == 1)) continue;
          acc = checked_sub(acc, checked_mul(gv, H.coeff(m / a, n / c)));
        }
      }
      if (acc != 0) H.set(m, n, acc);
    }
  }
  return H;
}

BivariateSeries f_coefficients(u64 bound) {
  const auto numerator = multiply(zeta_block(1, 1, 0, bound), zeta_block(2, 2, 1, bound));
  const auto denominator = multiply(zeta_block(1, 2, 0, bound), zeta_block(2, 1, 0, bound));
  return divide(numerator, denominator);
}

u64 partial_sum_subrings(u64 x, unsigned jobs) {
  if (x == 0) throw std::invalid_argument("partial_sum_subrings: x must be positive");
  const arith::SieveTables sieve(x);
  std::vector<u64> partials(std::max(1u, jobs), 0);
  detail::parallel_chunks(1, x + 1, jobs, [&](unsigned chunk, u64 lo, u64 hi) {
    u64 sum = 0;
    for (u64 i = lo; i < hi; ++i) {
      const u64 wi = x / i;
      for (u64 j = 1; j <= x; ++j) {
        u64 g = std::gcd(i, j);
        u64 hij = 1;
        while (g > 1) {
          const u64 p = sieve.smallest_prime_factor(g);
          u32 alpha = 0, beta = 0;
          for (u64 v = i; v % p == 0; v /= p) ++alpha;
          for (u64 v = j; v % p == 0; v /= p) ++beta;
          hij = checked_mul(hij, counting::h_prime_power(p, alpha, beta));
          while (g % p == 0) g /= p;
        }
        sum = checked_add(sum, checked_mul(hij, checked_mul(wi, x / j)));
      }
    }
    partials[chunk] = sum;
  });
  u64 total = 0;
  for (u64 part : partials) total = checked_add(total, part);
  return total;
}

std::vector<AsymptoticReport> asymptotic_compare(const std::vector<u64>& xs, unsigned jobs) {
  if (xs.size() < 3)
    throw std::invalid_argument("asymptotic_compare: need at least 3 sample points to fit");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] >= xs[i + 1])
      throw std::invalid_argument("asymptotic_compare: sample points must be strictly ascending");

  std::vector<AsymptoticReport> reports(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    reports[i].x = xs[i];
    reports[i].exact_sum = partial_sum_subrings(xs[i], jobs);
  }

  // ordinary least squares for (A2, A3) in the model
  //   S(x) = A1 x^2 log^2 x + A2 x^2 log x + A3 x^2,
  // i.e. regress r = S - A1 x^2 log^2 x on u = x^2 log x and v = x^2
  const double a1 = kSubringLeadingConstant;
  double suu = 0, suv = 0, svv = 0, sur = 0, svr = 0;
  for (const auto& r : reports) {
    const double L = std::log(static_cast<double>(r.x));
    const double xx = static_cast<double>(r.x) * static_cast<double>(r.x);
    const double u = xx * L;
    const double v = xx;
    const double resid = static_cast<double>(r.exact_sum) - a1 * xx * L * L;
    suu += u * u;
    suv += u * v;
    svv += v * v;
    sur += u * resid;
    svr += v * resid;
  }
  const double det = suu * svv - suv * suv;
  const double a2 = (sur * svv - svr * suv) / det;
  const double a3 = (suu * svr - suv * sur) / det;

  for (auto& r : reports) {
    const double L = std::log(static_cast<double>(r.x));
    const double xx = static_cast<double>(r.x) * static_cast<double>(r.x);
    r.a1 = a1;
    r.fitted_a2 = a2;
    r.fitted_a3 = a3;
    r.residual = static_cast<double>(r.exact_sum) - xx * (a1 * L * L + a2 * L + a3);
  }
  return reports;
}

}  // namespace zrings::dirichlet
