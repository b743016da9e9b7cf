#pragma once

// Exact truncated two-variable Dirichlet series and summatory evaluation.
//
// A series here is the integer coefficient array {coeff(m,n) : m,n <= X}.
// The building block zeta_block(a,b,s,X) truncates zeta(a*z + b*w - s),
// which carries coefficient k^s at position (k^a, k^b).  Products and
// exact quotients of such blocks reproduce, coefficientwise,
//
//   h      :  zeta(z) zeta(w) zeta(z+w) zeta(2z+2w-1) / (zeta(z+2w) zeta(2z+w))
//   N_s    :  the above times zeta(z) zeta(w)
//   N_us   :  zeta(z) zeta(w) zeta(z+w)
//   s      :  zeta^2(z) zeta^2(w) zeta(z+w-1) / zeta(z+w)
//
// The summatory side evaluates S(x) = sum_{m,n<=x} N_s(m,n) exactly and
// fits the subleading constants of the model x^2 (A1 log^2 x + A2 log x
// + A3), with A1 = zeta(2)/zeta(3) fixed.

#include <map>
#include <vector>

#include "zrings/arith.hpp"

namespace zrings::dirichlet {

inline constexpr double kPi = 3.141592653589793;
inline constexpr double kZeta2 = kPi * kPi / 6.0;
// Apery's constant zeta(3), standard value to 15 decimal digits.
inline constexpr double kZeta3 = 1.202056903159594;
// Leading coefficient of the subring summatory asymptotic.
inline constexpr double kSubringLeadingConstant = kZeta2 / kZeta3;
// Best known bounds on the exponent theta in the Dirichlet divisor
// problem, sum_{n<=x} tau(n) = x log x + (2C-1)x + O(x^(theta+eps)).
// The error term of the subring summatory is O(x^(1+theta+eps)); that
// exponent is documented here, not verified empirically.
inline constexpr double kDivisorExponentLower = 0.25;
inline constexpr double kDivisorExponentUpper = 517.0 / 1648.0;

class BivariateSeries {
 public:
  explicit BivariateSeries(u64 bound);

  u64 bound() const { return bound_; }
  i64 coeff(u64 m, u64 n) const;      // absent keys are 0
  void set(u64 m, u64 n, i64 value);  // value 0 erases
  void add(u64 m, u64 n, i64 delta);
  u64 nonzero_count() const;

  // nonzero coefficients grouped by first index, both levels ascending
  const std::map<u64, std::map<u64, i64>>& rows() const { return rows_; }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  u64 bound_;
  std::map<u64, std::map<u64, i64>> rows_;
};

// coeff(1,1) = 1, everything else 0.
BivariateSeries identity_series(u64 bound);

// Truncation of zeta(za*z + wb*w - shift): coefficient k^shift at
// (k^za, k^wb) for every k with both k^za <= X and k^wb <= X.
// (za, wb) = (0, 0) is rejected.
BivariateSeries zeta_block(u32 za, u32 wb, u32 shift, u64 bound);

// Two-variable Dirichlet convolution, exact integers, equal bounds.
BivariateSeries multiply(const BivariateSeries& F, const BivariateSeries& G);

// The unique H with multiply(G, H) = F up to the bound; requires
// G(1,1) = 1 so elimination stays in exact integers.
BivariateSeries divide(const BivariateSeries& F, const BivariateSeries& G);

// Coefficients of zeta(z+w) zeta(2z+2w-1) / (zeta(z+2w) zeta(2z+w)),
// the factor with N_s = f * tau * tau under convolution.
BivariateSeries f_coefficients(u64 bound);

// Exact S(x) = sum_{m,n<=x} N_s(m,n), evaluated as
// sum_{i,j<=x} h(i,j) floor(x/i) floor(x/j) over a sieved grid.
u64 partial_sum_subrings(u64 x, unsigned jobs = 1);

struct AsymptoticReport {
  u64 x = 0;
  u64 exact_sum = 0;
  double a1 = kSubringLeadingConstant;
  double fitted_a2 = 0;
  double fitted_a3 = 0;
  double residual = 0;  // exact_sum - x^2 (a1 log^2 x + a2 log x + a3)
};

// Exact sums for each x plus a least-squares fit of (A2, A3) across the
// sample with A1 fixed.  Requires at least 3 ascending sample points.
std::vector<AsymptoticReport> asymptotic_compare(const std::vector<u64>& xs, unsigned jobs = 1);

}  // namespace zrings::dirichlet
