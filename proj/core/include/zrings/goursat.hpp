#pragma once

// Subgroups of (Z_m x Z_n, +) via the Goursat quintuple parametrization.
//
// A quintuple (a,b,c,d,ell) with
//
//     a | m,  b | a,  c | n,  d | c,  a/b = c/d = e,
//     1 <= ell <= e,  gcd(ell, e) = 1
//
// corresponds bijectively to the subgroup
//
//     K = { (i*m/a, i*ell*n/c + j*n/d) : 0 <= i < a, 0 <= j < d },
//
// which has order a*d, exponent lcm(a,c) and invariant factor
// decomposition Z_gcd(b,d) x Z_lcm(a,c).  The ring-theoretic flags fall
// out of the quintuple alone:
//
//     subring        <=>  c/d  divides  ell*n/c - m/a
//     unital subring <=>  a = m, c = n, ell = 1
//     ideal          <=>  a = b, c = d, ell = 1

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "zrings/arith.hpp"

namespace zrings::goursat {

struct Ambient {
  u64 m = 1;
  u64 n = 1;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

// Throws std::invalid_argument unless m, n >= 1.
void validate_ambient(const Ambient& ambient);

struct GoursatTuple {
  Ambient ambient;
  u64 a = 1, b = 1, c = 1, d = 1, ell = 1;

  u64 e() const { return a / b; }

  friend bool operator==(const GoursatTuple&, const GoursatTuple&) = default;
};

// Human-readable descriptions of every violated membership condition;
// empty means the tuple parametrizes a subgroup of Z_m x Z_n.
std::vector<std::string> tuple_violations(const GoursatTuple& t);
bool tuple_valid(const GoursatTuple& t);

// Point set of one subgroup, canonical form: 0 <= x < m, 0 <= y < n,
// lexicographically sorted and duplicate-free.
struct SubgroupPoints {
  Ambient ambient;
  std::vector<std::pair<u64, u64>> points;

  bool contains(u64 x, u64 y) const;
  friend bool operator==(const SubgroupPoints&, const SubgroupPoints&) = default;
};

struct ClassificationReport {
  bool is_subring = false;
  bool is_unital = false;
  bool is_ideal = false;
  bool is_cyclic = false;
  u64 order = 1;
  u64 exponent = 1;
  std::pair<u64, u64> invariant_factors{1, 1};  // (gcd(b,d), lcm(a,c)), first | second

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

// All of J_{m,n}, sorted lexicographically by (a,b,c,d,ell).  The length
// equals the subgroup count s(m,n).
std::vector<GoursatTuple> enumerate_tuples(const Ambient& ambient);

// The explicit a*d-element point set of the subgroup K_{a,b,c,d,ell}.
SubgroupPoints materialize(const GoursatTuple& t);

bool is_subring(const GoursatTuple& t);
bool is_unital(const GoursatTuple& t);
bool is_ideal(const GoursatTuple& t);

// Flags plus order/exponent/invariant factors, all O(1) from the tuple.
ClassificationReport classify(const GoursatTuple& t);

// Number of x mod n with a*x = b (mod n) and gcd(x,n) = 1:
// phi(n)/phi(n/d) when gcd(a,n) = gcd(b,n) = d, otherwise 0.
u64 count_coprime_congruence(i64 a, i64 b, u64 n);

}  // namespace zrings::goursat
