#pragma once

// Brute-force ground truth, independent of the quintuple parametrization
// and of every counting formula.  Subgroups are found by closing seed
// generator sets under addition; ring properties are tested by exhaustive
// multiplication.  Strictly verification-scale: the default cost guard
// rejects ambients with m*n > 600.

#include "zrings/goursat.hpp"

namespace zrings::oracle {

using goursat::Ambient;
using goursat::SubgroupPoints;

struct BruteOptions {
  // Rejects ambients with m*n above this (the pair sweep is quadratic in
  // m*n and each closure is linear in it).
  u64 max_product = 600;
  // Also sweep 3-element generator sets.  Every subgroup of Z_m x Z_n is
  // generated by two elements, so this finds nothing new; it exists to
  // cross-check that structural fact.  Cubic in m*n: keep ambients tiny.
  bool three_generators = false;
};

struct BruteCounts {
  u64 subgroups = 0;
  u64 subrings = 0;
  u64 unital = 0;
  u64 ideals = 0;
  friend bool operator==(const BruteCounts&, const BruteCounts&) = default;
};

// Every additive subgroup of Z_m x Z_n, duplicate-free, each in canonical
// sorted point form, ordered deterministically.
std::vector<SubgroupPoints> brute_subgroups(const Ambient& ambient,
                                            const BruteOptions& options = {});

// true iff u*v stays in s for all u, v in s (componentwise, mod (m,n)).
bool check_multiplicative_closure(const SubgroupPoints& s);

// true iff (1 mod m, 1 mod n) lies in s.
bool check_unity(const SubgroupPoints& s);

// true iff u*r stays in s for all u in s and all r in Z_m x Z_n.
bool check_ideal(const SubgroupPoints& s);

BruteCounts tally_counts(const std::vector<SubgroupPoints>& subgroups);

BruteCounts brute_counts(const Ambient& ambient, const BruteOptions& options = {});

}  // namespace zrings::oracle
