#include "zrings/oracle.hpp"

#include <array>
#include <cstring>
#include <set>

namespace zrings::oracle {

namespace {

// Flat element encoding k = x*n + y with per-axis addition tables; keeps
// the closure loop free of divisions.
struct AdditionContext {
  u64 m, n, total;
  std::vector<u32> xs, ys;    // decode tables
  std::vector<u32> addx, addy;

  explicit AdditionContext(const Ambient& amb)
      : m(amb.m), n(amb.n), total(checked_mul(amb.m, amb.n)) {
    xs.resize(total);
    ys.resize(total);
    for (u64 k = 0; k < total; ++k) {
      xs[k] = static_cast<u32>(k / n);
      ys[k] = static_cast<u32>(k % n);
    }
    addx.resize(m * m);
    for (u64 x1 = 0; x1 < m; ++x1)
      for (u64 x2 = 0; x2 < m; ++x2) {
        u64 s = x1 + x2;
        if (s >= m) s -= m;
        addx[x1 * m + x2] = static_cast<u32>(s);
      }
    addy.resize(n * n);
    for (u64 y1 = 0; y1 < n; ++y1)
      for (u64 y2 = 0; y2 < n; ++y2) {
        u64 s = y1 + y2;
        if (s >= n) s -= n;
        addy[y1 * n + y2] = static_cast<u32>(s);
      }
  }

  u32 add(u32 k1, u32 k2) const {
    return static_cast<u32>(static_cast<u64>(addx[static_cast<u64>(xs[k1]) * m + xs[k2]]) * n +
                            addy[static_cast<u64>(ys[k1]) * n + ys[k2]]);
  }
};

// Closes the seed set under addition: the reachable set from the seeds
// via +g for each seed generator g is exactly the generated subgroup.
// Membership bits double as the dedup key.
void close_under_addition(const AdditionContext& ctx, const u32* gens, std::size_t gen_count,
                          std::vector<u64>& bits, std::vector<u32>& stack) {
  std::memset(bits.data(), 0, bits.size() * sizeof(u64));
  stack.clear();
  auto test = [&](u32 k) { return (bits[k >> 6] >> (k & 63)) & 1u; };
  auto set = [&](u32 k) { bits[k >> 6] |= u64{1} << (k & 63); };
  for (std::size_t g = 0; g < gen_count; ++g) {
    if (!test(gens[g])) {
      set(gens[g]);
      stack.push_back(gens[g]);
    }
  }
  while (!stack.empty()) {
    const u32 k = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < gen_count; ++g) {
      const u32 t = ctx.add(k, gens[g]);
      if (!test(t)) {
        set(t);
        stack.push_back(t);
      }
    }
  }
}

std::vector<bool> membership(const SubgroupPoints& s) {
  const u64 total = checked_mul(s.ambient.m, s.ambient.n);
  std::vector<bool> in(total, false);
  for (const auto& [x, y] : s.points) in[x * s.ambient.n + y] = true;
  return in;
}

}  // namespace

std::vector<SubgroupPoints> brute_subgroups(const Ambient& ambient, const BruteOptions& options) {
  goursat::validate_ambient(ambient);
  const u64 total = checked_mul(ambient.m, ambient.n);
  if (total > options.max_product)
    throw std::invalid_argument("brute_subgroups: m*n exceeds the cost bound");

  const AdditionContext ctx(ambient);
  const std::size_t words = static_cast<std::size_t>((total + 63) / 64);
  std::vector<u64> bits(words);
  std::vector<u32> stack;
  stack.reserve(total);
  std::set<std::vector<u64>> seen;

  std::array<u32, 3> gens{};
  for (u32 g1 = 0; g1 < total; ++g1)
    for (u32 g2 = g1; g2 < total; ++g2) {
      gens[0] = g1;
      gens[1] = g2;
      close_under_addition(ctx, gens.data(), 2, bits, stack);
      seen.insert(bits);
    }
  if (options.three_generators) {
    for (u32 g1 = 0; g1 < total; ++g1)
      for (u32 g2 = g1; g2 < total; ++g2)
        for (u32 g3 = g2; g3 < total; ++g3) {
          gens = {g1, g2, g3};
          close_under_addition(ctx, gens.data(), 3, bits, stack);
          seen.insert(bits);
        }
  }

  std::vector<SubgroupPoints> result;
  result.reserve(seen.size());
  for (const auto& key : seen) {
    SubgroupPoints s;
    s.ambient = ambient;
    for (u64 k = 0; k < total; ++k)
      if ((key[k >> 6] >> (k & 63)) & 1u) s.points.emplace_back(ctx.xs[k], ctx.ys[k]);
    result.push_back(std::move(s));
  }
  return result;
}

bool check_multiplicative_closure(const SubgroupPoints& s) {
  goursat::validate_ambient(s.ambient);
  const auto [m, n] = s.ambient;
  const auto in = membership(s);
  for (const auto& [ux, uy] : s.points)
    for (const auto& [vx, vy] : s.points)
      if (!in[(ux * vx % m) * n + (uy * vy % n)]) return false;
  return true;
}

bool check_unity(const SubgroupPoints& s) {
  goursat::validate_ambient(s.ambient);
  return s.contains(1 % s.ambient.m, 1 % s.ambient.n);
}

bool check_ideal(const SubgroupPoints& s) {
  goursat::validate_ambient(s.ambient);
  const auto [m, n] = s.ambient;
  const auto in = membership(s);
  for (const auto& [ux, uy] : s.points)
    for (u64 rx = 0; rx < m; ++rx)
      for (u64 ry = 0; ry < n; ++ry)
        if (!in[(ux * rx % m) * n + (uy * ry % n)]) return false;
  return true;
}

BruteCounts tally_counts(const std::vector<SubgroupPoints>& subgroups) {
  BruteCounts counts;
  counts.subgroups = subgroups.size();
  for (const auto& s : subgroups) {
    const bool closed = check_multiplicative_closure(s);
    if (closed) ++counts.subrings;
    if (closed && check_unity(s)) ++counts.unital;
    if (check_ideal(s)) ++counts.ideals;
  }
  return counts;
}

BruteCounts brute_counts(const Ambient& ambient, const BruteOptions& options) {
  return tally_counts(brute_subgroups(ambient, options));
}

}  // namespace zrings::oracle
