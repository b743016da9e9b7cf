// Acceptance suite: runs every exit criterion end to end and prints one
// pass/fail line per criterion.  Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zrings/counting.hpp"
#include "zrings/dirichlet.hpp"
#include "zrings/goursat.hpp"
#include "zrings/oracle.hpp"

using namespace zrings;

namespace {

int failures = 0;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int index, const char* label, bool pass, double seconds,
            const std::string& detail = "") {
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.3fs)%s%s\n", pass ? "PASS" : "FAIL", index, label,
              seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

// --------------------------------------------------------------------------

void criterion_1_exact_counts() {
  arith::factorize(360);  // warm the shared prime table before timing
  const Stopwatch watch;
  const bool values = counting::count_subgroups(12, 18) == 80 &&
                      counting::count_subrings(12, 18) == 49 &&
                      counting::count_unital_subrings(12, 18) == 4 &&
                      counting::count_ideals(12, 18) == 36;
  const double secs = watch.seconds();
  report(1, "exact counts for (12,18) are (80,49,4,36) in under 1 ms", values && secs < 0.001,
         secs);
}

void criterion_2_local_factors() {
  const Stopwatch watch;
  const bool ok =
      counting::ns_prime_power(2, 1, 2) == 7 && counting::ns_prime_power(3, 1, 2) == 7 &&
      counting::s_prime_power(2, 1, 2) == 8 && counting::s_prime_power(3, 1, 2) == 10;
  report(2, "local factors ns(2,1,2)=ns(3,1,2)=7, s(2,1,2)=8, s(3,1,2)=10", ok, watch.seconds());
}

void criterion_3_oracle_equivalence() {
  const Stopwatch watch;
  u64 mismatches = 0;
  std::string first;
  for (u64 m = 1; m <= 24; ++m) {
    for (u64 n = 1; n <= 24; ++n) {
      const goursat::Ambient ambient{m, n};
      const auto subgroups = oracle::brute_subgroups(ambient);
      const auto brute = oracle::tally_counts(subgroups);
      const auto tuples = goursat::enumerate_tuples(ambient);

      oracle::BruteCounts from_tuples{tuples.size(), 0, 0, 0};
      std::set<std::vector<std::pair<u64, u64>>> keys;
      for (const auto& s : subgroups) keys.insert(s.points);
      bool points_match = tuples.size() == subgroups.size();
      for (const auto& t : tuples) {
        if (goursat::is_subring(t)) ++from_tuples.subrings;
        if (goursat::is_unital(t)) ++from_tuples.unital;
        if (goursat::is_ideal(t)) ++from_tuples.ideals;
        if (points_match && keys.find(goursat::materialize(t).points) == keys.end())
          points_match = false;
      }

      const oracle::BruteCounts formulas{
          counting::count_subgroups(m, n), counting::count_subrings(m, n),
          counting::count_unital_subrings(m, n), counting::count_ideals(m, n)};
      if (!(brute == formulas && brute == from_tuples && points_match)) {
        ++mismatches;
        if (first.empty()) first = "first mismatch at (" + std::to_string(m) + "," +
                                   std::to_string(n) + ")";
      }
    }
  }
  const double secs = watch.seconds();
  report(3, "oracle equivalence sweep over all m,n <= 24 in under 5 min",
         mismatches == 0 && secs < 300.0, secs, first);
}

void criterion_4_prime_power_forms() {
  const Stopwatch watch;
  bool ok = true;
  std::string detail;
  for (u64 p : {2, 3, 5, 7}) {
    for (u32 alpha = 0; alpha <= 6 && ok; ++alpha) {
      for (u32 beta = alpha; beta <= 6 && ok; ++beta) {
        const u64 h_direct =
            counting::h_divisor_sum(checked_pow(p, alpha), checked_pow(p, beta));
        u64 ns_double = 0;
        for (u32 j = 0; j <= alpha; ++j)
          for (u32 k = 0; k <= beta; ++k) ns_double += counting::h_prime_power(p, j, k);
        ok = counting::h_prime_power(p, alpha, beta) == h_direct &&
             counting::ns_prime_power(p, alpha, beta) == ns_double &&
             counting::ns_prime_power_rational(p, alpha, beta) == ns_double;
        if (!ok)
          detail = "mismatch at p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) +
                   " beta=" + std::to_string(beta);
      }
    }
  }
  report(4, "prime-power forms: h and ns (sum and rational) match the divisor sums", ok,
         watch.seconds(), detail);
}

void criterion_5_worked_examples() {
  const Stopwatch watch;
  const auto K = goursat::materialize({{12, 18}, 6, 2, 18, 6, 1});
  const bool k_ok = K.contains(2, 7) && K.contains(4, 5) &&
                    !K.contains((2 * 4) % 12, (7 * 5) % 18) &&  // (8,17) outside K
                    !oracle::check_multiplicative_closure(K);

  const goursat::GoursatTuple lt{{12, 18}, 6, 2, 18, 6, 2};
  const auto L = goursat::materialize(lt);
  const auto lr = goursat::classify(lt);
  const bool l_ok = oracle::check_multiplicative_closure(L) && L.contains(2, 5) &&
                    !L.contains((2 * 1) % 12, (5 * 3) % 18) &&  // (2,15) outside L
                    !oracle::check_ideal(L) && lr.order == 36 &&
                    lr.invariant_factors == std::pair<u64, u64>{2, 18};
  report(5, "worked examples: K fails closure at (2,7)*(4,5), L is a non-ideal subring",
         k_ok && l_ok, watch.seconds());
}

void criterion_6_series_identities() {
  const Stopwatch watch;
  bool ok = true;
  std::string detail;
  {
    const u64 X = 128;
    auto zb = [X](u32 a, u32 b, u32 s) { return dirichlet::zeta_block(a, b, s, X); };
    const auto zz = zb(1, 0, 0), zw = zb(0, 1, 0);
    const auto h_series =
        dirichlet::divide(dirichlet::multiply(dirichlet::multiply(zz, zw),
                                              dirichlet::multiply(zb(1, 1, 0), zb(2, 2, 1))),
                          dirichlet::multiply(zb(1, 2, 0), zb(2, 1, 0)));
    const auto ns_series = dirichlet::multiply(h_series, dirichlet::multiply(zz, zw));
    const auto nus_series = dirichlet::multiply(dirichlet::multiply(zz, zw), zb(1, 1, 0));
    const auto s_series = dirichlet::divide(
        dirichlet::multiply(dirichlet::multiply(dirichlet::multiply(zz, zz),
                                                dirichlet::multiply(zw, zw)),
                            zb(1, 1, 1)),
        zb(1, 1, 0));
    for (u64 m = 1; m <= X && ok; ++m)
      for (u64 n = 1; n <= X && ok; ++n) {
        ok = h_series.coeff(m, n) == static_cast<i64>(counting::h(m, n)) &&
             ns_series.coeff(m, n) == static_cast<i64>(counting::count_subrings(m, n)) &&
             nus_series.coeff(m, n) ==
                 static_cast<i64>(counting::count_unital_subrings(m, n)) &&
             s_series.coeff(m, n) == static_cast<i64>(counting::count_subgroups(m, n));
        if (!ok) detail = "zeta-quotient mismatch at (" + std::to_string(m) + "," +
                          std::to_string(n) + ")";
      }
  }
  if (ok) {
    const u64 X = 200;
    auto zb = [X](u32 a, u32 b, u32 s) { return dirichlet::zeta_block(a, b, s, X); };
    const auto tau_tau = dirichlet::multiply(
        dirichlet::multiply(zb(1, 0, 0), zb(1, 0, 0)),
        dirichlet::multiply(zb(0, 1, 0), zb(0, 1, 0)));
    const auto convo = dirichlet::multiply(dirichlet::f_coefficients(X), tau_tau);
    for (u64 m = 1; m <= X && ok; ++m)
      for (u64 n = 1; n <= X && ok; ++n) {
        ok = convo.coeff(m, n) == static_cast<i64>(counting::count_subrings(m, n));
        if (!ok) detail = "convolution mismatch at (" + std::to_string(m) + "," +
                          std::to_string(n) + ")";
      }
  }
  const double secs = watch.seconds();
  report(6, "series identities at X=128 plus convolution at X=200 in under 1 min",
         ok && secs < 60.0, secs, detail);
}

void criterion_7_summatory_consistency() {
  const Stopwatch watch;
  bool ok = true;
  std::string detail;

  u64 naive = 0;
  std::vector<u64> ns_row(61, 0);
  for (u64 x = 1; x <= 60 && ok; ++x) {
    // extend the naive square sum incrementally
    naive += counting::count_subrings(x, x);
    for (u64 k = 1; k < x; ++k)
      naive += counting::count_subrings(k, x) + counting::count_subrings(x, k);
    if (dirichlet::partial_sum_subrings(x) != naive) {
      ok = false;
      detail = "partial sum mismatch at x=" + std::to_string(x);
    }
  }

  if (ok) {
    const arith::SieveTables sieve(500);
    u64 pair_sum = 0;
    for (u64 x = 1; x <= 500 && ok; ++x) {
      pair_sum += sieve.tau(x);  // the (x,x) diagonal term, gcd(x,x) = x
      for (u64 k = 1; k < x; ++k) pair_sum += 2 * sieve.tau(std::gcd(k, x));
      u64 squares = 0;
      for (u64 d = 1; d <= x; ++d) squares += (x / d) * (x / d);
      if (pair_sum != squares) {
        ok = false;
        detail = "tau(gcd) summatory identity fails at x=" + std::to_string(x);
      }
    }
  }
  report(7, "summatory sums match the naive double sum (x<=60) and the tau(gcd) identity (x<=500)",
         ok, watch.seconds(), detail);
}

void criterion_8_asymptotic_trend() {
  const Stopwatch watch;
  const std::vector<u64> xs{256, 512, 1024, 2048, 4096};
  const auto reports = dirichlet::asymptotic_compare(xs);
  std::vector<double> normalized;
  std::string detail = "normalized residuals:";
  for (const auto& r : reports) {
    const double xx = static_cast<double>(r.x) * static_cast<double>(r.x);
    normalized.push_back(std::fabs(r.residual) / xx);
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.4f", normalized.back());
    detail += buf;
  }
  int inversions = 0;
  for (std::size_t i = 0; i + 1 < normalized.size(); ++i)
    if (normalized[i + 1] > normalized[i]) ++inversions;
  const bool trend = inversions <= 1;
  const bool tail = normalized.back() < 0.05;
  const double secs = watch.seconds();
  report(8, "asymptotic fit: residual/x^2 nonincreasing (<=1 inversion), below 0.05 at x=4096",
         trend && tail && secs < 600.0, secs, detail);
}

void criterion_9_property_suites() {
  const Stopwatch watch;
  bool ok = true;
  std::string detail;

  // symmetry of h and N_s
  for (u64 i = 1; i <= 200 && ok; ++i)
    for (u64 j = i; j <= 200 && ok; ++j) {
      ok = counting::h(i, j) == counting::h(j, i) &&
           counting::count_subrings(i, j) == counting::count_subrings(j, i);
      if (!ok) detail = "symmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }

  // two-variable multiplicativity on random coprime splittings
  if (ok) {
    std::mt19937_64 rng(1234567);
    std::uniform_int_distribution<u64> dist(1, 300);
    int tested = 0;
    while (tested < 500 && ok) {
      const u64 m1 = dist(rng), m2 = dist(rng), n1 = dist(rng), n2 = dist(rng);
      if (std::gcd(m1 * m2, n1 * n2) != 1) continue;
      ++tested;
      ok = counting::h(m1 * n1, m2 * n2) == counting::h(m1, m2) * counting::h(n1, n2) &&
           counting::count_subrings(m1 * n1, m2 * n2) ==
               counting::count_subrings(m1, m2) * counting::count_subrings(n1, n2);
      if (!ok) detail = "multiplicativity fails";
    }
  }

  // count chain
  if (ok) {
    for (u64 m = 1; m <= 100 && ok; ++m)
      for (u64 n = 1; n <= 100 && ok; ++n) {
        const u64 t_gcd = arith::tau(std::gcd(m, n));
        const u64 t_mn = arith::tau(m * n);
        const u64 t_prod = arith::tau(m) * arith::tau(n);
        const u64 ns = counting::count_subrings(m, n);
        const u64 s = counting::count_subgroups(m, n);
        ok = t_gcd <= t_mn && t_mn <= t_prod && t_prod <= ns && ns <= s;
        if (!ok) detail = "count chain fails at (" + std::to_string(m) + "," +
                          std::to_string(n) + ")";
      }
  }

  // restricted linear congruence count vs exhaustive search
  if (ok) {
    for (u64 n = 1; n <= 100 && ok; ++n)
      for (u64 a = 0; a < n && ok; ++a)
        for (u64 b = 0; b < n && ok; ++b) {
          u64 brute = 0;
          for (u64 x = 0; x < n; ++x)
            if (std::gcd(x, n) == 1 && (a * x) % n == b) ++brute;
          ok = goursat::count_coprime_congruence(static_cast<i64>(a), static_cast<i64>(b), n) ==
               brute;
          if (!ok) detail = "congruence count fails at a=" + std::to_string(a) +
                            " b=" + std::to_string(b) + " n=" + std::to_string(n);
        }
  }

  report(9, "property suites: symmetry, multiplicativity, count chain, congruence counts", ok,
         watch.seconds(), detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite: subgroup/subring/ideal structure of Z_m x Z_n\n");
  criterion_1_exact_counts();
  criterion_2_local_factors();
  criterion_3_oracle_equivalence();
  criterion_4_prime_power_forms();
  criterion_5_worked_examples();
  criterion_6_series_identities();
  criterion_7_summatory_consistency();
  criterion_8_asymptotic_trend();
  criterion_9_property_suites();
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
