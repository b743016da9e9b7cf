#include "zrings/commands.hpp"

#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "parallel_util.hpp"
#include "zrings/counting.hpp"
#include "zrings/dirichlet.hpp"
#include "zrings/goursat.hpp"
#include "zrings/oracle.hpp"

namespace zrings::cli {

namespace {

const char* bool_word(bool v) { return v ? "yes" : "no"; }
const char* bool_token(bool v) { return v ? "true" : "false"; }

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

unsigned digits(u64 v) {
  unsigned d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

bool check_positive(u64 m, u64 n, std::ostream& err) {
  if (m == 0 || n == 0) {
    err << "error: moduli must be positive integers\n";
    return false;
  }
  return true;
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "plain") return Format::kPlain;
  if (name == "json") return Format::kJsonLines;
  if (name == "csv") return Format::kCsv;
  return std::nullopt;
}

std::optional<TupleFilter> parse_filter(const std::string& name) {
  if (name == "all") return TupleFilter::kAll;
  if (name == "subring") return TupleFilter::kSubring;
  if (name == "unital") return TupleFilter::kUnital;
  if (name == "ideal") return TupleFilter::kIdeal;
  if (name == "cyclic") return TupleFilter::kCyclic;
  return std::nullopt;
}

std::optional<SeriesCheck> parse_series_check(const std::string& name) {
  if (name == "all") return SeriesCheck::kAll;
  if (name == "h") return SeriesCheck::kH;
  if (name == "ns") return SeriesCheck::kSubrings;
  if (name == "nus") return SeriesCheck::kUnital;
  if (name == "s") return SeriesCheck::kSubgroups;
  if (name == "convo") return SeriesCheck::kConvolution;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// count

int cmd_count(const CountRequest& req, std::ostream& out, std::ostream& err) {
  if (!check_positive(req.m, req.n, err)) return kExitUsage;
  const u64 s = counting::count_subgroups(req.m, req.n);
  const u64 ns = counting::count_subrings(req.m, req.n);
  const u64 nus = counting::count_unital_subrings(req.m, req.n);
  const u64 ideals = counting::count_ideals(req.m, req.n);
  switch (req.format) {
    case Format::kPlain:
      out << "(Z_" << req.m << " x Z_" << req.n << ") subgroups=" << s << " subrings=" << ns
          << " unital=" << nus << " ideals=" << ideals << "\n";
      break;
    case Format::kJsonLines:
      out << "{\"command\":\"count\",\"m\":" << req.m << ",\"n\":" << req.n << ",\"s\":" << s
          << ",\"N_s\":" << ns << ",\"N_us\":" << nus << ",\"ideals\":" << ideals << "}\n";
      break;
    case Format::kCsv:
      out << "command,m,n,s,N_s,N_us,ideals\n";
      out << "count," << req.m << "," << req.n << "," << s << "," << ns << "," << nus << ","
          << ideals << "\n";
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate

namespace {

const char* filter_name(TupleFilter f) {
  switch (f) {
    case TupleFilter::kAll: return "all";
    case TupleFilter::kSubring: return "subring";
    case TupleFilter::kUnital: return "unital";
    case TupleFilter::kIdeal: return "ideal";
    case TupleFilter::kCyclic: return "cyclic";
  }
  return "all";
}

bool filter_accepts(TupleFilter f, const goursat::ClassificationReport& r) {
  switch (f) {
    case TupleFilter::kAll: return true;
    case TupleFilter::kSubring: return r.is_subring;
    case TupleFilter::kUnital: return r.is_unital;
    case TupleFilter::kIdeal: return r.is_ideal;
    case TupleFilter::kCyclic: return r.is_cyclic;
  }
  return true;
}

void print_tuple_plain(std::ostream& out, const goursat::GoursatTuple& t,
                       const goursat::ClassificationReport& r) {
  out << "(a,b,c,d,ell)=(" << t.a << "," << t.b << "," << t.c << "," << t.d << "," << t.ell
      << ") order=" << r.order << " exponent=" << r.exponent << " invariants=("
      << r.invariant_factors.first << "," << r.invariant_factors.second
      << ") cyclic=" << bool_word(r.is_cyclic) << " subring=" << bool_word(r.is_subring)
      << " unital=" << bool_word(r.is_unital) << " ideal=" << bool_word(r.is_ideal) << "\n";
}

void print_tuple_json(std::ostream& out, const char* command, const goursat::GoursatTuple& t,
                      const goursat::ClassificationReport& r, const char* extra_key = nullptr,
                      const char* extra_value = nullptr) {
  out << "{\"command\":\"" << command << "\",\"m\":" << t.ambient.m << ",\"n\":" << t.ambient.n;
  if (extra_key) out << ",\"" << extra_key << "\":\"" << extra_value << "\"";
  out << ",\"a\":" << t.a << ",\"b\":" << t.b << ",\"c\":" << t.c << ",\"d\":" << t.d
      << ",\"ell\":" << t.ell << ",\"e\":" << t.e() << ",\"order\":" << r.order
      << ",\"exponent\":" << r.exponent << ",\"invariant_factors\":["
      << r.invariant_factors.first << "," << r.invariant_factors.second
      << "],\"cyclic\":" << bool_token(r.is_cyclic) << ",\"subring\":" << bool_token(r.is_subring)
      << ",\"unital\":" << bool_token(r.is_unital) << ",\"ideal\":" << bool_token(r.is_ideal)
      << "}\n";
}

void print_tuple_csv_row(std::ostream& out, const char* command, const char* filter,
                         const goursat::GoursatTuple& t, const goursat::ClassificationReport& r) {
  out << command << "," << t.ambient.m << "," << t.ambient.n << "," << filter << "," << t.a << ","
      << t.b << "," << t.c << "," << t.d << "," << t.ell << "," << t.e() << "," << r.order << ","
      << r.exponent << "," << r.invariant_factors.first << "," << r.invariant_factors.second << ","
      << bool_token(r.is_cyclic) << "," << bool_token(r.is_subring) << ","
      << bool_token(r.is_unital) << "," << bool_token(r.is_ideal) << "\n";
}

constexpr const char* kTupleCsvHeader =
    "command,m,n,filter,a,b,c,d,ell,e,order,exponent,invariant_first,invariant_second,"
    "cyclic,subring,unital,ideal";

}  // namespace

int cmd_enumerate(const EnumerateRequest& req, std::ostream& out, std::ostream& err) {
  if (!check_positive(req.m, req.n, err)) return kExitUsage;
  if (req.m > req.max_product / req.n) {
    err << "error: m*n exceeds the budget of " << req.max_product << "\n";
    return kExitBudgetExceeded;
  }
  const auto tuples = goursat::enumerate_tuples({req.m, req.n});
  if (req.format == Format::kCsv) out << kTupleCsvHeader << "\n";
  u64 total = 0;
  for (const auto& t : tuples) {
    const auto report = goursat::classify(t);
    if (!filter_accepts(req.filter, report)) continue;
    ++total;
    switch (req.format) {
      case Format::kPlain:
        print_tuple_plain(out, t, report);
        break;
      case Format::kJsonLines:
        print_tuple_json(out, "enumerate", t, report, "filter", filter_name(req.filter));
        break;
      case Format::kCsv:
        print_tuple_csv_row(out, "enumerate", filter_name(req.filter), t, report);
        break;
    }
  }
  if (req.format == Format::kPlain) out << "total=" << total << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// show

int cmd_show(const ShowRequest& req, std::ostream& out, std::ostream& err) {
  if (!check_positive(req.m, req.n, err)) return kExitUsage;
  if (req.m > req.max_product / req.n) {
    err << "error: the m*n grid exceeds the budget of " << req.max_product << "\n";
    return kExitBudgetExceeded;
  }
  const goursat::GoursatTuple t{{req.m, req.n}, req.a, req.b, req.c, req.d, req.ell};
  const auto violations = goursat::tuple_violations(t);
  if (!violations.empty()) {
    err << "error: (a,b,c,d,ell)=(" << req.a << "," << req.b << "," << req.c << "," << req.d << ","
        << req.ell << ") does not parametrize a subgroup of Z_" << req.m << " x Z_" << req.n
        << ":\n";
    for (const auto& v : violations) err << "  - " << v << "\n";
    return kExitUsage;
  }
  const auto points = goursat::materialize(t);
  const auto report = goursat::classify(t);

  switch (req.format) {
    case Format::kPlain: {
      // row 0 at the bottom, markers right-aligned in fixed-width cells
      const unsigned cell = digits(req.m - 1);
      const unsigned label = digits(req.n - 1);
      const char* mark = req.unicode ? "■" : "#";
      const char* dot = req.unicode ? "·" : ".";
      for (u64 row = req.n; row-- > 0;) {
        std::string line = std::to_string(row);
        line.insert(0, label - line.size(), ' ');
        for (u64 x = 0; x < req.m; ++x) {
          line += ' ';
          line.append(cell - 1, ' ');
          line += points.contains(x, row) ? mark : dot;
        }
        out << line << "\n";
      }
      std::string axis(label, ' ');
      for (u64 x = 0; x < req.m; ++x) {
        const std::string lab = std::to_string(x);
        axis += ' ';
        axis.append(cell - lab.size(), ' ');
        axis += lab;
      }
      out << axis << "\n";
      print_tuple_plain(out, t, report);
      break;
    }
    case Format::kJsonLines: {
      std::ostringstream line;
      line << "{\"command\":\"show\",\"m\":" << req.m << ",\"n\":" << req.n << ",\"a\":" << req.a
           << ",\"b\":" << req.b << ",\"c\":" << req.c << ",\"d\":" << req.d << ",\"ell\":"
           << req.ell << ",\"order\":" << report.order << ",\"exponent\":" << report.exponent
           << ",\"invariant_factors\":[" << report.invariant_factors.first << ","
           << report.invariant_factors.second << "],\"cyclic\":" << bool_token(report.is_cyclic)
           << ",\"subring\":" << bool_token(report.is_subring)
           << ",\"unital\":" << bool_token(report.is_unital)
           << ",\"ideal\":" << bool_token(report.is_ideal) << ",\"points\":[";
      bool first = true;
      for (const auto& [x, y] : points.points) {
        if (!first) line << ",";
        first = false;
        line << "[" << x << "," << y << "]";
      }
      line << "]}";
      out << line.str() << "\n";
      break;
    }
    case Format::kCsv: {
      out << "command,m,n,a,b,c,d,ell,x,y\n";
      for (const auto& [x, y] : points.points)
        out << "show," << req.m << "," << req.n << "," << req.a << "," << req.b << "," << req.c
            << "," << req.d << "," << req.ell << "," << x << "," << y << "\n";
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct VerifyRow {
  u64 m = 0, n = 0;
  oracle::BruteCounts brute;
  oracle::BruteCounts formula;
  oracle::BruteCounts tuples;
  bool points_match = false;

  bool ok() const { return brute == formula && brute == tuples && points_match; }
};

VerifyRow verify_one(u64 m, u64 n, u64 guard) {
  VerifyRow row;
  row.m = m;
  row.n = n;
  const goursat::Ambient ambient{m, n};
  const auto subgroups = oracle::brute_subgroups(ambient, {.max_product = guard});
  row.brute = oracle::tally_counts(subgroups);

  row.formula = {counting::count_subgroups(m, n), counting::count_subrings(m, n),
                 counting::count_unital_subrings(m, n), counting::count_ideals(m, n)};

  const auto tuples = goursat::enumerate_tuples(ambient);
  row.tuples.subgroups = tuples.size();
  std::set<std::vector<std::pair<u64, u64>>> brute_keys;
  for (const auto& s : subgroups) brute_keys.insert(s.points);
  bool all_found = true;
  for (const auto& t : tuples) {
    if (goursat::is_subring(t)) ++row.tuples.subrings;
    if (goursat::is_unital(t)) ++row.tuples.unital;
    if (goursat::is_ideal(t)) ++row.tuples.ideals;
    if (all_found && brute_keys.find(goursat::materialize(t).points) == brute_keys.end())
      all_found = false;
  }
  row.points_match = all_found && tuples.size() == subgroups.size();
  return row;
}

void print_counts_plain(std::ostream& out, const char* label, const oracle::BruteCounts& c) {
  out << label << "{s=" << c.subgroups << ",ns=" << c.subrings << ",nus=" << c.unital
      << ",ideals=" << c.ideals << "}";
}

}  // namespace

int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
  if (req.max_mn == 0) {
    err << "error: max_mn must be a positive integer\n";
    return kExitUsage;
  }
  if (req.max_mn > req.budget) {
    err << "error: max_mn " << req.max_mn << " exceeds the budget of " << req.budget << "\n";
    return kExitBudgetExceeded;
  }

  std::vector<std::pair<u64, u64>> ambients;
  for (u64 m = 1; m <= req.max_mn; ++m)
    for (u64 n = 1; m * n <= req.max_mn; ++n) ambients.emplace_back(m, n);

  std::vector<VerifyRow> rows(ambients.size());
  detail::parallel_chunks(0, ambients.size(), req.jobs, [&](unsigned, u64 lo, u64 hi) {
    for (u64 i = lo; i < hi; ++i)
      rows[i] = verify_one(ambients[i].first, ambients[i].second, req.budget);
  });

  u64 failures = 0;
  const VerifyRow* first_bad = nullptr;
  for (const auto& row : rows) {
    if (!row.ok()) {
      ++failures;
      if (!first_bad) first_bad = &row;
    }
    switch (req.format) {
      case Format::kPlain:
        break;  // summary below
      case Format::kJsonLines:
        out << "{\"command\":\"verify\",\"m\":" << row.m << ",\"n\":" << row.n
            << ",\"ok\":" << bool_token(row.ok()) << ",\"brute\":[" << row.brute.subgroups << ","
            << row.brute.subrings << "," << row.brute.unital << "," << row.brute.ideals
            << "],\"formula\":[" << row.formula.subgroups << "," << row.formula.subrings << ","
            << row.formula.unital << "," << row.formula.ideals << "],\"tuples\":["
            << row.tuples.subgroups << "," << row.tuples.subrings << "," << row.tuples.unital
            << "," << row.tuples.ideals << "],\"points_match\":" << bool_token(row.points_match)
            << "}\n";
        break;
      case Format::kCsv:
        break;  // header first, rows below
    }
  }
  if (req.format == Format::kCsv) {
    out << "command,m,n,ok,brute_s,brute_ns,brute_nus,brute_ideals,formula_s,formula_ns,"
           "formula_nus,formula_ideals,tuple_s,tuple_ns,tuple_nus,tuple_ideals,points_match\n";
    for (const auto& row : rows)
      out << "verify," << row.m << "," << row.n << "," << bool_token(row.ok()) << ","
          << row.brute.subgroups << "," << row.brute.subrings << "," << row.brute.unital << ","
          << row.brute.ideals << "," << row.formula.subgroups << "," << row.formula.subrings
          << "," << row.formula.unital << "," << row.formula.ideals << ","
          << row.tuples.subgroups << "," << row.tuples.subrings << "," << row.tuples.unital
          << "," << row.tuples.ideals << "," << bool_token(row.points_match) << "\n";
  }
  if (req.format == Format::kPlain) {
    if (first_bad) {
      out << "mismatch (m,n)=(" << first_bad->m << "," << first_bad->n << "): ";
      print_counts_plain(out, "brute", first_bad->brute);
      out << " ";
      print_counts_plain(out, "formula", first_bad->formula);
      out << " ";
      print_counts_plain(out, "tuples", first_bad->tuples);
      out << " points=" << (first_bad->points_match ? "match" : "differ") << "\n";
    }
    out << "verify max_mn=" << req.max_mn << " ambients=" << rows.size()
        << " failures=" << failures << "\n";
  }
  return failures == 0 ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// series

namespace {

struct CheckOutcome {
  const char* name;
  bool pass = true;
  u64 bad_m = 0, bad_n = 0;
  i64 expected = 0, actual = 0;
};

template <typename Expected>
CheckOutcome compare_series(const char* name, const dirichlet::BivariateSeries& series,
                            Expected&& expected) {
  CheckOutcome outcome{name};
  const u64 X = series.bound();
  for (u64 m = 1; m <= X; ++m)
    for (u64 n = 1; n <= X; ++n) {
      const i64 want = static_cast<i64>(expected(m, n));
      const i64 got = series.coeff(m, n);
      if (want != got) {
        outcome.pass = false;
        outcome.bad_m = m;
        outcome.bad_n = n;
        outcome.expected = want;
        outcome.actual = got;
        return outcome;
      }
    }
  return outcome;
}

}  // namespace

int cmd_series(const SeriesRequest& req, std::ostream& out, std::ostream& err) {
  if (req.bound == 0) {
    err << "error: the truncation bound must be a positive integer\n";
    return kExitUsage;
  }
  if (req.bound > req.budget) {
    err << "error: bound " << req.bound << " exceeds the budget of " << req.budget << "\n";
    return kExitBudgetExceeded;
  }
  const u64 X = req.bound;
  auto zeta = [X](u32 a, u32 b, u32 s) { return dirichlet::zeta_block(a, b, s, X); };
  auto wants = [&](SeriesCheck c) {
    return req.check == SeriesCheck::kAll || req.check == c;
  };

  std::vector<CheckOutcome> outcomes;
  const auto zeta_z = zeta(1, 0, 0);
  const auto zeta_w = zeta(0, 1, 0);
  if (wants(SeriesCheck::kH) || wants(SeriesCheck::kSubrings)) {
    const auto h_series =
        dirichlet::divide(dirichlet::multiply(dirichlet::multiply(zeta_z, zeta_w),
                                              dirichlet::multiply(zeta(1, 1, 0), zeta(2, 2, 1))),
                          dirichlet::multiply(zeta(1, 2, 0), zeta(2, 1, 0)));
    if (wants(SeriesCheck::kH))
      outcomes.push_back(compare_series("h", h_series, counting::h));
    if (wants(SeriesCheck::kSubrings)) {
      const auto ns_series = dirichlet::multiply(h_series, dirichlet::multiply(zeta_z, zeta_w));
      outcomes.push_back(compare_series("ns", ns_series, counting::count_subrings));
    }
  }
  if (wants(SeriesCheck::kUnital)) {
    const auto nus_series =
        dirichlet::multiply(dirichlet::multiply(zeta_z, zeta_w), zeta(1, 1, 0));
    outcomes.push_back(compare_series("nus", nus_series, counting::count_unital_subrings));
  }
  if (wants(SeriesCheck::kSubgroups)) {
    const auto s_series = dirichlet::divide(
        dirichlet::multiply(
            dirichlet::multiply(dirichlet::multiply(zeta_z, zeta_z),
                                dirichlet::multiply(zeta_w, zeta_w)),
            zeta(1, 1, 1)),
        zeta(1, 1, 0));
    outcomes.push_back(compare_series("s", s_series, counting::count_subgroups));
  }
  if (wants(SeriesCheck::kConvolution)) {
    const auto tau_tau = dirichlet::multiply(dirichlet::multiply(zeta_z, zeta_z),
                                             dirichlet::multiply(zeta_w, zeta_w));
    const auto convo = dirichlet::multiply(dirichlet::f_coefficients(X), tau_tau);
    outcomes.push_back(compare_series("convo", convo, counting::count_subrings));
  }

  bool all_pass = true;
  for (const auto& o : outcomes) {
    if (!o.pass) all_pass = false;
    switch (req.format) {
      case Format::kPlain:
        out << o.name << " identity: " << (o.pass ? "pass" : "FAIL");
        if (!o.pass)
          out << " first mismatch at (" << o.bad_m << "," << o.bad_n << ") expected "
              << o.expected << " got " << o.actual;
        out << "\n";
        break;
      case Format::kJsonLines:
        out << "{\"command\":\"series\",\"X\":" << X << ",\"check\":\"" << o.name
            << "\",\"pass\":" << bool_token(o.pass);
        if (!o.pass)
          out << ",\"first_mismatch\":[" << o.bad_m << "," << o.bad_n << "],\"expected\":"
              << o.expected << ",\"actual\":" << o.actual;
        out << "}\n";
        break;
      case Format::kCsv:
        break;  // header first, rows below
    }
  }
  if (req.format == Format::kCsv) {
    out << "command,X,check,pass,mismatch_m,mismatch_n,expected,actual\n";
    for (const auto& o : outcomes) {
      out << "series," << X << "," << o.name << "," << bool_token(o.pass) << ",";
      if (o.pass)
        out << ",,,";
      else
        out << o.bad_m << "," << o.bad_n << "," << o.expected << "," << o.actual;
      out << "\n";
    }
  }
  return all_pass ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// sum

int cmd_sum(const SumRequest& req, std::ostream& out, std::ostream& err) {
  if (req.xs.empty()) {
    err << "error: at least one x is required\n";
    return kExitUsage;
  }
  for (u64 x : req.xs) {
    if (x == 0) {
      err << "error: sample points must be positive integers\n";
      return kExitUsage;
    }
    if (x > req.budget) {
      err << "error: x=" << x << " exceeds the budget of " << req.budget << "\n";
      return kExitBudgetExceeded;
    }
  }

  const bool fit = req.xs.size() >= 3;
  std::vector<dirichlet::AsymptoticReport> reports;
  if (fit) {
    try {
      reports = dirichlet::asymptotic_compare(req.xs, req.jobs);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    for (u64 x : req.xs) {
      dirichlet::AsymptoticReport r;
      r.x = x;
      r.exact_sum = dirichlet::partial_sum_subrings(x, req.jobs);
      reports.push_back(r);
    }
  }

  if (req.format == Format::kCsv) {
    out << (fit ? "command,x,exact_sum,a1,fitted_a2,fitted_a3,residual\n"
                : "command,x,exact_sum\n");
  }
  for (const auto& r : reports) {
    switch (req.format) {
      case Format::kPlain:
        out << "x=" << r.x << " exact=" << r.exact_sum;
        if (fit)
          out << " a1=" << fmt_double(r.a1) << " a2=" << fmt_double(r.fitted_a2)
              << " a3=" << fmt_double(r.fitted_a3) << " residual=" << fmt_double(r.residual);
        out << "\n";
        break;
      case Format::kJsonLines:
        out << "{\"command\":\"sum\",\"x\":" << r.x << ",\"exact_sum\":" << r.exact_sum;
        if (fit)
          out << ",\"a1\":" << fmt_double(r.a1) << ",\"fitted_a2\":" << fmt_double(r.fitted_a2)
              << ",\"fitted_a3\":" << fmt_double(r.fitted_a3)
              << ",\"residual\":" << fmt_double(r.residual);
        out << "}\n";
        break;
      case Format::kCsv:
        out << "sum," << r.x << "," << r.exact_sum;
        if (fit)
          out << "," << fmt_double(r.a1) << "," << fmt_double(r.fitted_a2) << ","
              << fmt_double(r.fitted_a3) << "," << fmt_double(r.residual);
        out << "\n";
        break;
    }
  }
  return kExitOk;
}

}  // namespace zrings::cli
