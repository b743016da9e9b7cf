#pragma once

// Command layer behind the zrings executable.  Each cmd_* renders one
// subcommand to `out` (data) and `err` (diagnostics) and returns the
// process exit code.  Output is deterministic: identical requests give
// byte-identical output in every format.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zrings/arith.hpp"

namespace zrings::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerificationFailure = 2,
  kExitBudgetExceeded = 3,
};

enum class Format { kPlain, kJsonLines, kCsv };
enum class TupleFilter { kAll, kSubring, kUnital, kIdeal, kCyclic };
enum class SeriesCheck { kAll, kH, kSubrings, kUnital, kSubgroups, kConvolution };

std::optional<Format> parse_format(const std::string& name);
std::optional<TupleFilter> parse_filter(const std::string& name);
std::optional<SeriesCheck> parse_series_check(const std::string& name);

struct CountRequest {
  u64 m = 1;
  u64 n = 1;
  Format format = Format::kPlain;
};
int cmd_count(const CountRequest& req, std::ostream& out, std::ostream& err);

struct EnumerateRequest {
  u64 m = 1;
  u64 n = 1;
  TupleFilter filter = TupleFilter::kAll;
  Format format = Format::kPlain;
  u64 max_product = 10000;  // budget on m*n
};
int cmd_enumerate(const EnumerateRequest& req, std::ostream& out, std::ostream& err);

struct ShowRequest {
  u64 m = 1, n = 1;
  u64 a = 1, b = 1, c = 1, d = 1, ell = 1;
  bool unicode = false;
  Format format = Format::kPlain;
  u64 max_product = 10000;  // budget on the m*n character grid
};
int cmd_show(const ShowRequest& req, std::ostream& out, std::ostream& err);

struct VerifyRequest {
  u64 max_mn = 1;      // sweep every ambient with m*n <= max_mn
  u64 budget = 600;    // brute-force cost guard
  unsigned jobs = 1;
  Format format = Format::kPlain;
};
int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err);

struct SeriesRequest {
  u64 bound = 1;       // truncation bound X
  u64 budget = 256;
  SeriesCheck check = SeriesCheck::kAll;
  Format format = Format::kPlain;
};
int cmd_series(const SeriesRequest& req, std::ostream& out, std::ostream& err);

struct SumRequest {
  std::vector<u64> xs;
  u64 budget = 20000;  // largest admissible x
  unsigned jobs = 1;
  Format format = Format::kPlain;
};
int cmd_sum(const SumRequest& req, std::ostream& out, std::ostream& err);

}  // namespace zrings::cli
