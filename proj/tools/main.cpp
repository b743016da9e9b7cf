// zrings: counting, enumeration and verification for the subgroup,
// subring and ideal structure of Z_m x Z_n.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zrings/commands.hpp"

namespace cli = zrings::cli;

int main(int argc, char** argv) {
  CLI::App app{"subgroups, subrings, unital subrings and ideals of Z_m x Z_n"};
  app.require_subcommand(1);

  const auto format_values = CLI::IsMember({"plain", "json", "csv"});
  int rc = cli::kExitOk;

  // count m n
  auto* count = app.add_subcommand("count", "closed-form counts for one ambient ring");
  cli::CountRequest count_req;
  std::string count_format = "plain";
  count->add_option("m", count_req.m, "first modulus")->required()->check(CLI::PositiveNumber);
  count->add_option("n", count_req.n, "second modulus")->required()->check(CLI::PositiveNumber);
  count->add_option("--format", count_format, "plain|json|csv")->check(format_values);
  count->callback([&] {
    count_req.format = *cli::parse_format(count_format);
    rc = cli::cmd_count(count_req, std::cout, std::cerr);
  });

  // enumerate m n [--filter]
  auto* enumerate = app.add_subcommand("enumerate", "stream all parametrizing tuples");
  cli::EnumerateRequest enum_req;
  std::string enum_format = "plain";
  std::string enum_filter = "all";
  enumerate->add_option("m", enum_req.m, "first modulus")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("n", enum_req.n, "second modulus")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--filter", enum_filter, "all|subring|unital|ideal|cyclic")
      ->check(CLI::IsMember({"all", "subring", "unital", "ideal", "cyclic"}));
  enumerate->add_option("--format", enum_format, "plain|json|csv")->check(format_values);
  enumerate->add_option("--max-mn", enum_req.max_product, "budget on m*n")
      ->check(CLI::PositiveNumber)
      ->envname("ZRINGS_MAX_MN");
  enumerate->callback([&] {
    enum_req.format = *cli::parse_format(enum_format);
    enum_req.filter = *cli::parse_filter(enum_filter);
    rc = cli::cmd_enumerate(enum_req, std::cout, std::cerr);
  });

  // show m n a b c d ell
  auto* show = app.add_subcommand("show", "render one subgroup as a character grid");
  cli::ShowRequest show_req;
  std::string show_format = "plain";
  show->add_option("m", show_req.m, "first modulus")->required()->check(CLI::PositiveNumber);
  show->add_option("n", show_req.n, "second modulus")->required()->check(CLI::PositiveNumber);
  show->add_option("a", show_req.a, "tuple entry a")->required();
  show->add_option("b", show_req.b, "tuple entry b")->required();
  show->add_option("c", show_req.c, "tuple entry c")->required();
  show->add_option("d", show_req.d, "tuple entry d")->required();
  show->add_option("ell", show_req.ell, "tuple entry ell")->required();
  show->add_flag("--unicode", show_req.unicode, "draw with filled squares and middle dots");
  show->add_option("--format", show_format, "plain|json|csv")->check(format_values);
  show->add_option("--max-mn", show_req.max_product, "budget on the grid size m*n")
      ->check(CLI::PositiveNumber)
      ->envname("ZRINGS_MAX_MN");
  show->callback([&] {
    show_req.format = *cli::parse_format(show_format);
    rc = cli::cmd_show(show_req, std::cout, std::cerr);
  });

  // verify max_mn
  auto* verify = app.add_subcommand(
      "verify", "brute-force vs formulas vs tuple enumeration over all m*n <= max_mn");
  cli::VerifyRequest verify_req;
  std::string verify_format = "plain";
  verify->add_option("max_mn", verify_req.max_mn, "sweep every ambient with m*n <= max_mn")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-mn", verify_req.budget, "brute-force cost guard")
      ->check(CLI::PositiveNumber)
      ->envname("ZRINGS_MAX_MN");
  verify->add_option("--jobs", verify_req.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format, "plain|json|csv")->check(format_values);
  verify->callback([&] {
    verify_req.format = *cli::parse_format(verify_format);
    rc = cli::cmd_verify(verify_req, std::cout, std::cerr);
  });

  // series X [--check]
  auto* series = app.add_subcommand("series", "coefficient identity checks at truncation X");
  cli::SeriesRequest series_req;
  std::string series_format = "plain";
  std::string series_check = "all";
  series->add_option("X", series_req.bound, "truncation bound")
      ->required()
      ->check(CLI::PositiveNumber);
  series->add_option("--check", series_check, "all|h|ns|nus|s|convo")
      ->check(CLI::IsMember({"all", "h", "ns", "nus", "s", "convo"}));
  series->add_option("--bound", series_req.budget, "budget on the truncation bound")
      ->check(CLI::PositiveNumber)
      ->envname("ZRINGS_BOUND");
  series->add_option("--format", series_format, "plain|json|csv")->check(format_values);
  series->callback([&] {
    series_req.format = *cli::parse_format(series_format);
    series_req.check = *cli::parse_series_check(series_check);
    rc = cli::cmd_series(series_req, std::cout, std::cerr);
  });

  // sum x...
  auto* sum = app.add_subcommand("sum", "exact subring summatory values and asymptotic fit");
  cli::SumRequest sum_req;
  std::string sum_format = "plain";
  sum->add_option("x", sum_req.xs, "sample points (3+ ascending values enable the fit)")
      ->required()
      ->check(CLI::PositiveNumber);
  sum->add_option("--bound", sum_req.budget, "budget on the largest x")
      ->check(CLI::PositiveNumber)
      ->envname("ZRINGS_BOUND");
  sum->add_option("--jobs", sum_req.jobs, "worker threads")->check(CLI::PositiveNumber);
  sum->add_option("--format", sum_format, "plain|json|csv")->check(format_values);
  sum->callback([&] {
    sum_req.format = *cli::parse_format(sum_format);
    rc = cli::cmd_sum(sum_req, std::cout, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
  return rc;
}
