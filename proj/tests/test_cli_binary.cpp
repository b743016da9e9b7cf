// End-to-end checks of the installed command line: argument handling,
// exit codes, environment overrides, byte-identical reruns.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef ZRINGS_CLI_PATH
#error "ZRINGS_CLI_PATH must point at the zrings executable"
#endif

namespace {

struct Run {
  int exit_code;
  std::string output;
};

Run run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(ZRINGS_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

Run run_cli_env(const std::string& env, const std::string& args) {
  FILE* pipe = popen((env + " " + std::string(ZRINGS_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("count subcommand end to end") {
  const auto json = run_cli("count 12 18 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output ==
        "{\"command\":\"count\",\"m\":12,\"n\":18,\"s\":80,\"N_s\":49,\"N_us\":4,\"ideals\":36}\n");

  const auto plain = run_cli("count 4 6");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output == "(Z_4 x Z_6) subgroups=16 subrings=14 unital=2 ideals=12\n");
}

TEST_CASE("identical invocations produce identical bytes") {
  const auto first = run_cli("enumerate 12 18 --filter subring --format csv");
  const auto second = run_cli("enumerate 12 18 --filter subring --format csv");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("frobnicate 3 4").exit_code == 1);
  CHECK(run_cli("count").exit_code == 1);
  CHECK(run_cli("count 12 0").exit_code == 1);
  CHECK(run_cli("count twelve 18").exit_code == 1);
  CHECK(run_cli("enumerate 12 18 --filter prime").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("invalid tuples are rejected with the violated condition") {
  const auto r = run_cli("show 12 18 6 2 18 6 3", true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("coprime") != std::string::npos);
}

TEST_CASE("verification and budget exit codes") {
  CHECK(run_cli("verify 60 --format json").exit_code == 0);
  CHECK(run_cli("verify 1000").exit_code == 3);
  CHECK(run_cli("sum 40 --bound 20").exit_code == 3);
  CHECK(run_cli("series 64").exit_code == 0);
  CHECK(run_cli("series 400").exit_code == 3);
}

TEST_CASE("environment variables override budget defaults") {
  CHECK(run_cli_env("ZRINGS_BOUND=50", "sum 40").exit_code == 0);
  CHECK(run_cli_env("ZRINGS_BOUND=30", "sum 40").exit_code == 3);
  CHECK(run_cli_env("ZRINGS_MAX_MN=100", "verify 150").exit_code == 3);
  CHECK(run_cli_env("ZRINGS_MAX_MN=200", "verify 150").exit_code == 0);
  // explicit flags win over the environment
  CHECK(run_cli_env("ZRINGS_BOUND=30", "sum 40 --bound 50").exit_code == 0);
}

TEST_CASE("help is available and succeeds") {
  const auto r = run_cli("--help", true);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("count") != std::string::npos);
  CHECK(r.output.find("series") != std::string::npos);
}

TEST_CASE("show renders the reference grid through the real binary") {
  const auto r = run_cli("show 12 18 6 2 18 6 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("17  .  .  #  .  .  .  .  .  #  .  .  .\n") != std::string::npos);
  CHECK(r.output.find(" 0  #  .  .  .  .  .  #  .  .  .  .  .\n") != std::string::npos);
  CHECK(r.output.find("subring=yes") != std::string::npos);
}

TEST_CASE("unicode grid flag switches the glyphs") {
  const auto r = run_cli("show 2 2 2 2 2 2 1 --unicode");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("■") != std::string::npos);
  CHECK(r.output.find('#') == std::string::npos);
}
