#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "args.hpp"

namespace {

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

cli::RunConfig parse(const std::string& s) { return cli::parseArgs(split(s)); }

}  // namespace

TEST_CASE("cli parses a degenerate invocation") {
  const auto c = parse("degenerate --type A --rank 2 --word 1,2,1");
  CHECK(c.subcommand == "degenerate");
  CHECK(c.type == "A");
  CHECK(c.rank == 2);
  REQUIRE(c.word);
  CHECK(*c.word == "1,2,1");
  CHECK_FALSE(c.lambda);
  CHECK_FALSE(c.demazure);
  CHECK(c.level_bound == 2);
  CHECK(c.threads == 1);
}

TEST_CASE("cli usage errors") {
  for (const char* bad : {"cone --type Z --rank 9", "", "frobnicate --type A --rank 2",
                          "cone --type A --rank 2 --bogus", "cone --type A --rank 2 --word 1,,2",
                          "cone --type A --rank 2 --word 1,2,3", "cone --type A --rank 2 --word a",
                          "crystal --type A --rank 2 --lambda 1,-1", "crystal --type A --rank 2",
                          "crystal --type A --rank 2 --lambda 1", "polytope --type A --rank 2 --lambda x",
                          "cone --rank 2", "cone --type A", "cone --type A --rank 2 --threads 0",
                          "cone --type A --rank 2 --level-bound 0", "cone --type A --rank 2 --cap 0",
                          "cone --type A --rank 2 --demazure 7", "degenerate --type A --rank 2 --demazure 1,1",
                          "verify extra"}) {
    const std::string text = bad;
    CAPTURE(text);
    CHECK_THROWS_AS(parse(bad), cli::UsageError);
  }
  CHECK_THROWS_AS(parse("verify --help"), cli::HelpRequested);
}

TEST_CASE("cli canonical form round trips") {
  for (const char* s : {"degenerate --type A --rank 2 --word 1,2,1", "verify", "verify --threads 4",
                        "crystal --type G --rank 2 --lambda 01,2 --cap 500",
                        "polytope --type B --rank 2 --lambda 1,1 --out /tmp/x --timings",
                        "degenerate --type A --rank 3 --demazure 2,1 --level-bound 3",
                        "degenerate --type A --rank 2 --demazure", "degenerate --type A --rank 2 --demazure --threads 2"}) {
    const std::string text = s;
    CAPTURE(text);
    const auto c = parse(s);
    const auto again = parse(c.canonical());
    CHECK(again == c);
    CHECK(again.canonical() == c.canonical());
  }
  CHECK(parse("crystal --type G --rank 2 --lambda 01,2").lambda.value() == "1,2");
  CHECK(parse("degenerate --type A --rank 2 --demazure").demazure.value().empty());
}

TEST_CASE("cli exit codes are distinct") {
  const sc_status all[] = {SC_INVALID_ARGUMENT, SC_UNSUPPORTED, SC_CAP_EXCEEDED,
                           SC_UNBOUNDED, SC_CHECK_FAILED, SC_INTERNAL};
  CHECK(cli::exitCode(SC_OK) == 0);
  std::vector<int> seen{0, 2};
  for (auto s : all) {
    const int code = cli::exitCode(s);
    CHECK(std::find(seen.begin(), seen.end(), code) == seen.end());
    seen.push_back(code);
  }
}
