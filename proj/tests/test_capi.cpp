#include <doctest.h>

#include <memory>
#include <string>

#include "stringcone/stringcone.h"

namespace {

using ConfigPtr = std::unique_ptr<sc_config, void (*)(sc_config*)>;

ConfigPtr makeConfig() { return {sc_config_new(), sc_config_free}; }

std::string take(char*& p) {
  std::string s = p ? p : "";
  sc_string_free(p);
  p = nullptr;
  return s;
}

}  // namespace

TEST_CASE("capi setters validate their input") {
  auto c = makeConfig();
  REQUIRE(c);
  CHECK(sc_config_set_type(c.get(), "Z", 9) != SC_OK);
  CHECK(std::string(sc_last_error()).size() > 0);
  CHECK(sc_config_set_type(c.get(), "A", 0) != SC_OK);
  CHECK(sc_config_set_type(c.get(), "AB", 2) == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_type(c.get(), "A", 2) == SC_OK);
  CHECK(std::string(sc_last_error()).empty());

  CHECK(sc_config_set_lambda(c.get(), "1,-1") == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_lambda(c.get(), "1, 1") == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_lambda(c.get(), "+1,1") == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_lambda(c.get(), "") == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_lambda(c.get(), nullptr) == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_lambda(c.get(), "1,1") == SC_OK);

  CHECK(sc_config_set_word(c.get(), "1,x") == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_level_bound(c.get(), 0) == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_level_bound(c.get(), 9) == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_threads(c.get(), 0) == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_node_cap(c.get(), 0) == SC_INVALID_ARGUMENT);
  CHECK(sc_config_set_timings(nullptr, 1) == SC_INVALID_ARGUMENT);
  CHECK(std::string(sc_version()).size() > 0);
}

TEST_CASE("capi crystal dump of the trivial weight is one node") {
  auto c = makeConfig();
  REQUIRE(sc_config_set_type(c.get(), "A", 2) == SC_OK);
  REQUIRE(sc_config_set_lambda(c.get(), "0,0") == SC_OK);
  char* dump = nullptr;
  REQUIRE(sc_run_crystal(c.get(), &dump) == SC_OK);
  const auto text = take(dump);
  CHECK(text == "# nodes 1 rank 2 lambda 0,0\n");
}

TEST_CASE("capi missing inputs are reported, not thrown") {
  auto c = makeConfig();
  char* dump = nullptr;
  CHECK(sc_run_crystal(c.get(), &dump) == SC_INVALID_ARGUMENT);
  CHECK(dump == nullptr);
  REQUIRE(sc_config_set_type(c.get(), "A", 2) == SC_OK);
  CHECK(sc_run_crystal(c.get(), &dump) == SC_INVALID_ARGUMENT);
  CHECK(std::string(sc_last_error()).find("lambda") != std::string::npos);
  CHECK(sc_run_crystal(c.get(), nullptr) == SC_INVALID_ARGUMENT);
  REQUIRE(sc_config_set_lambda(c.get(), "1,0,0") == SC_OK);  // wrong length is caught at run time
  CHECK(sc_run_crystal(c.get(), &dump) == SC_INVALID_ARGUMENT);
  REQUIRE(sc_config_set_word(c.get(), "1,2") == SC_OK);  // not a w0 word
  char *hrep = nullptr, *rays = nullptr, *json = nullptr;
  CHECK(sc_run_cone(c.get(), &hrep, &rays, &json) == SC_INVALID_ARGUMENT);
  CHECK(sc_config_validate(c.get()) == SC_INVALID_ARGUMENT);
  REQUIRE(sc_config_set_word(c.get(), "2,1,2") == SC_OK);
  REQUIRE(sc_config_set_lambda(c.get(), "1,0") == SC_OK);
  CHECK(sc_config_validate(c.get()) == SC_OK);
  REQUIRE(sc_config_set_demazure(c.get(), "1,1") == SC_OK);
  CHECK(sc_config_validate(c.get()) == SC_INVALID_ARGUMENT);
}

TEST_CASE("capi node cap is enforced") {
  auto c = makeConfig();
  REQUIRE(sc_config_set_type(c.get(), "A", 2) == SC_OK);
  REQUIRE(sc_config_set_lambda(c.get(), "3,3") == SC_OK);  // 64 elements
  REQUIRE(sc_config_set_node_cap(c.get(), 10) == SC_OK);
  char* dump = nullptr;
  CHECK(sc_run_crystal(c.get(), &dump) == SC_CAP_EXCEEDED);
  CHECK(dump == nullptr);
}

TEST_CASE("capi polytope of A1 at lambda 2") {
  auto c = makeConfig();
  REQUIRE(sc_config_set_type(c.get(), "A", 1) == SC_OK);
  REQUIRE(sc_config_set_lambda(c.get(), "2") == SC_OK);
  char *hrep = nullptr, *points = nullptr;
  REQUIRE(sc_run_polytope(c.get(), &hrep, &points) == SC_OK);
  CHECK(take(points) == "dim 1\n0\n1\n2\n");
  // 0 <= t <= 2, first coordinate fixed at 1
  CHECK(take(hrep) == "dim 2\n0 1\n2 -1\n");
}

TEST_CASE("capi cone and degenerate on A2") {
  auto c = makeConfig();
  REQUIRE(sc_config_set_type(c.get(), "A", 2) == SC_OK);
  REQUIRE(sc_config_set_word(c.get(), "1,2,1") == SC_OK);
  char *hrep = nullptr, *rays = nullptr, *json = nullptr;
  REQUIRE(sc_run_cone(c.get(), &hrep, &rays, &json) == SC_OK);
  const auto h = take(hrep);
  CHECK(h.rfind("dim 5\n", 0) == 0);
  CHECK(take(rays).rfind("dim 5\n", 0) == 0);
  CHECK(take(json).find("\"certified_level\"") != std::string::npos);

  int passing = -1;
  REQUIRE(sc_run_degenerate(c.get(), &json, &passing) == SC_OK);
  CHECK(passing == 1);
  const auto report = take(json);
  CHECK(report.find("false") == std::string::npos);
  CHECK(report.find("\"timings_ms\": {}") != std::string::npos);

  REQUIRE(sc_config_set_demazure(c.get(), "1") == SC_OK);
  REQUIRE(sc_run_degenerate(c.get(), &json, &passing) == SC_OK);
  CHECK(take(json).find("\"demazure_word\": [\n    1\n  ]") != std::string::npos);
}
