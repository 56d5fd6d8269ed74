#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "towers/towers.h"

namespace {

tw_check_request check_req(const char* tower, const char* check, int n) {
  tw_check_request r{};
  r.tower = tower;
  r.check = check;
  r.max_degree = n;
  return r;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(TOWERS_CLI) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("check through the C interface") {
  CHECK(std::strlen(tw_version()) > 0);
  tw_report* r = nullptr;
  auto req = check_req("sym", "cond5", 4);
  REQUIRE(tw_check(&req, &r) == TW_OK);
  CHECK(tw_report_passed(r) == 1);
  auto j = nlohmann::json::parse(tw_report_json(r));
  CHECK(j["status"] == "pass");
  CHECK(j["elapsed_ms"] == 0);
  CHECK(std::string(tw_report_csv(r)).rfind("identity,inputs,lhs,rhs,equal\n", 0) == 0);
  tw_report_free(r);

  req = check_req("z2", "cond5", 2);
  REQUIRE(tw_check(&req, &r) == TW_OK);
  CHECK(tw_report_passed(r) == 0);
  j = nlohmann::json::parse(tw_report_json(r));
  CHECK(j["status"] == "fail");
  CHECK(j.contains("witness"));
  tw_report_free(r);
  tw_report_free(nullptr);
}

TEST_CASE("error statuses") {
  tw_report* r = nullptr;
  auto bad = check_req("nope", "cond5", 2);
  CHECK(tw_check(&bad, &r) == TW_ERR_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(std::strlen(tw_last_error()) > 0);

  auto bad_check = check_req("sym", "cond9", 2);
  CHECK(tw_check(&bad_check, &r) == TW_ERR_ARGUMENT);

  auto cap = check_req("z2", "cond5", 9);
  CHECK(tw_check(&cap, &r) == TW_ERR_DEGREE_CAP);

  CHECK(tw_check(nullptr, &r) == TW_ERR_ARGUMENT);

  auto ok = check_req("sym", "antipode", 3);
  REQUIRE(tw_check(&ok, &r) == TW_OK);
  CHECK(std::strlen(tw_last_error()) == 0);
  CHECK(tw_report_write(r, "json", "/nonexistent-dir/report.json") == TW_ERR_IO);
  CHECK(tw_report_write(r, "xml", "/tmp/x") == TW_ERR_ARGUMENT);
  tw_report_free(r);
}

TEST_CASE("tables through the C interface") {
  tw_report* r = nullptr;
  int degrees[] = {1, 1};
  tw_table_request t{};
  t.tower = "hecke0";
  t.op = "product";
  t.degrees = degrees;
  t.degree_count = 2;
  REQUIRE(tw_table(&t, &r) == TW_OK);
  auto j = nlohmann::json::parse(tw_report_json(r));
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["value"] == "[(2)] + [(1,1)]");
  tw_report_free(r);

  int seven[] = {7};
  t.tower = "sym";
  t.op = "characters";
  t.degrees = seven;
  t.degree_count = 1;
  CHECK(tw_table(&t, &r) == TW_ERR_DEGREE_CAP);
}

TEST_CASE("written reports match the in-memory text") {
  tw_report* r = nullptr;
  auto req = check_req("hecke0", "cond3", 3);
  REQUIRE(tw_check(&req, &r) == TW_OK);
  const char* path = "capi_report.csv";
  REQUIRE(tw_report_write(r, "csv", path) == TW_OK);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == tw_report_csv(r));
  tw_report_free(r);
  std::remove(path);
}

TEST_CASE("cli exit codes") {
  CHECK(cli("check --tower sym --check cond5 --max-degree 5") == 0);
  CHECK(cli("check --tower z2 --check cond5 --max-degree 2") == 1);
  CHECK(cli("check --tower nope --check cond5 --max-degree 2") == 2);
  CHECK(cli("check --tower sym --check cond5") == 2);
  CHECK(cli("check --tower z2 --check cond5 --max-degree 9") == 2);
  CHECK(cli("table --tower sym --op characters --degree 7") == 2);
  CHECK(cli("check --tower sym --check cond5 --max-degree 3 --output /nonexistent-dir/r.json") == 3);
  CHECK(cli("--version") == 0);
}
