#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "margeo/margeo.h"

namespace {

std::string take(char* s)
{
  std::string out = s ? s : "";
  margeo_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names")
{
  CHECK(std::string(margeo_version()) == "1.0.0");
  CHECK(std::string(margeo_status_name(MARGEO_ERR_PARSE)) == "parse_error");
}

TEST_CASE("complex handles")
{
  margeo_complex* c = nullptr;
  REQUIRE(margeo_complex_parse("[12][23]", &c) == MARGEO_OK);
  CHECK(margeo_complex_num_facets(c) == 2);
  CHECK(margeo_complex_num_vertices(c) == 3);
  char* json = nullptr;
  REQUIRE(margeo_complex_to_json(c, &json) == MARGEO_OK);
  const auto j = nlohmann::json::parse(take(json));
  CHECK(j["facets"] == nlohmann::json({{1, 2}, {2, 3}}));
  char* text = nullptr;
  REQUIRE(margeo_complex_to_string(c, &text) == MARGEO_OK);
  CHECK(take(text) == "[12][23]");
  margeo_complex_free(c);

  margeo_complex* k4 = nullptr;
  REQUIRE(margeo_complex_parse("K4", &k4) == MARGEO_OK);
  CHECK(margeo_complex_num_facets(k4) == 6);
  margeo_complex_free(k4);
}

TEST_CASE("errors are codes with a message")
{
  margeo_complex* c = nullptr;
  CHECK(margeo_complex_parse("[12][2", &c) == MARGEO_ERR_PARSE);
  CHECK(c == nullptr);
  CHECK(std::string(margeo_last_error()).find("unterminated") != std::string::npos);
  CHECK(margeo_complex_parse(nullptr, &c) == MARGEO_ERR_NULL_ARGUMENT);
  CHECK(margeo_complex_num_facets(nullptr) == 0);

  margeo_job* job = nullptr;
  CHECK(margeo_job_new("bogus", &job) == MARGEO_ERR_INVALID_ARGUMENT);
  REQUIRE(margeo_job_new("codegree", &job) == MARGEO_OK);
  CHECK(margeo_job_set_option(job, "colour", "blue") == MARGEO_ERR_INVALID_ARGUMENT);
  CHECK(margeo_job_set_complex(job, "[0]") == MARGEO_ERR_PARSE);
  const int32_t bad[] = {2, 1};
  CHECK(margeo_job_set_d(job, bad, 2) == MARGEO_ERR_INVALID_ARGUMENT);
  REQUIRE(margeo_job_set_complex(job, "[12][23]") == MARGEO_OK);
  const int32_t short_d[] = {2, 2};
  REQUIRE(margeo_job_set_d(job, short_d, 2) == MARGEO_OK);
  margeo_report* r = nullptr;
  CHECK(margeo_job_run(job, &r) == MARGEO_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  margeo_job_free(job);

  margeo_job* scan = nullptr;
  REQUIRE(margeo_job_new("scan", &scan) == MARGEO_OK);
  CHECK(margeo_job_set_complex(scan, "[12]") == MARGEO_ERR_INVALID_ARGUMENT);
  margeo_job_free(scan);
}

TEST_CASE("running a job")
{
  margeo_job* job = nullptr;
  REQUIRE(margeo_job_new("codegree", &job) == MARGEO_OK);
  REQUIRE(margeo_job_set_complex(job, "[12][23]") == MARGEO_OK);
  const int32_t d[] = {3, 2, 2};
  REQUIRE(margeo_job_set_d(job, d, 3) == MARGEO_OK);
  margeo_report* r = nullptr;
  REQUIRE(margeo_job_run(job, &r) == MARGEO_OK);

  char* json = nullptr;
  REQUIRE(margeo_report_json(r, &json) == MARGEO_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["result"]["codegree"] == 6);
  CHECK(doc["result"]["interior_points"].size() == 4);
  CHECK(margeo_report_negative(r) == 0);

  char* table = nullptr;
  REQUIRE(margeo_report_render(r, "table", &table) == MARGEO_OK);
  CHECK(take(table).find("codegree: 6") != std::string::npos);
  char* csv = nullptr;
  CHECK(margeo_report_render(r, "csv", &csv) == MARGEO_ERR_INVALID_ARGUMENT);
  char* verdict = nullptr;
  REQUIRE(margeo_report_verdict(r, &verdict) == MARGEO_OK);
  CHECK(take(verdict).find("codegree 6") != std::string::npos);

  // the same job again gives the same bytes
  margeo_report* r2 = nullptr;
  REQUIRE(margeo_job_run(job, &r2) == MARGEO_OK);
  char* a = nullptr;
  char* b = nullptr;
  margeo_report_json(r, &a);
  margeo_report_json(r2, &b);
  CHECK(take(a) == take(b));

  margeo_report_free(r);
  margeo_report_free(r2);
  margeo_job_free(job);
}

TEST_CASE("negative verdicts")
{
  margeo_job* job = nullptr;
  REQUIRE(margeo_job_new("gorenstein", &job) == MARGEO_OK);
  REQUIRE(margeo_job_set_complex(job, "[12][23][34][14]") == MARGEO_OK);
  REQUIRE(margeo_job_set_option(job, "short_circuit", "true") == MARGEO_OK);
  margeo_report* r = nullptr;
  REQUIRE(margeo_job_run(job, &r) == MARGEO_OK);
  CHECK(margeo_report_negative(r) == 1);
  margeo_report_free(r);
  margeo_job_free(job);
}
