#include "margeo/margeo.h"

#include <cstring>
#include <new>
#include <string>

#include "complex.hpp"
#include "jobs.hpp"
#include "report.hpp"

struct margeo_complex {
  margeo::SimplicialComplex value;
};

struct margeo_job {
  margeo::JobSpec spec;
};

struct margeo_report {
  nlohmann::json doc;
};

namespace {

thread_local std::string last_error;

margeo_status status_of(margeo::ErrorKind k)
{
  switch (k) {
  case margeo::ErrorKind::parse: return MARGEO_ERR_PARSE;
  case margeo::ErrorKind::invalid_argument: return MARGEO_ERR_INVALID_ARGUMENT;
  case margeo::ErrorKind::precondition: return MARGEO_ERR_PRECONDITION;
  case margeo::ErrorKind::limit: return MARGEO_ERR_LIMIT;
  case margeo::ErrorKind::io: return MARGEO_ERR_IO;
  case margeo::ErrorKind::internal: return MARGEO_ERR_INTERNAL;
  }
  return MARGEO_ERR_INTERNAL;
}

margeo_status null_argument(const char* what)
{
  last_error = std::string(what) + " must not be null";
  return MARGEO_ERR_NULL_ARGUMENT;
}

/// Runs f, translating exceptions into status codes.
template <class F>
margeo_status guarded(F&& f)
{
  try {
    f();
    last_error.clear();
    return MARGEO_OK;
  } catch (const margeo::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MARGEO_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MARGEO_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return MARGEO_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s)
{
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* margeo_version(void) { return MARGEO_VERSION; }

const char* margeo_last_error(void) { return last_error.c_str(); }

void margeo_string_free(char* s) { delete[] s; }

const char* margeo_status_name(margeo_status status)
{
  switch (status) {
  case MARGEO_OK: return "ok";
  case MARGEO_ERR_PARSE: return "parse_error";
  case MARGEO_ERR_INVALID_ARGUMENT: return "invalid_argument";
  case MARGEO_ERR_PRECONDITION: return "precondition_failed";
  case MARGEO_ERR_LIMIT: return "limit_exceeded";
  case MARGEO_ERR_IO: return "io_error";
  case MARGEO_ERR_INTERNAL: return "internal_error";
  case MARGEO_ERR_NULL_ARGUMENT: return "null_argument";
  }
  return "unknown";
}

margeo_status margeo_complex_parse(const char* text, margeo_complex** out)
{
  if (!text)
    return null_argument("text");
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new margeo_complex{margeo::parse_complex_or_named(text)}; });
}

void margeo_complex_free(margeo_complex* complex) { delete complex; }

size_t margeo_complex_num_facets(const margeo_complex* complex)
{
  return complex ? complex->value.facets().size() : 0;
}

size_t margeo_complex_num_vertices(const margeo_complex* complex)
{
  return complex ? complex->value.num_vertices() : 0;
}

margeo_status margeo_complex_to_json(const margeo_complex* complex, char** out)
{
  if (!complex)
    return null_argument("complex");
  if (!out)
    return null_argument("out");
  return guarded([&] { *out = copy_string(complex->value.to_json().dump()); });
}

margeo_status margeo_complex_to_string(const margeo_complex* complex, char** out)
{
  if (!complex)
    return null_argument("complex");
  if (!out)
    return null_argument("out");
  return guarded([&] { *out = copy_string(complex->value.to_string()); });
}

margeo_status margeo_job_new(const char* command, margeo_job** out)
{
  if (!command)
    return null_argument("command");
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    margeo::validate_command(command);
    auto* job = new margeo_job;
    job->spec.command = command;
    *out = job;
  });
}

void margeo_job_free(margeo_job* job) { delete job; }

margeo_status margeo_job_set_complex(margeo_job* job, const char* text)
{
  if (!job)
    return null_argument("job");
  if (!text)
    return null_argument("text");
  return guarded([&] {
    if (!margeo::command_needs_complex(job->spec.command))
      margeo::fail(margeo::ErrorKind::invalid_argument, "command " + job->spec.command + " does not take a complex");
    margeo::parse_complex_or_named(text);
    job->spec.complex_text = text;
  });
}

margeo_status margeo_job_set_d(margeo_job* job, const int32_t* counts, size_t count)
{
  if (!job)
    return null_argument("job");
  if (count > 0 && !counts)
    return null_argument("counts");
  return guarded([&] {
    if (count == 0) {
      job->spec.d.reset();
      return;
    }
    std::vector<int> d(counts, counts + count);
    for (int x : d)
      if (x < 2)
        margeo::fail(margeo::ErrorKind::invalid_argument, "state counts must be at least 2");
    job->spec.d = std::move(d);
  });
}

margeo_status margeo_job_set_option(margeo_job* job, const char* key, const char* value)
{
  if (!job)
    return null_argument("job");
  if (!key)
    return null_argument("key");
  if (!value)
    return null_argument("value");
  return guarded([&] {
    margeo::validate_option(key);
    job->spec.options[key] = value;
  });
}

margeo_status margeo_job_run(const margeo_job* job, margeo_report** out)
{
  if (!job)
    return null_argument("job");
  if (!out)
    return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new margeo_report{margeo::run_job(job->spec)}; });
}

void margeo_report_free(margeo_report* report) { delete report; }

margeo_status margeo_report_json(const margeo_report* report, char** out)
{
  if (!report)
    return null_argument("report");
  if (!out)
    return null_argument("out");
  return guarded([&] { *out = copy_string(report->doc.dump()); });
}

margeo_status margeo_report_render(const margeo_report* report, const char* format, char** out)
{
  if (!report)
    return null_argument("report");
  if (!format)
    return null_argument("format");
  if (!out)
    return null_argument("out");
  return guarded([&] { *out = copy_string(margeo::render(report->doc, format)); });
}

int margeo_report_negative(const margeo_report* report)
{
  if (!report)
    return 0;
  return report->doc.at("verdict").value("negative", false) ? 1 : 0;
}

margeo_status margeo_report_verdict(const margeo_report* report, char** out)
{
  if (!report)
    return null_argument("report");
  if (!out)
    return null_argument("out");
  return guarded([&] { *out = copy_string(report->doc.at("verdict").value("summary", "")); });
}

}  // extern "C"
