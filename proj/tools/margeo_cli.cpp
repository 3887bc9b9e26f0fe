// Command-line frontend. Talks to the library only through the C API.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "margeo/margeo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitFailure = 3;

struct Invocation {
  std::string complex;
  std::string d;
  std::string format = "json";
  bool strict = false;
  std::map<std::string, std::string> options;
};

int exit_for(margeo_status s)
{
  switch (s) {
  case MARGEO_ERR_PARSE:
  case MARGEO_ERR_INVALID_ARGUMENT:
  case MARGEO_ERR_NULL_ARGUMENT: return kExitInput;
  default: return kExitFailure;
  }
}

int report_error(margeo_status s)
{
  std::cerr << "margeo: " << margeo_status_name(s) << ": " << margeo_last_error() << '\n';
  return exit_for(s);
}

std::optional<std::vector<int32_t>> parse_d(const std::string& text)
{
  std::vector<int32_t> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    int32_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || next == p)
      return std::nullopt;
    out.push_back(v);
    p = next;
    if (p < end) {
      if (*p != ',')
        return std::nullopt;
      ++p;
      if (p == end)
        return std::nullopt;
    }
  }
  if (out.empty())
    return std::nullopt;
  return out;
}

int run(const std::string& command, const Invocation& inv)
{
  using JobPtr = std::unique_ptr<margeo_job, decltype(&margeo_job_free)>;
  using ReportPtr = std::unique_ptr<margeo_report, decltype(&margeo_report_free)>;

  margeo_job* raw_job = nullptr;
  if (auto s = margeo_job_new(command.c_str(), &raw_job); s != MARGEO_OK)
    return report_error(s);
  JobPtr job(raw_job, margeo_job_free);

  if (!inv.complex.empty())
    if (auto s = margeo_job_set_complex(job.get(), inv.complex.c_str()); s != MARGEO_OK)
      return report_error(s);
  if (!inv.d.empty()) {
    auto d = parse_d(inv.d);
    if (!d) {
      std::cerr << "margeo: invalid_argument: --d expects a comma list of integers, got '" << inv.d << "'\n";
      return kExitInput;
    }
    if (auto s = margeo_job_set_d(job.get(), d->data(), d->size()); s != MARGEO_OK)
      return report_error(s);
  }
  for (const auto& [k, v] : inv.options)
    if (auto s = margeo_job_set_option(job.get(), k.c_str(), v.c_str()); s != MARGEO_OK)
      return report_error(s);

  margeo_report* raw_report = nullptr;
  if (auto s = margeo_job_run(job.get(), &raw_report); s != MARGEO_OK)
    return report_error(s);
  ReportPtr report(raw_report, margeo_report_free);

  char* text = nullptr;
  if (auto s = margeo_report_render(report.get(), inv.format.c_str(), &text); s != MARGEO_OK)
    return report_error(s);
  std::fputs(text, stdout);
  margeo_string_free(text);

  const bool negative = margeo_report_negative(report.get()) != 0;
  if (command == "reproduce" && negative)
    return kExitNegative;
  return negative && inv.strict ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact geometry of marginal polytopes of hierarchical models"};
  app.set_version_flag("--version", std::string(margeo_version()));
  app.require_subcommand(1);

  Invocation inv;
  std::string cache, lattice, method, only, golden, suite;
  std::optional<long long> k, m_max, threads, max_degree, n, dim, d_value;
  bool timing = false, short_circuit = false, no_short_circuit = false;

  auto common = [&](CLI::App* sub, bool takes_complex) {
    if (takes_complex) {
      sub->add_option("complex", inv.complex, "Complex in bracket notation or a named shorthand (K4, C5, path-3, ...)")
          ->required();
      sub->add_option("--d", inv.d, "State counts, comma separated, aligned with the ground set (default all 2)");
    }
    sub->add_option("--format", inv.format, "Output format")->check(CLI::IsMember({"json", "table", "both", "csv"}));
    sub->add_flag("--strict", inv.strict, "Exit 1 on a negative verdict");
    sub->add_option("--cache", cache, "Result cache file (MARGEO_CACHE overrides)");
    sub->add_flag("--timing", timing, "Add wall-clock timing to the report");
  };
  auto lattice_opt = [&](CLI::App* sub) {
    sub->add_option("--lattice", lattice, "Lattice used for normality")->check(CLI::IsMember({"ambient", "columns"}));
    sub->add_option("--method", method, "Normality method")
        ->check(CLI::IsMember({"triangulation", "dilate_scan"}));
    sub->add_option("--max-degree", max_degree, "Highest degree for the dilate scan method");
  };

  auto* matrix = app.add_subcommand("matrix", "Design matrix A_{G,d}, rank and structural basis");
  common(matrix, true);
  auto* facets = app.add_subcommand("facets", "Facet description of the marginal polytope");
  common(facets, true);
  auto* codeg = app.add_subcommand("codegree", "Codegree with interior lattice points as evidence");
  common(codeg, true);
  auto* normality = app.add_subcommand("normality", "Integer decomposition property with holes as evidence");
  common(normality, true);
  lattice_opt(normality);
  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein certificate");
  common(gorenstein, true);
  lattice_opt(gorenstein);
  gorenstein->add_flag("--short-circuit", short_circuit, "Stop at the first failing step");
  auto* wmlt = app.add_subcommand("wmlt", "Weak maximum likelihood threshold");
  common(wmlt, true);
  wmlt->add_option("--m-max", m_max, "Largest sample size to try (default codegree + 4)");
  auto* holes = app.add_subcommand("holes", "Lattice points of kP that are not sums of k columns");
  common(holes, true);
  holes->add_option("--k", k, "Dilation factor (default: the codegree)");
  auto* decompose = app.add_subcommand("decompose", "Reducible decompositions and decomposability");
  common(decompose, true);
  auto* fiber = app.add_subcommand("fiber-check", "Fiber product factorization and Gorenstein transfer");
  common(fiber, true);
  lattice_opt(fiber);
  auto* scan = app.add_subcommand("scan", "Classify every pure complex on n vertices");
  common(scan, false);
  lattice_opt(scan);
  scan->add_option("--n", n, "Number of vertices")->required();
  scan->add_option("--dim", dim, "Facet dimension (default: all)");
  scan->add_option("--suite", suite, "Which conjecture to test")->check(CLI::IsMember({"gorenstein", "codegree"}));
  scan->add_option("--d-value", d_value, "State count used for every vertex (default 2)");
  scan->add_option("--threads", threads, "Worker threads");
  scan->add_flag("--no-short-circuit", no_short_circuit, "Run every certificate step");
  auto* reproduce = app.add_subcommand("reproduce", "Re-run the reference examples and diff against the golden file");
  common(reproduce, false);
  reproduce->add_option("--only", only, "Run one example or block, e.g. ex-k4");
  reproduce->add_option("--golden", golden, "Reference example file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  auto set = [&](const char* key, const std::string& v) {
    if (!v.empty())
      inv.options[key] = v;
  };
  auto set_int = [&](const char* key, const std::optional<long long>& v) {
    if (v)
      inv.options[key] = std::to_string(*v);
  };
  set("cache", cache);
  set("lattice", lattice);
  set("method", method);
  set("only", only);
  set("golden", golden);
  set("suite", suite);
  set_int("k", k);
  set_int("m_max", m_max);
  set_int("threads", threads);
  set_int("max_degree", max_degree);
  set_int("n", n);
  set_int("dim", dim);
  set_int("d_value", d_value);
  if (timing)
    inv.options["timing"] = "true";
  if (short_circuit)
    inv.options["short_circuit"] = "true";
  if (no_short_circuit)
    inv.options["short_circuit"] = "false";

  const std::string command = app.get_subcommands().front()->get_name();
  return run(command, inv);
}
