#include "jobs.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>

#include "cache.hpp"
#include "fiber.hpp"
#include "invariants.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "scan.hpp"

namespace margeo {

namespace {

using json = nlohmann::json;
using Options = std::map<std::string, std::string>;

const std::vector<std::string> kOptionKeys = {
    "k",           "m_max", "lattice", "method", "max_degree", "short_circuit", "threads", "cache",
    "only",        "golden", "n",      "dim",    "suite",      "d_value",       "timing",
};

// Keys that never change a result and are left out of the echoed flags and the cache key.
const std::vector<std::string> kRuntimeKeys = {"threads", "cache", "timing", "golden"};

std::optional<std::string> get(const Options& o, const std::string& key)
{
  auto it = o.find(key);
  if (it == o.end())
    return std::nullopt;
  return it->second;
}

std::int64_t parse_int(const std::string& key, const std::string& text)
{
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    fail(ErrorKind::invalid_argument, "option " + key + " expects an integer, got '" + text + "'");
  return v;
}

std::optional<std::int64_t> get_int(const Options& o, const std::string& key)
{
  auto v = get(o, key);
  if (!v)
    return std::nullopt;
  return parse_int(key, *v);
}

bool get_bool(const Options& o, const std::string& key, bool fallback)
{
  auto v = get(o, key);
  if (!v)
    return fallback;
  if (*v == "1" || *v == "true" || *v == "yes" || *v == "on")
    return true;
  if (*v == "0" || *v == "false" || *v == "no" || *v == "off")
    return false;
  fail(ErrorKind::invalid_argument, "option " + key + " expects true or false, got '" + *v + "'");
}

NormalityOptions normality_options(const Options& o)
{
  NormalityOptions n;
  if (auto v = get(o, "lattice"))
    n.mode = parse_lattice_mode(*v);
  if (auto v = get(o, "method")) {
    if (*v == "triangulation")
      n.method = NormalityMethod::triangulation;
    else if (*v == "dilate_scan" || *v == "dilate-scan")
      n.method = NormalityMethod::dilate_scan;
    else
      fail(ErrorKind::invalid_argument, "unknown normality method '" + *v + "'");
  }
  if (auto v = get_int(o, "max_degree")) {
    if (*v < 2)
      fail(ErrorKind::invalid_argument, "max_degree must be at least 2");
    n.max_degree = *v;
  }
  return n;
}

GorensteinOptions gorenstein_options(const Options& o)
{
  GorensteinOptions g;
  g.normality = normality_options(o);
  g.short_circuit = get_bool(o, "short_circuit", false);
  return g;
}

json flags_of(const Options& o)
{
  json f = json::object();
  for (const auto& [k, v] : o)
    if (std::find(kRuntimeKeys.begin(), kRuntimeKeys.end(), k) == kRuntimeKeys.end())
      f[k] = v;
  return f;
}

struct Computed {
  json result;
  json verdict;
};

Computed run_matrix(const SimplicialComplex& c, const StateCounts& d)
{
  const DesignMatrix a(c, d);
  json basis = json::array();
  for (auto col : structural_basis(a))
    basis.push_back(a.column_name(col));
  json w = json::array();
  for (const auto& x : normalization_functional(a))
    w.push_back(rational_json(x));
  const auto rank = matrix_rank(a);
  json r{{"matrix", to_json(a)},
         {"rows", a.rows()},
         {"cols", a.cols()},
         {"rank", rank},
         {"structural_basis", basis},
         {"structural_basis_size", structural_basis_size(c, d)},
         {"normalization_functional", w}};
  return {r, make_verdict(false, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " design matrix of rank " +
                                     std::to_string(rank))};
}

Computed run_facets(const SimplicialComplex& c, const StateCounts& d)
{
  const auto p = marginal_polytope(c, d);
  json lines = json::array();
  std::string text = to_text(p.facets);
  for (std::size_t pos = 0; pos < text.size();) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos)
      end = text.size();
    if (end > pos)
      lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  json r{{"ambient", p.facets.ambient},
         {"dim", p.facets.dim},
         {"vertices", p.vertices.vertices.size()},
         {"facet_count", p.facets.inequalities.size()},
         {"equation_count", p.facets.equations.size()},
         {"hrep", to_json(p.facets)},
         {"text", lines}};
  return {r, make_verdict(false, std::to_string(p.facets.dim) + "-dimensional polytope with " +
                                     std::to_string(p.facets.inequalities.size()) + " facets")};
}

Computed run_codegree(const SimplicialComplex& c, const StateCounts& d)
{
  const auto r = codegree(c, d);
  const std::string s = "codegree " + std::to_string(r.codegree) +
                        (r.conjecture_holds ? " equals" : " differs from") + " the maximal facet weight " +
                        std::to_string(r.omega.value_or(0));
  return {to_json(r), make_verdict(!r.conjecture_holds, s)};
}

Computed run_normality(const SimplicialComplex& c, const StateCounts& d, const Options& o)
{
  const auto p = marginal_polytope(c, d);
  const auto e = idp_normality(p.vertices, normality_options(o));
  std::string s = to_string(e.verdict);
  if (!e.holes.empty())
    s += ", first hole in degree " + std::to_string(e.holes.front().degree);
  return {to_json(e), make_verdict(e.verdict == NormalityVerdict::not_normal, s)};
}

Computed run_gorenstein(const SimplicialComplex& c, const StateCounts& d, const Options& o)
{
  const auto cert = gorenstein_certificate(c, d, gorenstein_options(o));
  const std::string s = cert.is_gorenstein ? "gorenstein of index " + std::to_string(cert.index)
                                           : "not gorenstein: " + cert.failure_reason;
  return {to_json(cert), make_verdict(!cert.is_gorenstein, s)};
}

Computed run_wmlt(const SimplicialComplex& c, const StateCounts& d, const Options& o)
{
  WmltOptions w;
  if (auto v = get_int(o, "m_max")) {
    if (*v < 1)
      fail(ErrorKind::invalid_argument, "m_max must be positive");
    w.m_max = *v;
  }
  const auto r = wmlt_search(c, d, w);
  const std::string s = r.wmlt ? "weak maximum likelihood threshold " + std::to_string(*r.wmlt)
                               : "no threshold up to m = " + std::to_string(r.m_max);
  return {to_json(r), make_verdict(!r.wmlt, s)};
}

Computed run_holes(const SimplicialComplex& c, const StateCounts& d, const Options& o)
{
  std::int64_t k;
  std::string source = "option";
  if (auto v = get_int(o, "k")) {
    k = *v;
    if (k < 1)
      fail(ErrorKind::invalid_argument, "k must be positive");
  } else {
    k = codegree(c, d).codegree;
    source = "codegree";
  }
  const auto holes = holes_in_dilate(c, d, k);
  json r{{"k", k}, {"k_source", source}, {"holes", holes}, {"count", holes.size()}};
  return {r, make_verdict(!holes.empty(), std::to_string(holes.size()) + " holes in the " + std::to_string(k) +
                                               "-th dilate")};
}

Computed run_decompose(const SimplicialComplex& c)
{
  const auto first = find_reducible_decomposition(c);
  json all = json::array();
  for (const auto& dec : all_reducible_decompositions(c))
    all.push_back(to_json(dec));
  const bool decomposable = is_decomposable(c);
  json r{{"reducible", first.has_value()}, {"decomposable", decomposable}, {"decompositions", all}};
  r["decomposition"] = first ? to_json(*first) : json(nullptr);
  if (c.is_graph())
    r["graph"] = {{"chordal", is_chordal(c)}, {"k4_minor_free", is_k4_minor_free(c)}};
  std::string s = first ? "reducible" : "not reducible";
  s += decomposable ? ", decomposable" : ", not decomposable";
  return {r, make_verdict(!decomposable, s)};
}

Computed run_fiber_check(const SimplicialComplex& c, const StateCounts& d, const Options& o)
{
  json r;
  bool negative = false;
  std::string s;
  if (find_reducible_decomposition(c)) {
    const auto f = verify_reducible_factorization(c, d);
    r["factorization"] = to_json(f);
    negative = !f.holds;
    s = f.holds ? "fiber product matches the direct columns" : "fiber product differs from the direct columns";
  } else {
    r["factorization"] = nullptr;
    s = "not reducible, no factorization to check";
  }
  const auto t = gorenstein_transfer_check(c, d, gorenstein_options(o));
  r["transfer"] = to_json(t);
  negative = negative || !t.agrees;
  s += std::string("; transfer prediction ") + to_string(t.prediction) +
       (t.agrees ? " consistent with" : " contradicted by") + " the direct certificate";
  return {r, make_verdict(negative, s)};
}

Computed run_scan(const Options& o, ResultCache* cache)
{
  ScanOptions s;
  s.n = static_cast<int>(get_int(o, "n").value_or(3));
  if (auto v = get_int(o, "dim"))
    s.dim = static_cast<int>(*v);
  s.d_value = static_cast<int>(get_int(o, "d_value").value_or(2));
  if (auto v = get(o, "suite"))
    s.suite = parse_scan_suite(*v);
  s.threads = static_cast<unsigned>(std::max<std::int64_t>(1, get_int(o, "threads").value_or(1)));
  s.gorenstein.normality = normality_options(o);
  s.gorenstein.short_circuit = get_bool(o, "short_circuit", true);
  s.cache = cache;
  auto r = scan_classify(s);
  const auto& sum = r["summary"];
  const bool gor = s.suite == ScanSuite::gorenstein_conjecture;
  const auto& bad = gor ? sum["disagreements"] : sum["failures"];
  std::string text = std::to_string(sum["complexes"].get<std::size_t>()) + " complexes, " +
                     std::to_string(bad.size()) + (gor ? " disagreements with the conjectured class"
                                                       : " where the codegree differs from the maximal weight");
  return {r, make_verdict(!bad.empty(), text)};
}

Computed run_reproduce(const Options& o)
{
  const std::string path = get(o, "golden").value_or(default_golden_path());
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::io, "cannot open reference examples " + path);
  json golden;
  try {
    in >> golden;
  } catch (const json::exception& e) {
    fail(ErrorKind::io, "reference examples " + path + " are not valid JSON: " + e.what());
  }
  const auto only = get(o, "only");
  json examples = json::array();
  std::size_t passed = 0, failed = 0;
  for (const auto& ex : golden.at("examples")) {
    const std::string id = ex.at("id"), block = ex.value("block", id);
    if (only && *only != id && *only != block)
      continue;
    JobSpec job;
    job.command = ex.at("command");
    job.complex_text = ex.value("complex", "");
    if (ex.contains("d"))
      job.d = ex["d"].get<std::vector<int>>();
    if (ex.contains("options"))
      for (auto it = ex["options"].begin(); it != ex["options"].end(); ++it)
        job.options[it.key()] = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    const auto doc = run_job(job);
    json mismatches = json::array();
    for (auto it = ex.at("expect").begin(); it != ex.at("expect").end(); ++it) {
      const json::json_pointer ptr(it.key());
      const json actual = doc.contains(ptr) ? doc.at(ptr) : json(nullptr);
      if (actual != it.value())
        mismatches.push_back({{"pointer", it.key()}, {"expected", it.value()}, {"actual", actual}});
    }
    const bool ok = mismatches.empty();
    ok ? ++passed : ++failed;
    examples.push_back({{"id", id}, {"block", block}, {"command", job.command}, {"passed", ok}, {"mismatches", mismatches}});
  }
  if (only && examples.empty())
    fail(ErrorKind::invalid_argument, "no reference example or block named '" + *only + "'");
  json r{{"golden", path}, {"examples", examples}, {"passed", passed}, {"failed", failed}};
  return {r, make_verdict(failed > 0, std::to_string(passed) + " reproduced, " + std::to_string(failed) + " drifted")};
}

}  // namespace

const std::vector<std::string>& job_commands()
{
  static const std::vector<std::string> commands = {"matrix", "facets",   "codegree",    "normality",
                                                    "gorenstein", "wmlt", "holes",       "decompose",
                                                    "fiber-check", "scan", "reproduce"};
  return commands;
}

bool command_needs_complex(const std::string& command) { return command != "scan" && command != "reproduce"; }

void validate_command(const std::string& command)
{
  const auto& c = job_commands();
  if (std::find(c.begin(), c.end(), command) == c.end())
    fail(ErrorKind::invalid_argument, "unknown command '" + command + "'");
}

void validate_option(const std::string& key)
{
  if (std::find(kOptionKeys.begin(), kOptionKeys.end(), key) == kOptionKeys.end())
    fail(ErrorKind::invalid_argument, "unknown option '" + key + "'");
}

std::string default_golden_path() { return std::string(MARGEO_GOLDEN_DIR) + "/reference_examples.json"; }

json run_job(const JobSpec& job)
{
  validate_command(job.command);
  for (const auto& [k, v] : job.options)
    validate_option(k);
  const auto start = std::chrono::steady_clock::now();

  json doc;
  doc["tool"] = "margeo";
  doc["version"] = MARGEO_VERSION;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = job.command;
  json input{{"flags", flags_of(job.options)}};

  std::unique_ptr<ResultCache> cache;
  const std::string cache_path = resolve_cache_path(get(job.options, "cache").value_or(""));
  if (!cache_path.empty() && job.command != "reproduce")
    cache = std::make_unique<ResultCache>(cache_path);

  Computed out;
  if (!command_needs_complex(job.command)) {
    if (!job.complex_text.empty())
      fail(ErrorKind::invalid_argument, "command " + job.command + " does not take a complex");
    input["complex"] = nullptr;
    input["d"] = nullptr;
    out = job.command == "scan" ? run_scan(job.options, cache.get()) : run_reproduce(job.options);
  } else {
    if (job.complex_text.empty())
      fail(ErrorKind::invalid_argument, "command " + job.command + " needs a complex");
    const auto complex = parse_complex_or_named(job.complex_text);
    const StateCounts d = job.d ? StateCounts(complex, *job.d) : StateCounts::binary(complex);
    input["complex"] = complex.to_json();
    input["complex_text"] = complex.to_string();
    input["d"] = d.values();
    if (!complex.diagnostics().empty())
      input["diagnostics"] = complex.diagnostics();

    auto compute = [&]() -> json {
      Computed c;
      const auto& o = job.options;
      if (job.command == "matrix")
        c = run_matrix(complex, d);
      else if (job.command == "facets")
        c = run_facets(complex, d);
      else if (job.command == "codegree")
        c = run_codegree(complex, d);
      else if (job.command == "normality")
        c = run_normality(complex, d, o);
      else if (job.command == "gorenstein")
        c = run_gorenstein(complex, d, o);
      else if (job.command == "wmlt")
        c = run_wmlt(complex, d, o);
      else if (job.command == "holes")
        c = run_holes(complex, d, o);
      else if (job.command == "decompose")
        c = run_decompose(complex);
      else
        c = run_fiber_check(complex, d, o);
      return {{"result", c.result}, {"verdict", c.verdict}};
    };
    const json both =
        cache ? cache->get_or_compute(cache_key(job.command, complex, d, flags_of(job.options)), compute) : compute();
    out = {both.at("result"), both.at("verdict")};
  }
  if (cache)
    cache->save();

  doc["input"] = std::move(input);
  doc["result"] = std::move(out.result);
  doc["verdict"] = std::move(out.verdict);
  if (get_bool(job.options, "timing", false)) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    doc["timing"] = {{"seconds", dt.count()}};
  }
  return doc;
}

}  // namespace margeo
