#include "scan.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "cache.hpp"

namespace margeo {

ScanSuite parse_scan_suite(std::string_view s)
{
  if (s == "gorenstein" || s == "gorenstein_conjecture")
    return ScanSuite::gorenstein_conjecture;
  if (s == "codegree" || s == "codegree_conjecture")
    return ScanSuite::codegree_conjecture;
  fail(ErrorKind::invalid_argument, "unknown scan suite '" + std::string(s) + "' (expected gorenstein or codegree)");
}

const char* to_string(ScanSuite s)
{
  return s == ScanSuite::gorenstein_conjecture ? "gorenstein" : "codegree";
}

namespace {

std::optional<std::size_t> common_facet_size(const SimplicialComplex& c)
{
  const auto s = c.facets().front().size();
  for (const auto& f : c.facets())
    if (f.size() != s)
      return std::nullopt;
  return s;
}

}  // namespace

bool is_cone_over_boundary(const SimplicialComplex& complex)
{
  if (!complex.ghost_vertices().empty())
    return false;
  const auto s = common_facet_size(complex);
  if (!s || complex.num_vertices() != *s + 1)
    return false;
  const auto m = complex.facets().size();
  if (m < 3 || m > *s + 1)
    return false;
  const int i = static_cast<int>(*s + 1 - m);
  const auto base = boundary_simplex(static_cast<int>(m));
  const auto model = i == 0 ? base : cone_over(base, i);
  return canonical_form(model).same_as(canonical_form(complex));
}

bool in_conjectured_gorenstein_class(const SimplicialComplex& complex)
{
  if (!complex.ghost_vertices().empty() || !common_facet_size(complex))
    return false;
  if (complex.is_simplex() || is_cone_over_boundary(complex))
    return true;
  for (const auto& dec : all_reducible_decompositions(complex))
    if (dec.clean() && in_conjectured_gorenstein_class(dec.gamma1) && in_conjectured_gorenstein_class(dec.gamma2))
      return true;
  return false;
}

nlohmann::json scan_entry(const SimplicialComplex& complex, const StateCounts& d, ScanSuite suite,
                          const GorensteinOptions& options)
{
  nlohmann::json e;
  e["complex"] = complex.to_string();
  e["facets"] = complex.facets().size();
  e["omega"] = max_weight(complex, d);
  if (suite == ScanSuite::codegree_conjecture) {
    const auto r = codegree(complex, d);
    e["codegree"] = r.codegree;
    e["dim"] = r.dim;
    e["interior_points"] = r.interior_points.size();
    e["conjecture_holds"] = r.conjecture_holds;
    return e;
  }
  const bool predicted = in_conjectured_gorenstein_class(complex);
  const auto cert = gorenstein_certificate(complex, d, options);
  e["predicted_gorenstein"] = predicted;
  e["is_gorenstein"] = cert.is_gorenstein;
  e["index"] = cert.index;
  e["failure_reason"] = cert.failure_reason;
  e["reducible"] = find_reducible_decomposition(complex).has_value();
  e["agrees"] = predicted == cert.is_gorenstein;
  return e;
}

nlohmann::json scan_classify(const ScanOptions& options)
{
  if (options.n < 1 || options.n > kEnumerationVertexLimit)
    fail(ErrorKind::limit, "scan supports 1 to " + std::to_string(kEnumerationVertexLimit) + " vertices");
  if (options.d_value < 2)
    fail(ErrorKind::invalid_argument, "state count must be at least 2");
  std::vector<int> dims;
  if (options.dim) {
    if (*options.dim < 0 || *options.dim >= options.n)
      fail(ErrorKind::invalid_argument, "facet dimension must lie in 0..n-1");
    dims.push_back(*options.dim);
  } else {
    for (int k = 0; k < options.n; ++k)
      dims.push_back(k);
  }

  std::vector<SimplicialComplex> work;
  std::vector<int> work_dim;
  for (int dim : dims)
    for_each_pure_complex(options.n, dim, [&](const SimplicialComplex& c) {
      work.push_back(c);
      work_dim.push_back(dim);
    });

  std::vector<nlohmann::json> results(work.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size())
        return;
      try {
        const auto& c = work[i];
        const StateCounts d(c, std::vector<int>(c.num_vertices(), options.d_value));
        auto compute = [&] { return scan_entry(c, d, options.suite, options.gorenstein); };
        if (options.cache) {
          nlohmann::json flags{{"suite", to_string(options.suite)},
                               {"short_circuit", options.gorenstein.short_circuit},
                               {"lattice", to_string(options.gorenstein.normality.mode)}};
          results[i] = options.cache->get_or_compute(cache_key("scan-entry", c, d, flags), compute);
        } else {
          results[i] = compute();
        }
        results[i]["facet_dim"] = work_dim[i];
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = work.size();
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);

  nlohmann::json out;
  out["suite"] = to_string(options.suite);
  out["n"] = options.n;
  out["dims"] = dims;
  out["d_value"] = options.d_value;
  out["entries"] = results;

  nlohmann::json summary;
  summary["complexes"] = results.size();
  if (options.suite == ScanSuite::codegree_conjecture) {
    std::size_t holds = 0;
    std::vector<std::string> failures;
    for (const auto& e : results) {
      if (e["conjecture_holds"].get<bool>())
        ++holds;
      else
        failures.push_back(e["complex"]);
      if (e["codegree"].get<std::int64_t>() < e["omega"].get<std::int64_t>())
        fail(ErrorKind::internal, "codegree below the maximal facet weight for " + e["complex"].get<std::string>());
    }
    summary["conjecture_holds"] = holds;
    summary["failures"] = failures;
  } else {
    std::size_t gor = 0, predicted = 0;
    std::vector<std::string> disagreements;
    for (const auto& e : results) {
      gor += e["is_gorenstein"].get<bool>();
      predicted += e["predicted_gorenstein"].get<bool>();
      if (!e["agrees"].get<bool>())
        disagreements.push_back(e["complex"]);
    }
    summary["gorenstein"] = gor;
    summary["predicted_gorenstein"] = predicted;
    summary["disagreements"] = disagreements;
  }
  out["summary"] = summary;
  return out;
}

}  // namespace margeo
