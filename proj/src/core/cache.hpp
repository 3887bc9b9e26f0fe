#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include <json.hpp>

#include "complex.hpp"

namespace margeo {

/// Key over tool version, command, the ordered facet list, state counts and
/// the flags that affect the result.
std::string cache_key(const std::string& command, const SimplicialComplex& complex, const StateCounts& d,
                      const nlohmann::json& flags);

struct CacheStats {
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t audits = 0;
  std::size_t audit_mismatches = 0;
};

/// On-disk JSON map from key to result. A fraction of hits is recomputed and
/// compared; a mismatch replaces the stored entry and is counted.
class ResultCache {
public:
  explicit ResultCache(std::string path, double audit_rate = 0.1);
  ~ResultCache();
  ResultCache(const ResultCache&) = delete;
  ResultCache& operator=(const ResultCache&) = delete;

  nlohmann::json get_or_compute(const std::string& key, const std::function<nlohmann::json()>& compute);
  std::optional<nlohmann::json> lookup(const std::string& key) const;
  void store(const std::string& key, nlohmann::json value);
  /// Writes through a temporary file; no-op when nothing changed.
  void save();

  CacheStats stats() const;
  const std::string& path() const { return path_; }
  void set_audit_rate(double rate) { audit_rate_ = rate; }

private:
  std::string path_;
  double audit_rate_;
  nlohmann::json entries_ = nlohmann::json::object();
  bool dirty_ = false;
  CacheStats stats_;
  std::mt19937_64 rng_;
  mutable std::mutex mutex_;
};

/// MARGEO_CACHE when set, otherwise `fallback` (may be empty: no cache).
std::string resolve_cache_path(const std::string& fallback);

}  // namespace margeo
