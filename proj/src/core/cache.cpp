#include "cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace margeo {

std::string cache_key(const std::string& command, const SimplicialComplex& complex, const StateCounts& d,
                      const nlohmann::json& flags)
{
  nlohmann::json facets = complex.facets();
  nlohmann::json ground = complex.ground_set();
  nlohmann::json counts = d.values();
  return std::string(MARGEO_VERSION) + "|" + command + "|" + ground.dump() + facets.dump() + "|" + counts.dump() + "|" +
         flags.dump();
}

ResultCache::ResultCache(std::string path, double audit_rate)
    : path_(std::move(path)), audit_rate_(audit_rate), rng_(std::random_device{}())
{
  std::ifstream in(path_);
  if (!in)
    return;
  try {
    in >> entries_;
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::io, "cache file " + path_ + " is not valid JSON");
  }
  if (!entries_.is_object())
    fail(ErrorKind::io, "cache file " + path_ + " does not hold a JSON object");
}

ResultCache::~ResultCache()
{
  try {
    save();
  } catch (...) {
  }
}

std::optional<nlohmann::json> ResultCache::lookup(const std::string& key) const
{
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end())
    return std::nullopt;
  return *it;
}

void ResultCache::store(const std::string& key, nlohmann::json value)
{
  std::lock_guard lock(mutex_);
  entries_[key] = std::move(value);
  dirty_ = true;
}

nlohmann::json ResultCache::get_or_compute(const std::string& key, const std::function<nlohmann::json()>& compute)
{
  auto hit = lookup(key);
  if (!hit) {
    auto value = compute();
    store(key, value);
    std::lock_guard lock(mutex_);
    ++stats_.misses;
    return value;
  }
  bool audit;
  {
    std::lock_guard lock(mutex_);
    ++stats_.hits;
    audit = std::uniform_real_distribution<double>(0, 1)(rng_) < audit_rate_;
    if (audit)
      ++stats_.audits;
  }
  if (!audit)
    return *hit;
  auto fresh = compute();
  if (fresh != *hit) {
    std::cerr << "margeo: cache entry disagreed with recomputation and was replaced\n";
    store(key, fresh);
    std::lock_guard lock(mutex_);
    ++stats_.audit_mismatches;
  }
  return fresh;
}

void ResultCache::save()
{
  std::lock_guard lock(mutex_);
  if (!dirty_ || path_.empty())
    return;
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      fail(ErrorKind::io, "cannot write cache file " + tmp);
    out << entries_.dump() << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec)
    fail(ErrorKind::io, "cannot replace cache file " + path_ + ": " + ec.message());
  dirty_ = false;
}

CacheStats ResultCache::stats() const
{
  std::lock_guard lock(mutex_);
  return stats_;
}

std::string resolve_cache_path(const std::string& fallback)
{
  if (const char* env = std::getenv("MARGEO_CACHE"); env && *env)
    return env;
  return fallback;
}

}  // namespace margeo
