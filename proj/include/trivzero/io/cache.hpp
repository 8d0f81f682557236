#pragma once
#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "trivzero/io/json.hpp"
#include "trivzero/zeta/padic_zeta.hpp"

namespace tz {

inline constexpr const char* kToolVersion = "0.3.0";

// 64-bit FNV-1a, stable across runs and platforms
inline std::string stable_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// One JSON file per entry: {key, version, created, payload}. Writes go through a temp file and a rename
// while holding an flock on <dir>/.lock.
class Cache {
 public:
  Cache() = default;
  Cache(std::filesystem::path dir, bool enabled, std::string version = kToolVersion)
      : dir_(std::move(dir)), enabled_(enabled), version_(std::move(version)) {}

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }
  long hits() const { return hits_; }
  long misses() const { return misses_; }

  std::filesystem::path path_for(const std::string& key) const { return dir_ / (stable_hash(key) + ".json"); }

  std::optional<Json> get(const std::string& key) {
    if (!enabled_) return std::nullopt;
    auto path = path_for(key);
    if (!std::filesystem::exists(path)) return std::nullopt;
    try {
      std::ifstream in(path);
      Json e = Json::parse(in);
      if (e.at("key").get<std::string>() != key) throw Error(ErrorKind::CorruptCacheEntry, "key mismatch");
      if (e.at("version").get<std::string>() != version_) return std::nullopt;
      return e.at("payload");
    } catch (const std::exception& ex) {
      std::cerr << "warning: CorruptCacheEntry " << path.string() << ": " << ex.what() << "; recomputing\n";
      return std::nullopt;
    }
  }

  void put(const std::string& key, const Json& payload) {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
      std::cerr << "warning: cache directory " << dir_.string() << " not writable; continuing without cache\n";
      enabled_ = false;
      return;
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
    Json e{{"key", key}, {"version", version_}, {"created", secs}, {"payload", payload}};
    auto lockpath = dir_ / ".lock";
    int fd = ::open(lockpath.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd >= 0) ::flock(fd, LOCK_EX);
    auto path = path_for(key);
    auto tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      out << e.dump();
    }
    std::filesystem::rename(tmp, path, ec);
    if (fd >= 0) {
      ::flock(fd, LOCK_UN);
      ::close(fd);
    }
  }

  Json get_or_compute(const std::string& key, const std::function<Json()>& producer) {
    if (auto hit = get(key)) {
      ++hits_;
      return *hit;
    }
    ++misses_;
    Json v = producer();
    put(key, v);
    return v;
  }

 private:
  std::filesystem::path dir_;
  bool enabled_ = false;
  std::string version_ = kToolVersion;
  long hits_ = 0, misses_ = 0;
};

// classical L-values persisted through the cache
class CachedLValues : public LValueStore {
 public:
  explicit CachedLValues(Cache& c) : cache_(c) {}
  std::optional<CyclotomicNumber> get(const std::string& key) override {
    std::lock_guard lk(mu_);
    auto j = cache_.get("lvalue:" + key);
    if (!j) return std::nullopt;
    try {
      return cyclotomic_from_json(*j);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  void put(const std::string& key, const CyclotomicNumber& v) override {
    std::lock_guard lk(mu_);
    cache_.put("lvalue:" + key, to_json(v));
  }

 private:
  Cache& cache_;
  std::mutex mu_;
};

}  // namespace tz
