#pragma once

#include <optional>
#include <string>

namespace inertia {

std::string sha256_hex(const std::string& data);

// Content-addressed store: one JSON file per key under a directory. Writes
// land in a temp file first and are renamed into place, so concurrent
// processes never observe partial entries.
class CacheStore {
 public:
  CacheStore() = default;
  CacheStore(std::string dir, bool enabled);

  bool enabled() const { return enabled_; }
  const std::string& dir() const { return dir_; }

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;

 private:
  std::string dir_;
  bool enabled_ = false;
};

}  // namespace inertia
