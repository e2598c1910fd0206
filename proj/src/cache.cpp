#include "inertia/cache.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace inertia {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

CacheStore::CacheStore(std::string dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled && !dir_.empty()) {
  if (enabled_) std::filesystem::create_directories(dir_);
}

std::optional<std::string> CacheStore::get(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return buf.str();
}

void CacheStore::put(const std::string& key, const std::string& value) const {
  if (!enabled_) return;
  std::filesystem::path dst = std::filesystem::path(dir_) / (key + ".json");
  std::random_device rd;
  std::ostringstream tmpname;
  tmpname << key << ".tmp." << rd() << "." << rd();
  std::filesystem::path tmp = std::filesystem::path(dir_) / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << value;
    if (!out.good()) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;  // caching is best-effort; computation already succeeded
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, dst, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace inertia
