#include "sumfree/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace sumfree {

ResultCache::ResultCache(std::filesystem::path dir, std::ostream* warnings) : dir_(std::move(dir)), warnings_(warnings) {}

std::string ResultCache::key(const std::string& op, const nlohmann::ordered_json& params, const std::string& version) {
  const std::string text = version + '\n' + op + '\n' + params.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return op + "-" + buf;
}

std::filesystem::path ResultCache::path_for(const std::string& k) const { return *dir_ / (k + ".json"); }

std::optional<nlohmann::ordered_json> ResultCache::lookup(const std::string& op, const nlohmann::ordered_json& params) const {
  if (!dir_) return std::nullopt;
  const std::string k = key(op, params);
  const auto p = path_for(k);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    const auto entry = nlohmann::ordered_json::parse(in);
    if (entry.at("key") != k || entry.at("version") != kCacheVersion || entry.at("params") != params)
      throw std::runtime_error("entry does not match its key");
    return entry.at("value");
  } catch (const std::exception& e) {
    if (warnings_) *warnings_ << "warning: ignoring corrupt cache entry " << p.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& op, const nlohmann::ordered_json& params, const nlohmann::ordered_json& value) const {
  if (!dir_) return;
  const std::string k = key(op, params);
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const nlohmann::ordered_json entry = {{"key", k}, {"version", kCacheVersion}, {"op", op}, {"params", params}, {"value", value}};
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  const auto tmp = path_for(k + ".tmp" + tid.str());
  {
    std::ofstream out(tmp);
    if (!out) {
      if (warnings_) *warnings_ << "warning: cannot write cache directory " << dir_->string() << '\n';
      return;
    }
    out << entry.dump() << '\n';
  }
  std::filesystem::rename(tmp, path_for(k), ec);
  if (ec && warnings_) *warnings_ << "warning: cannot store cache entry: " << ec.message() << '\n';
}

std::filesystem::path ResultCache::default_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("SUMFREE_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "sumfree";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "sumfree";
  return ".sumfree-cache";
}

}  // namespace sumfree
