#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace sumfree {

/// Bumped whenever a cached operation's output could change.
inline constexpr const char* kCacheVersion = "sumfree-cache-1";

/// Content-addressed store of operation results as JSON files, keyed by a
/// hash of (operation, parameters, version tag).
class ResultCache {
 public:
  /// A disabled cache never hits and never writes.
  ResultCache() = default;
  ResultCache(std::filesystem::path dir, std::ostream* warnings);

  bool enabled() const { return dir_.has_value(); }
  static std::string key(const std::string& op, const nlohmann::ordered_json& params, const std::string& version = kCacheVersion);

  std::optional<nlohmann::ordered_json> lookup(const std::string& op, const nlohmann::ordered_json& params) const;
  void store(const std::string& op, const nlohmann::ordered_json& params, const nlohmann::ordered_json& value) const;

  /// --cache-dir, then $SUMFREE_CACHE_DIR, then $XDG_CACHE_HOME/sumfree or ~/.cache/sumfree.
  static std::filesystem::path default_dir(const std::optional<std::string>& flag);

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<std::filesystem::path> dir_;
  std::ostream* warnings_ = nullptr;
};

}  // namespace sumfree
