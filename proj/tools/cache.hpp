#ifndef FROBKIT_TOOLS_CACHE_HPP
#define FROBKIT_TOOLS_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace frobkit::cli {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// One file per digest; writes go through a temporary file and a rename.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<std::string> load(const std::string& digest) const;
  void store(const std::string& digest, const std::string& bytes) const;
  std::filesystem::path path_for(const std::string& digest) const { return dir_ / (digest + ".json"); }

private:
  std::filesystem::path dir_;
};

/// --cache if given, else $FROBKIT_CACHE, else none.
std::optional<std::filesystem::path> cache_directory(const std::optional<std::string>& flag);

}  // namespace frobkit::cli

#endif  // FROBKIT_TOOLS_CACHE_HPP
