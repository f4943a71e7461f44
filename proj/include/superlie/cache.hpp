#pragma once

#include <filesystem>
#include <string>

namespace superlie {

// On-disk copy of the S_n character table. Line 1 is a JSON header
// {"format_version", "max_n", "digest"}; every later line is a JSON row
// ["lambda", "mu", value] in partition order. The digest is the SHA-256 of the row
// lines (each followed by '\n').
inline constexpr int kCacheFormatVersion = 1;
inline constexpr int kMaxCacheN = 14;

// $SUPERLIE_CACHE_DIR, else $XDG_CACHE_HOME/superlie, else $HOME/.cache/superlie.
std::filesystem::path cache_dir();
std::filesystem::path cache_file();

std::string sha256_hex(const std::string& data);

struct CacheInfo {
  std::filesystem::path path;
  int max_n = 0;
  std::size_t rows = 0;
  std::string digest;
};

// Fill the in-memory table through max_n and write it atomically (temp file then
// rename). Throws DomainError if max_n is out of range, ResourceError on I/O failure.
CacheInfo warm_cache(int max_n);

enum class CacheLoad { missing, loaded, rebuilt };

// Load the cache into the in-memory table if present. A file that fails to parse or
// whose digest does not match is rebuilt; `warning` then explains why.
CacheLoad load_cache(std::string& warning);

// Remove the file (if any) and empty the in-memory table. Returns whether a file
// was removed.
bool clear_cache();

}  // namespace superlie
