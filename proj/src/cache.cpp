#include "superlie/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "superlie/errors.hpp"
#include "superlie/symfunc.hpp"

namespace superlie {

namespace fs = std::filesystem;

fs::path cache_dir() {
  if (const char* dir = std::getenv("SUPERLIE_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "superlie";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "superlie";
  return fs::temp_directory_path() / "superlie";
}

fs::path cache_file() { return cache_dir() / "character_table.v1.jsonl"; }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("sha256 digest failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

namespace {

std::string row_lines(const std::vector<CharacterTable::Row>& rows) {
  std::string body;
  for (const auto& r : rows)
    body += nlohmann::json::array({r.lambda.to_string(), r.mu.to_string(), r.value}).dump() + "\n";
  return body;
}

void write_atomically(const fs::path& target, const std::string& contents) {
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw ResourceError("cannot create cache directory " + target.parent_path().string() + ": " + ec.message());
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) throw ResourceError("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ResourceError("cannot move cache file into place: " + ec.message());
  }
}

struct Parsed {
  int max_n = 0;
  std::vector<CharacterTable::Row> rows;
};

// Throws ParseError describing the first problem found.
Parsed parse_cache(const std::string& text) {
  auto newline = text.find('\n');
  if (newline == std::string::npos) throw ParseError("missing header line");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(text.substr(0, newline));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad header: ") + e.what());
  }
  if (!header.is_object() || header.value("format_version", -1) != kCacheFormatVersion)
    throw ParseError("unsupported format version");
  Parsed p;
  p.max_n = header.value("max_n", -1);
  if (p.max_n < 0 || p.max_n > kMaxCacheN) throw ParseError("bad max_n");
  std::string body = text.substr(newline + 1);
  if (header.value("digest", std::string()) != sha256_hex(body)) throw ParseError("digest mismatch");
  std::istringstream lines(body);
  std::string line;
  while (std::getline(lines, line)) {
    try {
      auto row = nlohmann::json::parse(line);
      CharacterTable::Row r{Partition::parse(row.at(0).get<std::string>()),
                            Partition::parse(row.at(1).get<std::string>()), row.at(2).get<long>()};
      if (r.lambda.size() != r.mu.size() || r.lambda.size() > p.max_n) throw ParseError("row outside the table");
      p.rows.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad row: ") + e.what());
    }
  }
  return p;
}

}  // namespace

CacheInfo warm_cache(int max_n) {
  if (max_n < 1 || max_n > kMaxCacheN)
    throw DomainError("cache warm: n must lie in [1, " + std::to_string(kMaxCacheN) + "]");
  auto& table = CharacterTable::global();
  table.warm(max_n);
  auto rows = table.rows(max_n);
  std::string body = row_lines(rows);
  CacheInfo info{cache_file(), max_n, rows.size(), sha256_hex(body)};
  nlohmann::ordered_json header{{"format_version", kCacheFormatVersion}, {"max_n", max_n}, {"digest", info.digest}};
  write_atomically(info.path, header.dump() + "\n" + body);
  return info;
}

CacheLoad load_cache(std::string& warning) {
  warning.clear();
  const fs::path path = cache_file();
  std::ifstream in(path, std::ios::binary);
  if (!in) return CacheLoad::missing;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    Parsed p = parse_cache(text);
    CharacterTable::global().load(p.rows);
    return CacheLoad::loaded;
  } catch (const ParseError& e) {
    // Recover the intended size from the header when it is still readable.
    int max_n = 8;
    try {
      auto header = nlohmann::json::parse(text.substr(0, text.find('\n')));
      int n = header.value("max_n", 8);
      if (n >= 1 && n <= kMaxCacheN) max_n = n;
    } catch (const nlohmann::json::exception&) {
    }
    warning = "character table cache " + path.string() + " is corrupt (" + e.what() + "); rebuilt with n <= " +
              std::to_string(max_n);
    CharacterTable::global().clear();
    warm_cache(max_n);
    return CacheLoad::rebuilt;
  } catch (const DomainError& e) {
    warning = "character table cache " + path.string() + " has an invalid row (" + e.what() + "); rebuilt";
    CharacterTable::global().clear();
    warm_cache(8);
    return CacheLoad::rebuilt;
  }
}

bool clear_cache() {
  CharacterTable::global().clear();
  std::error_code ec;
  bool removed = fs::remove(cache_file(), ec);
  if (ec) throw ResourceError("cannot remove cache file: " + ec.message());
  return removed;
}

}  // namespace superlie
