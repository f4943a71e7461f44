#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "superlie/cache.hpp"
#include "superlie/errors.hpp"
#include "superlie/symfunc.hpp"

using namespace superlie;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("superlie-cache-test-" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    ::setenv("SUPERLIE_CACHE_DIR", dir_.c_str(), 1);
    CharacterTable::global().clear();
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("SUPERLIE_CACHE_DIR");
    CharacterTable::global().clear();
  }

  static std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
  }

  fs::path dir_;
};

}  // namespace

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CacheTest, LocationFollowsEnvironment) {
  EXPECT_EQ(cache_dir(), dir_);
  EXPECT_EQ(cache_file().parent_path(), dir_);
}

TEST_F(CacheTest, WarmWritesVersionedDigestedFile) {
  CacheInfo info = warm_cache(6);
  EXPECT_EQ(info.path, cache_file());
  EXPECT_EQ(info.max_n, 6);
  auto lines = read_lines(cache_file());
  ASSERT_FALSE(lines.empty());
  auto header = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(header.at("format_version"), kCacheFormatVersion);
  EXPECT_EQ(header.at("max_n"), 6);
  std::string body;
  for (std::size_t i = 1; i < lines.size(); ++i) body += lines[i] + "\n";
  EXPECT_EQ(header.at("digest"), sha256_hex(body));
  EXPECT_EQ(header.at("digest"), info.digest);
  // One row per (lambda, mu) with |lambda| = |mu| <= 6: sum of p(n)^2.
  EXPECT_EQ(lines.size() - 1, std::size_t{1 + 4 + 9 + 25 + 49 + 121});
  EXPECT_EQ(info.rows, lines.size() - 1);
  EXPECT_THROW(warm_cache(0), DomainError);
  EXPECT_THROW(warm_cache(kMaxCacheN + 1), DomainError);
}

TEST_F(CacheTest, TrivialCharacterRowsAreOne) {
  warm_cache(8);
  int seen = 0;
  for (const auto& line : read_lines(cache_file())) {
    auto row = nlohmann::json::parse(line);
    if (!row.is_array()) continue;
    Partition lambda = Partition::parse(row[0].get<std::string>());
    if (lambda.parts().size() == 1) {
      EXPECT_EQ(row[2], 1) << line;
      ++seen;
    }
  }
  EXPECT_EQ(seen, 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22);
}

TEST_F(CacheTest, LoadRoundTrip) {
  std::string warning;
  EXPECT_EQ(load_cache(warning), CacheLoad::missing);
  warm_cache(5);
  CharacterTable::global().clear();
  EXPECT_EQ(load_cache(warning), CacheLoad::loaded);
  EXPECT_TRUE(warning.empty());
  EXPECT_GT(CharacterTable::global().size(), 0u);
  EXPECT_EQ(CharacterTable::global().value(Partition{2, 1}, Partition{3}), -1);
  EXPECT_EQ(CharacterTable::global().value(Partition{3, 2}, Partition{1, 1, 1, 1, 1}), 5);
}

TEST_F(CacheTest, CorruptFileIsRebuilt) {
  warm_cache(5);
  auto lines = read_lines(cache_file());
  {
    std::ofstream out(cache_file(), std::ios::trunc);
    out << lines[0] << "\n" << "[\"(1)\",\"(1)\",7]\n";
  }
  CharacterTable::global().clear();
  std::string warning;
  EXPECT_EQ(load_cache(warning), CacheLoad::rebuilt);
  EXPECT_FALSE(warning.empty());
  EXPECT_EQ(read_lines(cache_file()), lines);
  EXPECT_EQ(CharacterTable::global().value(Partition{1}, Partition{1}), 1);

  {
    std::ofstream out(cache_file(), std::ios::trunc);
    out << "garbage\n";
  }
  warning.clear();
  EXPECT_EQ(load_cache(warning), CacheLoad::rebuilt);
  EXPECT_FALSE(warning.empty());
  auto header = nlohmann::json::parse(read_lines(cache_file())[0]);
  EXPECT_EQ(header.at("max_n"), 8);
}

TEST_F(CacheTest, Clear) {
  EXPECT_FALSE(clear_cache());
  warm_cache(4);
  EXPECT_TRUE(fs::exists(cache_file()));
  EXPECT_TRUE(clear_cache());
  EXPECT_FALSE(fs::exists(cache_file()));
  EXPECT_EQ(CharacterTable::global().size(), 0u);
  std::string warning;
  EXPECT_EQ(load_cache(warning), CacheLoad::missing);
}
