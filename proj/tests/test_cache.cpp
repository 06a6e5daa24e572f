#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "ybpa/cache.hpp"
#include "ybpa/presentations.hpp"

using namespace ybpa;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ybpa-cache-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void expect_same_levels(const Tower& a, const Tower& b, int top) {
  for (int n = 0; n <= top; ++n) {
    const auto &A = a.level(n), &B = b.level(n);
    ASSERT_EQ(A.labels, B.labels);
    EXPECT_EQ(A.unit, B.unit);
    for (int i = 0; i < A.dim(); ++i) {
      EXPECT_EQ(A.star_of(A.basis(i)), B.star_of(B.basis(i)));
      for (int j = 0; j < A.dim(); ++j) EXPECT_EQ(A.mul(A.basis(i), A.basis(j)), B.mul(B.basis(i), B.basis(j)));
    }
    for (auto& [g, s] : A.generators) EXPECT_EQ(A.gen(g), B.gen(g));
    if (n > 0)
      for (int i = 0; i < A.dim(); ++i) EXPECT_EQ(a.ptrace(n, A.basis(i)), b.ptrace(n, B.basis(i)));
    if (n < top)
      for (int i = 0; i < A.dim(); ++i) {
        EXPECT_EQ(a.include(n, A.basis(i)), b.include(n, B.basis(i)));
        EXPECT_EQ(a.shift(n, A.basis(i)), b.shift(n, B.basis(i)));
      }
  }
}

}  // namespace

TEST(Cache, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Cache, RoundTripAndHits) {
  TempDir dir;
  auto a = make_alphabet({"delta"}, {Reality::Real});
  RationalFn d = RationalFn::var(a, "delta");
  auto fresh = liu_tower(a, d, GQ::i(), 3);
  auto first = liu_tower(a, d, GQ::i(), 3);
  first->set_cache_dir(dir.path.string());
  first->level(3);
  EXPECT_EQ(first->cache_counts()[1], 4);  // levels 0..3 missed
  EXPECT_EQ(first->cache_counts()[3], 4);
  EXPECT_TRUE(fs::exists(first->cache_file(3)));

  auto second = liu_tower(a, d, GQ::i(), 3);
  second->set_cache_dir(dir.path.string());
  expect_same_levels(*fresh, *second, 3);
  EXPECT_EQ(second->cache_counts()[0], 4);
  EXPECT_EQ(second->cache_counts()[1], 0);
}

TEST(Cache, FileSchema) {
  TempDir dir;
  auto a = make_alphabet({"tau", "q"}, {Reality::Real, Reality::Real});
  auto t = bmw_tower(a, RationalFn::var(a, "tau"), RationalFn::var(a, "q"), BmwStar::Same, 2);
  t->set_cache_dir(dir.path.string());
  t->level(2);
  std::ifstream in(t->cache_file(2));
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["format"], "ybpa-basis-table");
  EXPECT_EQ(j["version"], kCacheVersion);
  EXPECT_EQ(j["algebra"], "BMW");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["labels"].size(), 3u);
  EXPECT_EQ(j["alphabet"][0]["name"], "tau");
  EXPECT_EQ(j["content_hash"].get<std::string>().size(), 16u);
}

TEST(Cache, TamperedFileIsRejected) {
  TempDir dir;
  auto a = make_alphabet({"delta"}, {Reality::Real});
  RationalFn d = RationalFn::var(a, "delta");
  {
    auto t = liu_tower(a, d, GQ::i(), 2);
    t->set_cache_dir(dir.path.string());
    t->level(2);
  }
  auto probe = liu_tower(a, d, GQ::i(), 2);
  probe->set_cache_dir(dir.path.string());
  std::string file = probe->cache_file(2);
  nlohmann::json j;
  {
    std::ifstream in(file);
    j = nlohmann::json::parse(in);
  }
  // Change one structure constant without updating the hash.
  j["table"][1][1][0][1]["num"][0][1] = "12345";
  {
    std::ofstream out(file);
    out << j.dump();
  }
  auto fresh = liu_tower(a, d, GQ::i(), 2);
  expect_same_levels(*fresh, *probe, 2);
  EXPECT_EQ(probe->cache_counts()[2], 1);  // rejected, rebuilt and rewritten
  EXPECT_EQ(probe->cache_counts()[0], 2);
}

TEST(Cache, PresentationChangeSelectsNewFile) {
  TempDir dir;
  auto a = make_alphabet({"u"}, {Reality::Real});
  auto t3 = liu_tower(a, RationalFn(GQ(3)), GQ::i(), 2);
  auto t5 = liu_tower(a, RationalFn(GQ(5)), GQ::i(), 2);
  auto tm = liu_tower(a, RationalFn(GQ(3)), -GQ::i(), 3);
  t3->set_cache_dir(dir.path.string());
  t5->set_cache_dir(dir.path.string());
  tm->set_cache_dir(dir.path.string());
  EXPECT_NE(t3->cache_file(2), t5->cache_file(2));
  // eps first appears in the relations at three strands.
  EXPECT_EQ(t3->cache_file(2), tm->cache_file(2));
  auto t3b = liu_tower(a, RationalFn(GQ(3)), GQ::i(), 3);
  t3b->set_cache_dir(dir.path.string());
  EXPECT_NE(t3b->cache_file(3), tm->cache_file(3));
  t3->level(2);
  t5->level(2);
  EXPECT_EQ(t5->cache_counts()[0], 0);
  EXPECT_EQ(t5->trace(1, t5->level(1).one()), RationalFn(GQ(5)));
}
