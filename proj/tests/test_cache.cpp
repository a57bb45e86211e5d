#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "meanomega/bucket_cache.hpp"

using namespace meanomega;

namespace {
std::vector<OmegaBuckets> sample() {
  return accumulate_buckets(100000, {1000, 10000, 100000});
}
}  // namespace

TEST_CASE("cache round trip preserves every bucket") {
  auto orig = sample();
  std::stringstream ss;
  write_bucket_cache(ss, orig);
  auto back = read_bucket_cache(ss);
  REQUIRE(back.size() == orig.size());
  for (std::size_t i = 0; i < orig.size(); ++i) CHECK(back[i] == orig[i]);
}

TEST_CASE("cache serialization is byte-stable") {
  auto orig = sample();
  std::stringstream a, b;
  write_bucket_cache(a, orig);
  write_bucket_cache(b, orig);
  CHECK(a.str() == b.str());
  // and a round trip re-serializes to the same bytes
  auto back = read_bucket_cache(a);
  std::stringstream c;
  write_bucket_cache(c, back);
  CHECK(c.str() == b.str());
}

TEST_CASE("cache header announces version and columns") {
  std::stringstream ss;
  write_bucket_cache(ss, sample());
  std::string line1, line2;
  std::getline(ss, line1);
  std::getline(ss, line2);
  CHECK(line1 == "# meanomega-buckets v1");
  CHECK(line2 == "x,w,T");
}

TEST_CASE("cache file path round trip") {
  std::string path = "cache_roundtrip_test.tmp";
  auto orig = sample();
  write_bucket_cache(path, orig);
  auto back = read_bucket_cache(path);
  CHECK(back == orig);
  std::remove(path.c_str());
}

TEST_CASE("corrupt caches are rejected") {
  auto expect_reject = [](const std::string& text) {
    std::stringstream ss(text);
    CHECK_THROWS_AS(read_bucket_cache(ss), CacheError);
  };
  expect_reject("");                                           // no version
  expect_reject("# other-format v9\nx,w,T\n10,0,0\n");         // wrong magic
  expect_reject("# meanomega-buckets v1\nwrong,header\n");     // wrong columns
  expect_reject("# meanomega-buckets v1\nx,w,T\n");            // no rows
  expect_reject("# meanomega-buckets v1\nx,w,T\n10,1,5\n");    // w not from 0
  expect_reject("# meanomega-buckets v1\nx,w,T\n10,0,0\n10,2,5\n");  // w gap
  expect_reject(
      "# meanomega-buckets v1\nx,w,T\n100,0,0\n100,1,5\n50,0,0\n");  // x down
  expect_reject("# meanomega-buckets v1\nx,w,T\n10,0,abc\n");  // junk field
  expect_reject("# meanomega-buckets v1\nx,w,T\n10,0\n");      // short row
}

TEST_CASE("missing file raises the cache error") {
  CHECK_THROWS_AS(read_bucket_cache(std::string("no/such/dir/f.cache")),
                  CacheError);
}
