#include "carryless/oeis.hpp"
#include "carryless/sequences.hpp"

#include <gtest/gtest.h>

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <mutex>
#include <thread>

namespace carryless::oeis {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("carryless-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

TEST(BFileName, Format) {
  EXPECT_EQ(bfile_name("A169887"), "b169887.txt");
  EXPECT_THROW(bfile_name("A16988"), usage_error);
  EXPECT_THROW(bfile_name("B169887"), usage_error);
  EXPECT_THROW(bfile_name("A16988x"), usage_error);
}

TEST(ParseBFile, Basic) {
  auto s = parse_bfile("# comment\n\n1 21\n2 23\n3 25\n", "A169887");
  ASSERT_EQ(s.records.size(), 3u);
  EXPECT_EQ(s.records[0], (BRecord{1, 21}));
  EXPECT_EQ(s.records[2], (BRecord{3, 25}));
  EXPECT_EQ(s.a_number, "A169887");
}

TEST(ParseBFile, ToleratesCrlfTabsAndNoFinalNewline) {
  auto s = parse_bfile("0\t0\r\n1   1\r\n  2 4  \r\n3 9", "A059729");
  ASSERT_EQ(s.records.size(), 4u);
  EXPECT_EQ(s.records[3], (BRecord{3, 9}));
}

TEST(ParseBFile, BigValuesAndNegatives) {
  auto s = parse_bfile("5 123456789012345678901234567890\n6 -7\n");
  EXPECT_EQ(s.records[0].value, BigInt("123456789012345678901234567890"));
  EXPECT_EQ(s.records[1].value, -7);
}

TEST(ParseBFile, Errors) {
  try {
    parse_bfile("1 21\n2 2x\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_bfile("1 21\n3 25\n"), parse_error);
  EXPECT_THROW(parse_bfile("1 21 7\n"), parse_error);
  EXPECT_THROW(parse_bfile("1\n"), parse_error);
  EXPECT_TRUE(parse_bfile("").records.empty());
}

TEST(RenderBFile, RoundTrip) {
  std::vector<BigInt> v{0, 1, 4, 9, 6};
  std::string text = render_bfile(0, v);
  EXPECT_EQ(text, "0 0\n1 1\n2 4\n3 9\n4 6\n");
  auto back = parse_bfile(text);
  ASSERT_EQ(back.records.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(back.records[i].value, v[i]);
}

TEST(Compare, MatchMismatchAndShortReference) {
  BFileSeq ref = parse_bfile("1 21\n2 23\n3 25\n", "A169887");
  auto ok = compare({21, 23, 25, 27}, 1, ref, 3);
  EXPECT_EQ(ok.verdict, Verdict::Match);
  EXPECT_EQ(ok.terms_compared, 3u);

  auto bad = compare({21, 24, 25}, 1, ref, 3);
  EXPECT_EQ(bad.verdict, Verdict::Mismatch);
  ASSERT_TRUE(bad.first_mismatch);
  EXPECT_EQ(bad.first_mismatch->index, 2);
  EXPECT_EQ(bad.first_mismatch->expected, 23);
  EXPECT_EQ(bad.first_mismatch->actual, 24);
  EXPECT_NE(bad.summary().find("n=2"), std::string::npos);

  // reference shorter than requested: not a match
  auto short_ref = compare({21, 23, 25, 27}, 1, ref, 4);
  EXPECT_EQ(short_ref.verdict, Verdict::Mismatch);
  EXPECT_FALSE(short_ref.first_mismatch);

  // offset alignment: reference starting at 0 against a sequence starting at 1
  BFileSeq zero_based = parse_bfile("0 99\n1 21\n2 23\n");
  EXPECT_EQ(compare({21, 23}, 1, zero_based, 2).verdict, Verdict::Match);
  EXPECT_THROW(compare({}, 1, ref, 1), usage_error);
}

TEST(Fetcher, FixtureTakesPrecedence) {
  fs::path fix = scratch("fix"), cache = scratch("cache");
  write_file_bytes(fix / "b059729.txt", "0 0\n1 1\n");
  write_file_bytes(cache / "b059729.txt", "0 5\n");
  Fetcher f({fix, cache, true});
  auto s = f.fetch("A059729");
  EXPECT_EQ(s.source, Source::Fixture);
  EXPECT_EQ(s.records.size(), 2u);
}

TEST(Fetcher, CacheHitWithoutNetwork) {
  fs::path cache = scratch("hit");
  write_file_bytes(cache / "b059729.txt", "0 0\n1 1\n2 4\n");
  int calls = 0;
  Fetcher f({{}, cache, false}, [&](const std::string&) { ++calls; return std::string("0 0\n"); });
  auto s = f.fetch("A059729");
  EXPECT_EQ(s.source, Source::Cache);
  EXPECT_EQ(s.records.size(), 3u);
  EXPECT_EQ(calls, 0);
}

TEST(Fetcher, OfflineMissIsUnavailable) {
  fs::path cache = scratch("offline");
  int calls = 0;
  Fetcher f({{}, cache, true}, [&](const std::string&) { ++calls; return std::string(); });
  EXPECT_THROW(f.fetch("A059729"), unavailable_error);
  EXPECT_EQ(calls, 0);
  Fetcher no_remote({{}, cache, false});
  EXPECT_THROW(no_remote.fetch("A059729"), unavailable_error);
}

TEST(Fetcher, RemoteBodyIsCachedVerbatim) {
  fs::path cache = scratch("remote");
  const std::string body = "# header\r\n0 0\r\n1 1\r\n2 4\r\n";
  std::string seen_url;
  Fetcher f({{}, cache, false, std::chrono::milliseconds(0)}, [&](const std::string& url) {
    seen_url = url;
    return body;
  });
  auto s = f.fetch("A059729");
  EXPECT_EQ(s.source, Source::Remote);
  EXPECT_EQ(seen_url, "https://oeis.org/A059729/b059729.txt");
  EXPECT_EQ(read_file_bytes(cache / "b059729.txt"), body);
  // second fetch is served from the cache
  EXPECT_EQ(f.fetch("A059729").source, Source::Cache);
  EXPECT_EQ(f.remote_requests(), 1u);
}

TEST(Fetcher, FailedRemoteIsNotRetried) {
  fs::path cache = scratch("retry");
  int calls = 0;
  Fetcher f({{}, cache, false, std::chrono::milliseconds(0)}, [&](const std::string&) -> std::string {
    ++calls;
    throw unavailable_error("no route");
  });
  EXPECT_THROW(f.fetch("A059729"), unavailable_error);
  EXPECT_THROW(f.fetch("A059729"), unavailable_error);
  EXPECT_EQ(calls, 1);
  EXPECT_FALSE(fs::exists(cache / "b059729.txt"));
}

TEST(Fetcher, MalformedRemoteBodyIsNotCached) {
  fs::path cache = scratch("malformed");
  Fetcher f({{}, cache, false, std::chrono::milliseconds(0)},
            [](const std::string&) { return std::string("<html>not found</html>"); });
  EXPECT_THROW(f.fetch("A059729"), parse_error);
  EXPECT_FALSE(fs::exists(cache / "b059729.txt"));
}

TEST(Fetcher, ConcurrentRequestsAreSerializedAndSpaced) {
  fs::path cache = scratch("spacing");
  std::atomic<int> in_flight{0}, max_in_flight{0};
  std::vector<std::chrono::steady_clock::time_point> starts;
  std::mutex m;
  Fetcher f({{}, cache, false, std::chrono::milliseconds(50)}, [&](const std::string&) {
    int now = ++in_flight;
    max_in_flight = std::max(max_in_flight.load(), now);
    {
      std::lock_guard lock(m);
      starts.push_back(std::chrono::steady_clock::now());
    }
    --in_flight;
    return std::string("0 0\n");
  });
  std::vector<std::thread> threads;
  for (const char* a : {"A059729", "A004520", "A169885"}) threads.emplace_back([&f, a] { f.fetch(a); });
  for (auto& t : threads) t.join();
  EXPECT_EQ(max_in_flight.load(), 1);
  ASSERT_EQ(starts.size(), 3u);
  std::sort(starts.begin(), starts.end());
  for (std::size_t i = 1; i < starts.size(); ++i) EXPECT_GE(starts[i] - starts[i - 1], std::chrono::milliseconds(45));
}

TEST(Fixtures, EveryShippedFileParses) {
  for (const auto& spec : supported_sequences()) {
    fs::path p = fs::path(CARRYLESS_FIXTURE_DIR) / bfile_name(spec.a_number);
    ASSERT_TRUE(fs::exists(p)) << p;
    auto s = parse_bfile(read_file_bytes(p), spec.a_number);
    EXPECT_GE(s.records.size(), 200u) << spec.a_number;
    EXPECT_EQ(s.records.front().index, spec.offset) << spec.a_number;
  }
}

TEST(CacheDir, EnvironmentOverride) {
  ::setenv("CARRYLESS_CACHE_DIR", "/tmp/somewhere", 1);
  EXPECT_EQ(default_cache_dir(), fs::path("/tmp/somewhere"));
  ::unsetenv("CARRYLESS_CACHE_DIR");
  ::setenv("XDG_DATA_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(default_cache_dir(), fs::path("/tmp/xdg/carryless/oeis"));
  ::unsetenv("XDG_DATA_HOME");
}

}  // namespace
}  // namespace carryless::oeis
