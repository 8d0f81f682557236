#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trivzero/app/selftest.hpp"

using namespace tz;
namespace fs = std::filesystem;

namespace {
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("trivzero-test-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST(Json, PadicRoundTrip) {
  for (auto x : {PadicNumber(11, Rat(13678, 7), 9), PadicNumber(5, Rat(2, 25), 6), PadicNumber::zero(3, 8)}) {
    Json j = to_json(x);
    PadicNumber y = padic_from_json(j);
    EXPECT_EQ(y.precision(), x.precision());
    EXPECT_TRUE((x - y).is_zero());
    EXPECT_EQ(to_json(y).dump(), j.dump());
  }
  Json z = to_json(PadicNumber::zero(7, 5));
  EXPECT_EQ(z["val"], 5);
  EXPECT_EQ(z["unit"], "0");
}

TEST(Json, UnitDigitsAreBaseP) {
  Json j = to_json(PadicNumber(11, 13678, 4));
  EXPECT_EQ(j["unit"], "a305");
  EXPECT_EQ(j["val"], 0);
}

TEST(Json, CyclotomicRoundTrip) {
  CyclotomicNumber c = CyclotomicNumber(RootOfUnity(6, 1), 6).scale(Rat(3, 4)) + CyclotomicNumber(Rat(-2), 6);
  CyclotomicNumber d = cyclotomic_from_json(to_json(c));
  EXPECT_TRUE((c - d).is_zero());
  EXPECT_EQ(to_json(frac(-3, 9)), "-1/3");
}

TEST(Cache, HitMissAndVersion) {
  TempDir t;
  Cache c(t.path, true);
  int calls = 0;
  auto producer = [&] {
    ++calls;
    return Json{{"x", 1}};
  };
  EXPECT_EQ(c.get_or_compute("k", producer)["x"], 1);
  EXPECT_EQ(c.get_or_compute("k", producer)["x"], 1);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(c.hits(), 1);
  Cache newer(t.path, true, "9.9.9");
  newer.get_or_compute("k", producer);
  EXPECT_EQ(calls, 2);
}

TEST(Cache, CorruptEntryRecomputes) {
  TempDir t;
  Cache c(t.path, true);
  c.put("k", Json{{"x", 1}});
  {
    std::ofstream out(c.path_for("k"));
    out << "{not json";
  }
  ::testing::internal::CaptureStderr();
  EXPECT_FALSE(c.get("k").has_value());
  std::string err = ::testing::internal::GetCapturedStderr();
  EXPECT_NE(err.find("CorruptCacheEntry"), std::string::npos);
  int calls = 0;
  c.get_or_compute("k", [&] {
    ++calls;
    return Json{{"x", 2}};
  });
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(c.get("k")->at("x"), 2);
}

TEST(Cache, DisabledNeverWrites) {
  TempDir t;
  Cache c(t.path, false);
  c.put("k", Json{{"x", 1}});
  EXPECT_FALSE(fs::exists(t.path));
}

TEST(Cache, StableHash) {
  EXPECT_EQ(stable_hash(""), "cbf29ce484222325");
  EXPECT_EQ(stable_hash("a"), "af63dc4c8601ec8c");
}

TEST(Commands, ConfigValidation) {
  RunConfig c;
  c.p = 9;
  try {
    c.validate();
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Usage);
  }
  RunConfig d;
  d.u = "13";  // 13 - 1 is not divisible by 11
  EXPECT_THROW(d.validate(), Error);
  RunConfig ok;
  EXPECT_NO_THROW(ok.validate());
  EXPECT_EQ(ok.to_json()["u"], "12");
  EXPECT_FALSE(ok.to_json().contains("cache_dir"));
}

TEST(Commands, DeterministicWithAndWithoutCache) {
  TempDir t;
  RunConfig cfg;
  cfg.N = 12;
  for (auto [g, a] : std::vector<std::pair<std::string, std::string>>{{"zeta", "fit"}, {"linv", "compute"}, {"eis", "coeffs"}}) {
    Cache off(t.path, false), on(t.path, true);
    std::string a1 = run_command(g, a, cfg, off).dump(2);
    std::string a2 = run_command(g, a, cfg, on).dump(2);
    Cache again(t.path, true);
    std::string a3 = run_command(g, a, cfg, again).dump(2);
    EXPECT_EQ(again.hits(), 1) << g << " " << a;
    EXPECT_EQ(a1, a2);
    EXPECT_EQ(a2, a3);
  }
}

TEST(Commands, UnknownCommandIsUsage) {
  Cache off;
  try {
    run_command("zeta", "nope", RunConfig{}, off);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Usage);
  }
}

TEST(Commands, PrettyRendering) {
  Json j{{"a", Json{{"b", 1}}}, {"x", to_json(PadicNumber(5, 3, 4))}, {"l", Json::array({"s"})}};
  std::ostringstream os;
  render_pretty(j, os);
  std::string s = os.str();
  EXPECT_NE(s.find("a.b: 1\n"), std::string::npos);
  EXPECT_NE(s.find("l[0]: s\n"), std::string::npos);
  EXPECT_NE(s.find("x: "), std::string::npos);
}

TEST(Selftest, AllChecksPass) {
  Json r = run_selftest();
  for (auto& c : r["result"]["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
  EXPECT_EQ(r["result"]["failed"], 0);
  EXPECT_GE(r["result"]["passed"].get<long>(), 30);
}
