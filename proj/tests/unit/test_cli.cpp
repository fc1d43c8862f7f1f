#include "guekdv/cli/app.hpp"
#include "guekdv/cli/config.hpp"
#include "guekdv/cli/map_cache.hpp"
#include "guekdv/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace guekdv;
using namespace guekdv::cli;
using json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("guekdv_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("config files") {
  const Config c = Config::parse("# budgets\ng_max = 2\n\nwick_bound=14  # cap\nformat=csv\n");
  CHECK(c.g_max == 2);
  CHECK(c.wick_bound == 14);
  CHECK(c.format == "csv");
  CHECK(c.n_max == Config{}.n_max);
  CHECK_THROWS_WITH_AS(Config::parse("colour=blue\n"), doctest::Contains("colour"), ParseError);
  CHECK_THROWS_WITH_AS(Config::parse("wick_bound=21\n"), doctest::Contains("wick_bound"), ParseError);
  CHECK_THROWS_WITH_AS(Config::parse("i_max=0\n"), doctest::Contains("i_max"), ParseError);
  CHECK_THROWS_WITH_AS(Config::parse("depth=ten\n"), doctest::Contains("depth"), ParseError);
  CHECK_THROWS_AS(Config::parse("g_max\n"), ParseError);
}

TEST_CASE("cache documents") {
  const std::string a = R"({"version":1,"producer":"oracle","entries":{"1;4":"1","0;2,2":"2"}})";
  const MapCache ca = MapCache::parse(a, "a.json");
  CHECK(ca.size() == 2);
  const MapCache round = MapCache::parse(ca.dump(), "round");
  CHECK(round.dump() == ca.dump());
  CHECK(json::parse(ca.dump())["entries"]["0;2,2"] == "2");
  CHECK_FALSE(json::parse(ca.dump()).contains("producers"));

  SUBCASE("keys are sorted") { CHECK(MapCache::key_string(MapCache::parse_key("1;4,2")) == "1;2,4"); }
  SUBCASE("disjoint merge is the union") {
    MapCache m = ca;
    m.merge(MapCache::parse(R"({"version":1,"producer":"resolvent","entries":{"2;8":"21"}})", "b.json"));
    CHECK(m.size() == 3);
    const json doc = json::parse(m.dump());
    CHECK(doc["producer"] == "oracle");
    CHECK(doc["producers"]["2;8"] == "resolvent");
    CHECK(MapCache::parse(m.dump(), "c").dump() == m.dump());
  }
  SUBCASE("identical duplicates change nothing") {
    MapCache m = ca;
    m.merge(ca);
    CHECK(m.dump() == ca.dump());
  }
  SUBCASE("conflicts name both sources") {
    MapCache m = ca;
    const MapCache bad = MapCache::parse(R"({"version":1,"producer":"resolvent","entries":{"1;4":"2"}})", "bad.json");
    try {
      m.merge(bad);
      FAIL("no conflict raised");
    } catch (const CacheConflict& e) {
      const std::string w = e.what();
      CHECK(w.find("a.json") != std::string::npos);
      CHECK(w.find("bad.json") != std::string::npos);
      CHECK(w.find("resolvent") != std::string::npos);
    }
    CHECK(m.dump() == ca.dump());
  }
  CHECK_THROWS_AS(MapCache::parse(R"({"version":2,"producer":"oracle","entries":{}})", "v"), ParseError);
  CHECK_THROWS_AS(MapCache::parse(R"({"version":1,"producer":"guess","entries":{}})", "p"), ParseError);
  CHECK_THROWS_AS(MapCache::parse(R"({"version":1,"producer":"oracle","entries":{"1;4":1}})", "n"), ParseError);
  CHECK_THROWS_AS(MapCache::parse(R"({"version":1,"producer":"oracle","entries":{"x;4":"1"}})", "k"), ParseError);
}

TEST_CASE("command line results") {
  const Result m = call({"map", "--g", "1", "--i", "4"});
  CHECK(m.code == 0);
  CHECK(json::parse(m.out)["value"] == "1");
  const Result w = call({"witten", "--g", "1", "--d", "1"});
  CHECK(json::parse(w.out)["value"] == "1/24");
  const Result v = call({"verify", "eq56", "--h", "1", "--n", "1", "--jmax", "3"});
  CHECK(v.code == 0);
  const json vj = json::parse(v.out);
  CHECK(vj["failures"] == 0);
  CHECK(vj["checked"].get<int>() > 0);
  const Result w1 = call({"verify", "eq56", "--h", "1", "--n", "2", "--workers", "1"});
  const Result w4 = call({"verify", "eq56", "--h", "1", "--n", "2", "--workers", "4"});
  CHECK(w1.out == w4.out);
  const Result csv = call({"limit", "--g", "0", "--x", "1", "--kappa-list", "100,200", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("kappa,indices,scaled_value,limit,rel_error\n", 0) == 0);
}

TEST_CASE("usage errors name the flag") {
  const Result bad_int = call({"map", "--g", "x", "--i", "4"});
  CHECK(bad_int.code == 2);
  CHECK(bad_int.err.find("--g") != std::string::npos);
  const Result missing = call({"witten", "--g", "1"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--d") != std::string::npos);
  const Result bad_x = call({"limit", "--x", "1/0"});
  CHECK(bad_x.code == 2);
  CHECK(bad_x.err.find("--x") != std::string::npos);
  const Result neg = call({"map", "--g", "0", "--i", "0,2"});
  CHECK(neg.code == 2);
  CHECK(neg.err.find("--i") != std::string::npos);
  CHECK(call({"verify", "nonsense"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  const Result fmt = call({"map", "--g", "1", "--i", "4", "--format", "csv"});
  CHECK(fmt.code == 2);
  CHECK(fmt.err.find("--format") != std::string::npos);

  const std::string cfg = temp_path("bad.cfg");
  write_file(cfg, "wick_bound=30\n");
  const Result c = call({"map", "--g", "1", "--i", "4", "--config", cfg});
  CHECK(c.code == 2);
  CHECK(c.err.find("--config") != std::string::npos);
  CHECK(c.err.find("wick_bound") != std::string::npos);
  std::filesystem::remove(cfg);
}

TEST_CASE("cache persistence and merge") {
  const std::string a = temp_path("a.json");
  const std::string b = temp_path("b.json");
  const std::string out = temp_path("out.json");
  for (const auto& p : {a, b, out}) std::filesystem::remove(p);

  CHECK(call({"map", "--g", "1", "--i", "4", "--cache", a}).code == 0);
  CHECK(call({"map", "--g", "2", "--i", "8", "--cache", b}).code == 0);
  const MapCache ca = MapCache::load(a);
  CHECK(ca.entries().count({1, gue::IndexMultiset{4}}) == 1);

  const Result m = call({"cache", "merge", a, b, "--cache", out});
  CHECK(m.code == 0);
  const MapCache merged = MapCache::load(out);
  CHECK(merged.size() == ca.size() + MapCache::load(b).size());
  const std::string before = merged.dump();
  CHECK(call({"cache", "merge", a, "--cache", out}).code == 0);
  CHECK(MapCache::load(out).dump() == before);

  write_file(b, R"({"version":1,"producer":"oracle","entries":{"1;4":"7"}})");
  const Result conflict = call({"cache", "merge", a, b});
  CHECK(conflict.code == 1);
  CHECK(conflict.err.find(a) != std::string::npos);
  CHECK(conflict.err.find(b) != std::string::npos);

  const Result shown = call({"cache", "show", "--cache", out});
  CHECK(json::parse(shown.out)["entries"]["2;8"] == "21");
  for (const auto& p : {a, b, out}) std::filesystem::remove(p);
}
