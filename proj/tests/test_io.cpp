#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wheelrb/cache.hpp"
#include "wheelrb/errors.hpp"
#include "wheelrb/extremal.hpp"
#include "wheelrb/json_io.hpp"
#include "wheelrb/table.hpp"

using namespace wheelrb;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wheelrb_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

std::vector<std::string> lines_of(const fs::path& f) {
  std::ifstream in(f);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

void write_lines(const fs::path& f, const std::vector<std::string>& lines) {
  std::ofstream out(f, std::ios::trunc);
  for (const auto& l : lines) out << l << "\n";
}

}  // namespace

TEST_CASE("coloring round trip") {
  for (int t = 4; t <= 7; ++t)
    for (int d = t; d <= t + 4; ++d) {
      auto c = construct_spoke_grouped(d, t).coloring;
      auto text = dump(coloring_to_json(c));
      auto back = coloring_from_json(text);
      CHECK(back.table() == c.table());
      CHECK(dump(coloring_to_json(back)) == text);
    }
  auto c = construct_rim_grouped(10, 3, 7).coloring;
  CHECK(coloring_from_json(dump(coloring_to_json(c))).table() == c.table());
}

TEST_CASE("coloring document layout") {
  auto c = construct_spoke_grouped(8, 5).coloring;
  Json j = coloring_to_json(c);
  CHECK(j["format"] == 1);
  CHECK(j["d"] == 8);
  CHECK(j["s"] == 1);
  CHECK(j["rim"].size() == 8);
  CHECK(j["spokes"].size() == 1);
  CHECK(j["spokes"][0].size() == 8);
}

TEST_CASE("missing format is version 1; other versions are rejected") {
  CHECK(coloring_from_json(std::string(R"({"d":3,"s":1,"spokes":[[1,2,3]],"rim":[4,5,6]})")).color_count() == 6);
  try {
    coloring_from_json(std::string(R"({"format":2,"d":3,"s":1,"spokes":[[1,2,3]],"rim":[4,5,6]})"));
    FAIL("accepted format 2");
  } catch (const SchemaError& e) {
    CHECK(e.pointer() == "/format");
  }
}

TEST_CASE("syntax errors carry a byte offset") {
  const std::string text = R"({"d":3,"s":1,"spokes":[[1,2,3]],"rim":[4,5,6})";
  try {
    coloring_from_json(text);
    FAIL("accepted malformed JSON");
  } catch (const SchemaError& e) {
    CHECK(e.byte_offset() > 0);
    CHECK(e.byte_offset() <= text.size() + 1);
    CHECK(std::string(e.what()).find(std::to_string(e.byte_offset())) != std::string::npos);
  }
}

TEST_CASE("structural errors carry a pointer") {
  struct Bad {
    const char* text;
    const char* pointer;
  };
  for (const auto& b : std::initializer_list<Bad>{
           {R"({"s":1,"spokes":[[1,2,3]],"rim":[4,5,6]})", "/d"},
           {R"({"d":"3","s":1,"spokes":[[1,2,3]],"rim":[4,5,6]})", "/d"},
           {R"({"d":3,"s":1,"spokes":[[1,2,3]],"rim":[4,5]})", "/rim"},
           {R"({"d":3,"s":1,"spokes":[[1,2,3]],"rim":[4,0,6]})", "/rim/1"},
           {R"({"d":3,"s":2,"spokes":[[1,2,3]],"rim":[4,5,6]})", "/spokes"},
           {R"({"d":3,"s":1,"spokes":[[1,2,-3]],"rim":[4,5,6]})", "/spokes/0/2"},
           {R"([1,2,3])", ""},
       }) {
    CAPTURE(std::string(b.text));
    try {
      coloring_from_json(std::string(b.text));
      FAIL("accepted");
    } catch (const SchemaError& e) {
      CHECK(e.pointer() == b.pointer);
    }
  }
}

TEST_CASE("checksum is FNV-1a 64") {
  CHECK(checksum("") == "cbf29ce484222325");
  CHECK(checksum("a") == "af63dc4c8601ec8c");
}

TEST_CASE("cache stores and returns exact results") {
  TempDir dir;
  const auto file = dir.path / "cache.ndjson";
  WheelGraph g(7, 1);
  auto p = ThetaPattern::fan(4);
  {
    SolveCache cache(file);
    auto r = solve_cached(g, p, {}, &cache);
    CHECK(r.rb_value == 11);
    CHECK_FALSE(r.from_cache);
    CHECK(lines_of(file).size() == 1);
    // Duplicate store writes nothing.
    CHECK_FALSE(cache.store(g, p, r));
  }
  SolveCache again(file);
  auto hit = solve_cached(g, p, {}, &again);
  CHECK(hit.from_cache);
  CHECK(hit.rb_value == 11);
  CHECK_FALSE(find_rainbow(*hit.witness, p).has_value());
  CHECK(again.warnings().empty());
  CHECK(lines_of(file).size() == 1);
}

TEST_CASE("cache skips unverifiable results") {
  TempDir dir;
  SolveCache cache(dir.path / "c.ndjson");
  WheelGraph g(7, 1);
  auto p = ThetaPattern::fan(4);
  auto bounded = solve_exact(g, p, {-1, 0, 11, false});
  CHECK_FALSE(cache.store(g, p, bounded));
  auto partial = solve_exact(WheelGraph(8, 2), ThetaPattern::fan(5), {1, 0, 0, false});
  CHECK_FALSE(cache.store(WheelGraph(8, 2), ThetaPattern::fan(5), partial));
}

TEST_CASE("cache ignores corrupt lines with a warning") {
  TempDir dir;
  const auto file = dir.path / "cache.ndjson";
  WheelGraph g(6, 1);
  auto p = ThetaPattern::cycle(4);
  {
    SolveCache cache(file);
    solve_cached(g, p, {}, &cache);
    solve_cached(WheelGraph(7, 1), ThetaPattern::fan(4), {}, &cache);
  }
  auto lines = lines_of(file);
  REQUIRE(lines.size() == 2);

  SUBCASE("garbage line") {
    lines.insert(lines.begin(), "{not json");
    write_lines(file, lines);
    SolveCache cache(file);
    auto r = solve_cached(g, p, {}, &cache);
    CHECK(r.from_cache);
    CHECK(r.rb_value == 9);
    CHECK(cache.warnings().size() == 1);
  }
  SUBCASE("checksum mismatch") {
    auto pos = lines[0].find("\"ar\":");
    REQUIRE(pos != std::string::npos);
    lines[0].replace(pos, 6, "\"ar\":1");
    write_lines(file, lines);
    SolveCache cache(file);
    auto r = solve_cached(g, p, {}, &cache);
    CHECK_FALSE(r.from_cache);
    CHECK(r.rb_value == 9);
    CHECK(cache.warnings().size() == 1);
  }
  SUBCASE("tampered witness with a fresh checksum") {
    Json line = Json::parse(lines[0]);
    Json& rec = line["record"];
    rec["ar"] = rec["ar"].get<int>() + 1;
    rec["rb"] = rec["rb"].get<int>() + 1;
    line["checksum"] = checksum(rec.dump());
    lines[0] = line.dump();
    write_lines(file, lines);
    SolveCache cache(file);
    auto r = solve_cached(g, p, {}, &cache);
    CHECK_FALSE(r.from_cache);
    CHECK(r.rb_value == 9);
    CHECK(cache.warnings().size() == 1);
  }
}

TEST_CASE("default cache path follows the environment") {
  TempDir dir;
  ::setenv("WHEELRB_CACHE_DIR", dir.path.c_str(), 1);
  CHECK(SolveCache::default_path() == dir.path / "solve_cache.ndjson");
  ::unsetenv("WHEELRB_CACHE_DIR");
}

TEST_CASE("unwritable cache raises an I/O error") {
  TempDir dir;
  SolveCache cache(dir.path / "missing" / "deeper" / "c.ndjson");
  fs::create_directories(dir.path / "missing");
  std::ofstream(dir.path / "missing" / "deeper") << "file, not a directory";
  CHECK_THROWS_AS(solve_cached(WheelGraph(5, 1), ThetaPattern::cycle(3), {}, &cache), IoError);
}

TEST_CASE("table: fans on consecutive wheels") {
  auto rows = emit_table({7, 8, 9}, {1}, {ThetaPattern::fan(4)});
  REQUIRE(rows.size() == 3);
  const int want[] = {11, 13, 14};  // floor(3d/2) + 1
  for (int k = 0; k < 3; ++k) {
    CAPTURE(k);
    CHECK(rows[k].d == 7 + k);
    REQUIRE(rows[k].formula);
    CHECK(rows[k].formula->value == want[k]);
    REQUIRE(rows[k].solver);
    CHECK(rows[k].solver->rb_value == want[k]);
    CHECK(rows[k].agree);
  }
}

TEST_CASE("table: mixed patterns on one wheel") {
  auto rows = emit_table({10}, {1}, {ThetaPattern::cycle(5), ThetaPattern(5, {3}), ThetaPattern::fan(5)});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].solver->rb_value == 16);
  CHECK(rows[1].solver->rb_value == 16);
  CHECK(rows[2].solver->rb_value == 17);
  for (const auto& r : rows) CHECK(r.agree);
}

TEST_CASE("table: out-of-domain rows") {
  auto rows = emit_table({8}, {1}, {ThetaPattern::cycle(5)}, {false});
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].formula.has_value());
  auto csv = table_to_csv(rows);
  CHECK(csv.find("out_of_domain") != std::string::npos);
}

TEST_CASE("table: empty ranges and csv shape") {
  CHECK(emit_table({}, {1}, {ThetaPattern::fan(4)}).empty());
  CHECK(emit_table({3}, {1}, {ThetaPattern::fan(6)}).empty());
  auto csv = table_to_csv({});
  CHECK(csv == "d,s,t,chords,formula,kind,construction_lb,solver,agree\n");
  auto rows = emit_table({8}, {1}, {ThetaPattern(6, {3, 4})}, {false});
  csv = table_to_csv(rows);
  CHECK(csv.find(",3;4,") != std::string::npos);
  Json j = table_to_json(rows);
  CHECK(j["format"] == 1);
  CHECK(j["rows"].size() == 1);
}

TEST_CASE("table is byte-identical across runs") {
  auto a = table_to_csv(emit_table({6, 7}, {1, 2}, {ThetaPattern::cycle(4), ThetaPattern::fan(4)}));
  auto b = table_to_csv(emit_table({6, 7}, {1, 2}, {ThetaPattern::cycle(4), ThetaPattern::fan(4)}));
  CHECK(a == b);
}
