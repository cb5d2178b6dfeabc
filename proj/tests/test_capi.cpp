#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "wheelrb/wheelrb.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  wrb_string_free(s);
  return out;
}

wrb_wheel* wheel(int d, int s) {
  wrb_wheel* w = nullptr;
  REQUIRE(wrb_wheel_new(d, s, &w) == WRB_OK);
  return w;
}

wrb_pattern* fan(int t) {
  wrb_pattern* p = nullptr;
  REQUIRE(wrb_pattern_fan(t, &p) == WRB_OK);
  return p;
}

}  // namespace

TEST_CASE("wheel handles") {
  wrb_wheel* w = wheel(8, 2);
  CHECK(wrb_wheel_d(w) == 8);
  CHECK(wrb_wheel_s(w) == 2);
  CHECK(wrb_wheel_vertex_count(w) == 10);
  CHECK(wrb_wheel_edge_count(w) == 24);
  int id = 0;
  CHECK(wrb_wheel_spoke_id(w, 2, 3, &id) == WRB_OK);
  CHECK(id == 11);
  CHECK(wrb_wheel_rim_id(w, 8, &id) == WRB_OK);
  CHECK(id == 24);
  int x = -1, y = -1;
  CHECK(wrb_wheel_endpoints(w, 24, &x, &y) == WRB_OK);
  CHECK(((x == 9 && y == 2) || (x == 2 && y == 9)));
  char* json = nullptr;
  CHECK(wrb_wheel_to_json(w, &json) == WRB_OK);
  CHECK(take(json).find("\"d\"") != std::string::npos);
  wrb_wheel_free(w);
}

TEST_CASE("errors set status and message") {
  wrb_wheel* w = nullptr;
  CHECK(wrb_wheel_new(2, 1, &w) == WRB_ERR_PARAMETER);
  CHECK(w == nullptr);
  CHECK(std::strlen(wrb_last_error()) > 0);
  CHECK(std::string(wrb_status_name(WRB_ERR_PARAMETER)) == "parameter_error");

  w = wheel(5, 1);
  int id = 0;
  CHECK(wrb_wheel_spoke_id(w, 2, 1, &id) != WRB_OK);
  CHECK(wrb_wheel_rim_id(w, 6, &id) != WRB_OK);
  int a, b;
  CHECK(wrb_wheel_endpoints(w, 11, &a, &b) != WRB_OK);
  wrb_wheel_free(w);

  wrb_pattern* p = nullptr;
  CHECK(wrb_pattern_parse(5, "3,2", &p) == WRB_ERR_PARAMETER);
  CHECK(wrb_pattern_parse(5, "x", &p) == WRB_ERR_PARAMETER);
  CHECK(wrb_count_copies(nullptr, nullptr, WRB_ENUM_ORACLE, nullptr) == WRB_ERR_PARAMETER);
}

TEST_CASE("patterns") {
  wrb_pattern* p = nullptr;
  REQUIRE(wrb_pattern_parse(7, "4,5", &p) == WRB_OK);
  CHECK(wrb_pattern_t(p) == 7);
  CHECK(wrb_pattern_ell(p) == 2);
  CHECK_FALSE(wrb_pattern_is_fan(p));
  CHECK(wrb_pattern_is_symmetric(p));
  CHECK(wrb_pattern_multiplicity(p) == 1);
  char* name = nullptr;
  REQUIRE(wrb_pattern_name(p, &name) == WRB_OK);
  CHECK_FALSE(take(name).empty());
  wrb_pattern_free(p);

  const int chords[] = {3};
  REQUIRE(wrb_pattern_new(5, chords, 1, &p) == WRB_OK);
  CHECK(wrb_pattern_multiplicity(p) == 2);
  wrb_pattern_free(p);
  REQUIRE(wrb_pattern_cycle(5, &p) == WRB_OK);
  CHECK(wrb_pattern_ell(p) == 0);
  wrb_pattern_free(p);
}

TEST_CASE("copy counts") {
  wrb_wheel* w = wheel(8, 2);
  wrb_pattern* p = fan(5);
  size_t n = 0;
  CHECK(wrb_count_copies(w, p, WRB_ENUM_ORACLE, &n) == WRB_OK);
  CHECK(n == 48);
  size_t h = 0;
  CHECK(wrb_count_copies(w, p, WRB_ENUM_HUB_CENTERED, &h) == WRB_OK);
  CHECK(h <= n);
  char* json = nullptr;
  CHECK(wrb_enumerate_json(w, p, WRB_ENUM_ORACLE, &json) == WRB_OK);
  CHECK_FALSE(take(json).empty());
  int spoke = 0, count = 0;
  wrb_wheel_spoke_id(w, 1, 1, &spoke);
  CHECK(wrb_incidence_count(w, p, spoke, &count) == WRB_OK);
  CHECK(count > 0);
  wrb_pattern_free(p);
  wrb_wheel_free(w);
}

TEST_CASE("constructions and verification") {
  wrb_coloring* c = nullptr;
  char* report = nullptr;
  REQUIRE(wrb_construct(WRB_SPOKE_GROUPED, 8, 1, 5, &c, &report) == WRB_OK);
  CHECK(take(report).find("colors_used") != std::string::npos);
  CHECK(wrb_coloring_color_count(c) == 13);
  CHECK(wrb_coloring_d(c) == 8);
  CHECK(wrb_coloring_s(c) == 1);

  wrb_pattern* f5 = fan(5);
  int found = -1;
  size_t len = 0;
  CHECK(wrb_find_rainbow(c, f5, &found, nullptr, 0, &len) == WRB_OK);
  CHECK(found == 0);
  int rainbow_free = 0, bounds = 0;
  char* verdict = nullptr;
  CHECK(wrb_verify_json(c, f5, &rainbow_free, &bounds, &verdict) == WRB_OK);
  CHECK(rainbow_free == 1);
  CHECK(bounds == 1);
  take(verdict);

  char* text = nullptr;
  REQUIRE(wrb_coloring_to_json(c, &text) == WRB_OK);
  wrb_coloring* back = nullptr;
  REQUIRE(wrb_coloring_from_json(text, &back) == WRB_OK);
  for (int e = 1; e <= 16; ++e) {
    int x = 0, y = 0;
    wrb_coloring_color(c, e, &x);
    wrb_coloring_color(back, e, &y);
    CHECK(x == y);
  }
  take(text);
  wrb_coloring_free(back);
  wrb_coloring_free(c);

  REQUIRE(wrb_construct(WRB_RIM_GROUPED, 10, 1, 6, &c, nullptr) == WRB_OK);
  CHECK(wrb_coloring_color_count(c) == 16);
  wrb_pattern* f6 = fan(6);
  int edges[16] = {0};
  CHECK(wrb_find_rainbow(c, f6, &found, edges, 16, &len) == WRB_OK);
  CHECK(found == 0);
  CHECK(wrb_find_rainbow(c, f5, &found, edges, 16, &len) == WRB_OK);
  CHECK(found == 1);
  CHECK(len == 7);
  CHECK(wrb_find_rainbow(c, f5, &found, edges, 3, &len) == WRB_ERR_PARAMETER);
  wrb_pattern_free(f6);
  wrb_pattern_free(f5);
  wrb_coloring_free(c);

  CHECK(wrb_construct(WRB_SPOKE_GROUPED, 2, 1, 5, &c, nullptr) != WRB_OK);
}

TEST_CASE("coloring from colors and json errors") {
  wrb_wheel* w = wheel(3, 1);
  const int colors[] = {1, 2, 3, 4, 5, 6};
  wrb_coloring* c = nullptr;
  REQUIRE(wrb_coloring_new(w, colors, 6, &c) == WRB_OK);
  CHECK(wrb_coloring_color_count(c) == 6);
  wrb_coloring_free(c);
  CHECK(wrb_coloring_new(w, colors, 5, &c) == WRB_ERR_PARAMETER);
  wrb_wheel_free(w);

  CHECK(wrb_coloring_from_json("{\"d\":3,", &c) == WRB_ERR_SCHEMA);
  CHECK(wrb_last_error_offset() > 0);
  CHECK(wrb_coloring_from_json("{\"format\":7,\"d\":3,\"s\":1,\"spokes\":[[1,2,3]],\"rim\":[4,5,6]}", &c) ==
        WRB_ERR_SCHEMA);
  CHECK(std::string(wrb_last_error()).find("/format") != std::string::npos);
  CHECK(wrb_coloring_read_file("/nonexistent/coloring.json", &c) == WRB_ERR_IO);
}

TEST_CASE("lemmas") {
  wrb_pattern* p = fan(5);
  int holds = 0;
  char* report = nullptr;
  CHECK(wrb_lemma_verify(WRB_LEMMA_PAIR, 8, 1, p, 0, &holds, &report) == WRB_OK);
  CHECK(holds == 1);
  take(report);
  CHECK(wrb_lemma_verify(WRB_LEMMA_MULTI, 8, 1, p, 4, &holds, nullptr) == WRB_OK);
  CHECK(holds == 1);
  CHECK(wrb_lemma_verify(WRB_LEMMA_PAIR, 3, 1, p, 0, &holds, nullptr) == WRB_ERR_HYPOTHESIS);
  wrb_pattern_free(p);
}

TEST_CASE("formulas") {
  wrb_pattern* p = fan(5);
  wrb_formula f;
  CHECK(wrb_rb_formula(10, 1, p, &f) == WRB_OK);
  CHECK(f.in_domain);
  CHECK(f.value == 17);
  CHECK(f.kind == WRB_EXACT);
  CHECK(std::strlen(f.source) > 0);
  CHECK(wrb_rb_formula(3, 1, p, &f) == WRB_OK);
  CHECK_FALSE(f.in_domain);
  wrb_pattern_free(p);

  REQUIRE(wrb_pattern_cycle(4, &p) == WRB_OK);
  CHECK(wrb_known_value(6, 1, p, &f) == WRB_OK);
  CHECK(f.in_domain);
  CHECK(f.external);
  CHECK(f.value == 9);
  wrb_pattern_free(p);
}

TEST_CASE("solver through the C API") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "wheelrb_capi_cache";
  fs::remove_all(dir);
  const std::string cache = (dir / "c.ndjson").string();

  wrb_wheel* w = wheel(7, 1);
  wrb_pattern* p = fan(4);
  wrb_budget b;
  wrb_budget_init(&b);
  CHECK(b.max_merges == -1);

  wrb_solve_result* r = nullptr;
  REQUIRE(wrb_solve(w, p, &b, cache.c_str(), &r) == WRB_OK);
  CHECK(wrb_solve_status_of(r) == WRB_SOLVE_EXACT);
  CHECK(wrb_solve_rb(r) == 11);
  CHECK(wrb_solve_ar(r) == 10);
  CHECK(wrb_solve_rb_lower(r) == 11);
  CHECK(wrb_solve_rb_upper(r) == 11);
  CHECK_FALSE(wrb_solve_from_cache(r));
  wrb_coloring* witness = nullptr;
  REQUIRE(wrb_solve_witness(r, &witness) == WRB_OK);
  int found = 1;
  CHECK(wrb_find_rainbow(witness, p, &found, nullptr, 0, nullptr) == WRB_OK);
  CHECK(found == 0);
  CHECK(wrb_coloring_color_count(witness) == 10);
  wrb_coloring_free(witness);
  char* json = nullptr;
  CHECK(wrb_solve_to_json(r, &json) == WRB_OK);
  CHECK(take(json).find("\"status\": \"exact\"") != std::string::npos);
  wrb_solve_result_free(r);

  REQUIRE(wrb_solve(w, p, &b, cache.c_str(), &r) == WRB_OK);
  CHECK(wrb_solve_from_cache(r));
  CHECK(wrb_solve_warning_count(r) == 0);
  CHECK(wrb_solve_warning(r, 0) == nullptr);
  wrb_solve_result_free(r);

  int lb = 0;
  CHECK(wrb_lower_bound_from_construction(w, p, &lb) == WRB_OK);
  CHECK(lb == 11);
  wrb_pattern_free(p);
  wrb_wheel_free(w);

  w = wheel(8, 2);
  p = fan(5);
  b.max_merges = 1;
  REQUIRE(wrb_solve(w, p, &b, nullptr, &r) == WRB_OK);
  CHECK(wrb_solve_status_of(r) == WRB_SOLVE_UNKNOWN);
  CHECK(wrb_solve_rb_lower(r) <= wrb_solve_rb_upper(r));
  wrb_solve_result_free(r);
  CHECK(wrb_lower_bound_from_construction(w, p, &lb) == WRB_ERR_PARAMETER);
  wrb_pattern_free(p);
  wrb_wheel_free(w);

  ::setenv("WHEELRB_CACHE_DIR", dir.c_str(), 1);
  char* path = nullptr;
  REQUIRE(wrb_default_cache_path(&path) == WRB_OK);
  CHECK(take(path) == (dir / "solve_cache.ndjson").string());
  ::unsetenv("WHEELRB_CACHE_DIR");
  fs::remove_all(dir);
}

TEST_CASE("tables") {
  wrb_pattern* p = fan(4);
  const int ds[] = {7, 8, 9};
  const int ss[] = {1};
  const wrb_pattern* ps[] = {p};
  wrb_budget b;
  wrb_budget_init(&b);
  int agree = 0;
  char* csv = nullptr;
  REQUIRE(wrb_emit_table(ds, 3, ss, 1, ps, 1, 1, &b, nullptr, WRB_TABLE_CSV, &agree, &csv) == WRB_OK);
  CHECK(agree == 1);
  const std::string text = take(csv);
  CHECK(text.rfind("d,s,t,chords,formula,kind,construction_lb,solver,agree\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  char* json = nullptr;
  REQUIRE(wrb_emit_table(ds, 3, ss, 1, ps, 1, 0, nullptr, nullptr, WRB_TABLE_JSON, nullptr, &json) == WRB_OK);
  CHECK(take(json).find("\"rows\"") != std::string::npos);
  wrb_pattern_free(p);
}
