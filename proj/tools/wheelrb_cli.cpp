// Command-line front end. Talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wheelrb/wheelrb.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kSchema = 3, kOther = 4 };

// Carries a C API failure out to main.
struct ApiError {
  wrb_status status;
  std::string message;
  size_t offset;
};

void check(wrb_status s) {
  if (s != WRB_OK) throw ApiError{s, wrb_last_error(), wrb_last_error_offset()};
}

struct Usage {
  std::string message;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Wheel = std::unique_ptr<wrb_wheel, Deleter<wrb_wheel, wrb_wheel_free>>;
using Pattern = std::unique_ptr<wrb_pattern, Deleter<wrb_pattern, wrb_pattern_free>>;
using Coloring = std::unique_ptr<wrb_coloring, Deleter<wrb_coloring, wrb_coloring_free>>;
using Result = std::unique_ptr<wrb_solve_result, Deleter<wrb_solve_result, wrb_solve_result_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  wrb_string_free(s);
  return out;
}

Wheel make_wheel(int d, int s) {
  wrb_wheel* w = nullptr;
  check(wrb_wheel_new(d, s, &w));
  return Wheel(w);
}

struct PatternFlags {
  int t = 0;
  std::string chords;
  bool fan = false;
  bool cycle = false;
  bool all = false;

  void add_to(CLI::App* app, bool allow_all = false) {
    app->add_option("--t", t, "pattern length t (cycle vertices)");
    auto* c = app->add_option("--chords", chords, "chord positions, e.g. 3,5");
    auto* f = app->add_flag("--fan", fan, "the fan F_t (chords 3..t-1)");
    auto* y = app->add_flag("--cycle", cycle, "the plain cycle C_t (default)");
    c->excludes(f)->excludes(y);
    f->excludes(y);
    if (allow_all) app->add_flag("--all-patterns", all, "every theta pattern on t vertices")->excludes(c)->excludes(f)->excludes(y);
  }

  Pattern build(int length) const {
    wrb_pattern* p = nullptr;
    if (fan)
      check(wrb_pattern_fan(length, &p));
    else
      check(wrb_pattern_parse(length, chords.c_str(), &p));
    return Pattern(p);
  }

  Pattern build() const {
    if (t == 0) throw Usage{"--t is required"};
    return build(t);
  }
};

std::string pattern_name(const wrb_pattern* p) {
  char* s = nullptr;
  check(wrb_pattern_name(p, &s));
  return take(s);
}

// All theta patterns on t vertices, ordered by chord count then chords.
std::vector<Pattern> all_patterns(int t) {
  std::vector<Pattern> out;
  for (int ell = 0; ell <= t - 3; ++ell) {
    std::vector<int> pick(ell);
    std::function<void(int, int)> rec = [&](int k, int from) {
      if (k == ell) {
        wrb_pattern* p = nullptr;
        check(wrb_pattern_new(t, pick.data(), pick.size(), &p));
        out.emplace_back(p);
        return;
      }
      for (int c = from; c <= t - 1 - (ell - k - 1); ++c) {
        pick[k] = c;
        rec(k + 1, c + 1);
      }
    };
    rec(0, 3);
  }
  return out;
}

// "7..9,12" -> {7, 8, 9, 12}.
std::vector<int> parse_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  auto to_int = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Usage{std::string(flag) + ": not an integer list: " + text};
    }
  };
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
    } else {
      int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw ApiError{WRB_ERR_IO, "cannot write " + path, 0};
}

Json parse(const std::string& text) { return Json::parse(text); }

// Machine-readable record of failed properties, on stderr.
void report_failure(const std::string& command, const Json& failures) {
  Json rec;
  rec["format"] = 1;
  rec["status"] = "failed";
  rec["command"] = command;
  rec["failures"] = failures;
  std::cerr << rec.dump() << "\n";
}

// ---- subcommands ----

struct Options {
  bool json = false;
  int d = 0;
  int s = 1;
  PatternFlags pattern;
};

int cmd_wheel(const Options& o) {
  auto w = make_wheel(o.d, o.s);
  if (o.json) {
    char* s = nullptr;
    check(wrb_wheel_to_json(w.get(), &s));
    std::cout << take(s);
    return kOk;
  }
  const int d = wrb_wheel_d(w.get()), hubs = wrb_wheel_s(w.get());
  std::cout << "W_" << d << "(" << hubs << "): " << wrb_wheel_vertex_count(w.get()) << " vertices, "
            << wrb_wheel_edge_count(w.get()) << " edges (" << d * hubs << " spokes, " << d << " rim)\n";
  std::cout << "spoke u_a v_i -> (a-1)*" << d << " + i; rim v_i v_{i+1} -> " << d * hubs << " + i\n";
  return kOk;
}

int cmd_enumerate(const Options& o, const std::string& method, bool count_only) {
  auto w = make_wheel(o.d, o.s);
  auto p = o.pattern.build();
  wrb_enum_method m = method == "hub" ? WRB_ENUM_HUB_CENTERED : WRB_ENUM_ORACLE;
  if (count_only) {
    size_t n = 0;
    check(wrb_count_copies(w.get(), p.get(), m, &n));
    if (o.json)
      std::cout << Json{{"format", 1}, {"pattern", pattern_name(p.get())}, {"count", n}}.dump(2) << "\n";
    else
      std::cout << n << "\n";
    return kOk;
  }
  char* s = nullptr;
  check(wrb_enumerate_json(w.get(), p.get(), m, &s));
  std::cout << take(s);
  return kOk;
}

struct LemmaFlags {
  std::string lemma;
  std::string ds, ss, ts, is = "4";
  std::string coloring;
};

int cmd_lemma(const Options& o, const LemmaFlags& f) {
  Json reports = Json::array(), skipped = Json::array(), failures = Json::array();
  auto record = [&](const std::string& text, int holds) {
    Json r = parse(text);
    if (!holds) failures.push_back(r);
    if (!o.json)
      std::cout << r["lemma"].get<std::string>() << " W_" << r["d"] << "(" << r["s"] << ") "
                << r["pattern"]["name"].get<std::string>()
                << (r.contains("i") ? " i=" + r["i"].dump() : std::string()) << ": max "
                << r["max_observed"] << " vs bound " << r["bound"].get<std::string>() << " over "
                << r["subsets_checked"] << (holds ? " -> holds" : " -> VIOLATED at edges " + r["witness"].dump())
                << "\n";
    reports.push_back(std::move(r));
  };
  auto skip = [&](const std::string& where) {
    skipped.push_back(Json{{"instance", where}, {"reason", wrb_last_error()}});
    if (!o.json) std::cout << where << ": skipped (" << wrb_last_error() << ")\n";
  };

  if (f.lemma == "colorbound") {
    if (f.coloring.empty()) throw Usage{"--lemma colorbound needs --coloring FILE"};
    wrb_coloring* c = nullptr;
    check(wrb_coloring_read_file(f.coloring.c_str(), &c));
    Coloring col(c);
    auto ts = parse_list(f.ts, "--t");
    if (ts.size() != 1) throw Usage{"--lemma colorbound takes a single --t"};
    auto p = o.pattern.build(ts[0]);
    int holds = 0;
    char* s = nullptr;
    wrb_status st = wrb_color_bounds_verify(col.get(), p.get(), &holds, &s);
    if (st == WRB_ERR_HYPOTHESIS) throw Usage{std::string("hypotheses unmet: ") + wrb_last_error()};
    check(st);
    record(take(s), holds);
  } else {
    wrb_lemma kind;
    if (f.lemma == "pair")
      kind = WRB_LEMMA_PAIR;
    else if (f.lemma == "triple")
      kind = WRB_LEMMA_TRIPLE;
    else if (f.lemma == "multi")
      kind = WRB_LEMMA_MULTI;
    else
      throw Usage{"--lemma must be pair, triple, multi or colorbound"};
    auto ds = f.ds.empty() ? std::vector<int>{o.d} : parse_list(f.ds, "--d");
    auto ss = f.ss.empty() ? std::vector<int>{o.s} : parse_list(f.ss, "--s");
    auto ts = f.ts.empty() ? std::vector<int>{o.pattern.t} : parse_list(f.ts, "--t");
    auto is = kind == WRB_LEMMA_MULTI ? parse_list(f.is, "--i") : std::vector<int>{0};
    for (int t : ts) {
      if (t == 0) throw Usage{"--t is required"};
      std::vector<Pattern> patterns;
      if (o.pattern.all)
        patterns = all_patterns(t);
      else
        patterns.push_back(o.pattern.build(t));
      for (int s : ss)
        for (int d : ds)
          for (const auto& p : patterns)
            for (int i : is) {
              int holds = 0;
              char* text = nullptr;
              wrb_status st = wrb_lemma_verify(kind, d, s, p.get(), i, &holds, &text);
              if (st == WRB_ERR_HYPOTHESIS) {
                skip(f.lemma + " W_" + std::to_string(d) + "(" + std::to_string(s) + ") " + pattern_name(p.get()) +
                     (kind == WRB_LEMMA_MULTI ? " i=" + std::to_string(i) : ""));
                continue;
              }
              check(st);
              record(take(text), holds);
            }
    }
  }

  if (reports.empty()) throw Usage{"no instance satisfies the lemma hypotheses"};
  if (o.json) {
    Json out;
    out["format"] = 1;
    out["holds"] = failures.empty();
    out["reports"] = reports;
    out["skipped"] = skipped;
    std::cout << out.dump(2) << "\n";
  }
  if (!failures.empty()) {
    report_failure("lemma", failures);
    return kFailed;
  }
  return kOk;
}

int cmd_extremal(const Options& o, const std::string& mode, const std::string& out_path) {
  if (o.pattern.t == 0) throw Usage{"--t is required"};
  wrb_construction kind;
  if (mode == "spoke")
    kind = WRB_SPOKE_GROUPED;
  else if (mode == "rim")
    kind = WRB_RIM_GROUPED;
  else
    throw Usage{"--mode must be spoke or rim"};
  if (kind == WRB_SPOKE_GROUPED && o.s != 1) throw Usage{"--mode spoke builds W_d only; drop --s"};

  wrb_coloring* c = nullptr;
  char* report = nullptr;
  wrb_status st = wrb_construct(kind, o.d, o.s, o.pattern.t, &c, &report);
  if (st == WRB_ERR_VERIFICATION) {
    report_failure("extremal", Json::array({Json{{"property", "rainbow_free"}, {"message", wrb_last_error()}}}));
    return kFailed;
  }
  check(st);
  Coloring col(c);
  Json r = parse(take(report));
  char* text = nullptr;
  check(wrb_coloring_to_json(col.get(), &text));
  std::string coloring = take(text);

  std::ostringstream human;
  human << (mode == "spoke" ? "spoke-grouped" : "rim-grouped") << " coloring of W_" << o.d << "(" << o.s
        << "), t = " << o.pattern.t << "\n"
        << "  group width " << r["group_width"] << ", q = " << r["q"] << ", p = " << r["p"] << " ("
        << r["branch"].get<std::string>() << ")\n"
        << "  colors_used = " << r["colors_used"] << " (closed form " << r["formula_value"] << ")\n"
        << "  no rainbow copy of:";
  for (const auto& n : r["verified_rainbow_free"]) human << " " << n.get<std::string>();
  human << "\n";

  Json summary = r;
  summary.erase("coloring");
  if (!out_path.empty()) {
    write_text(out_path, coloring);
    std::cout << (o.json ? summary.dump(2) + "\n" : human.str());
  } else {
    std::cout << coloring;
    std::cerr << (o.json ? summary.dump(2) + "\n" : human.str());
  }
  return kOk;
}

int cmd_verify(const Options& o, const std::string& file, const std::string& expect) {
  if (file.empty()) throw Usage{"--coloring FILE is required"};
  wrb_coloring* c = nullptr;
  check(wrb_coloring_read_file(file.c_str(), &c));
  Coloring col(c);
  auto p = o.pattern.build();
  int rainbow_free = 0, bounds_hold = 1;
  char* text = nullptr;
  check(wrb_verify_json(col.get(), p.get(), &rainbow_free, &bounds_hold, &text));
  Json r = parse(take(text));

  Json failures = Json::array();
  if (!bounds_hold) failures.push_back(Json{{"property", "color_class_bounds"}, {"report", r["color_bounds"]}});
  if (expect == "rainbow" && rainbow_free)
    failures.push_back(Json{{"property", "expected_rainbow"}, {"pattern", r["pattern"]["name"]}});
  if (expect == "rainbow-free" && !rainbow_free)
    failures.push_back(Json{{"property", "expected_rainbow_free"}, {"witness", r["rainbow_witness"]}});

  if (o.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    const std::string name = r["pattern"]["name"];
    std::cout << "W_" << r["d"] << "(" << r["s"] << ") coloring with " << r["colors"] << " colors\n";
    if (rainbow_free)
      std::cout << "no rainbow " << name << "\n";
    else
      std::cout << "rainbow " << name << " on edges " << r["rainbow_witness"].dump() << "\n";
    std::cout << "A_i:";
    for (const auto& [size, colors] : r["A"].items()) std::cout << " |A_" << size << "| = " << colors.size() << ";";
    std::cout << "\n";
    const Json& b = r["color_bounds"];
    if (b.contains("skipped"))
      std::cout << "color-class bounds: skipped (" << b["skipped"].get<std::string>() << ")\n";
    else
      std::cout << "color-class bounds: " << (bounds_hold ? "hold" : "VIOLATED") << " for " << b["subsets_checked"]
                << " colors; tightest color has p = " << b["max_observed"] << " vs bound "
                << b["bound"].get<std::string>() << "\n";
  }
  if (!failures.empty()) {
    report_failure("verify", failures);
    return kFailed;
  }
  return kOk;
}

struct SolveFlags {
  int max_merges = -1;
  double timeout = 0;
  std::string witness;
  std::string cache;
  bool no_cache = false;
  bool symmetry = false;
  bool probe = false;
};

std::string cache_path(const std::string& explicit_path, bool disabled) {
  if (disabled) return "";
  if (!explicit_path.empty()) return explicit_path;
  char* s = nullptr;
  check(wrb_default_cache_path(&s));
  return take(s);
}

int cmd_solve(const Options& o, const SolveFlags& f) {
  auto w = make_wheel(o.d, o.s);
  auto p = o.pattern.build();
  wrb_budget budget;
  wrb_budget_init(&budget);
  budget.max_merges = f.max_merges;
  budget.timeout_secs = f.timeout;
  budget.symmetry = f.symmetry ? 1 : 0;

  wrb_solve_result* raw = nullptr;
  if (f.probe)
    check(wrb_probe(w.get(), p.get(), &budget, &raw));
  else
    check(wrb_solve(w.get(), p.get(), &budget, cache_path(f.cache, f.no_cache).c_str(), &raw));
  Result r(raw);
  for (size_t k = 0; k < wrb_solve_warning_count(r.get()); ++k)
    std::cerr << "warning: " << wrb_solve_warning(r.get(), k) << "\n";

  if (!f.witness.empty()) {
    wrb_coloring* c = nullptr;
    check(wrb_solve_witness(r.get(), &c));
    Coloring col(c);
    check(wrb_coloring_write_file(col.get(), f.witness.c_str()));
  }

  // The witness must not contain a rainbow copy, whatever the solver says.
  wrb_coloring* c = nullptr;
  check(wrb_solve_witness(r.get(), &c));
  Coloring col(c);
  int found = 0;
  check(wrb_find_rainbow(col.get(), p.get(), &found, nullptr, 0, nullptr));

  if (o.json) {
    char* s = nullptr;
    check(wrb_solve_to_json(r.get(), &s));
    std::cout << take(s);
  } else {
    if (wrb_solve_status_of(r.get()) == WRB_SOLVE_EXACT)
      std::cout << "rb = " << wrb_solve_rb(r.get()) << "\n";
    else
      std::cout << "rb in [" << wrb_solve_rb_lower(r.get()) << ", " << wrb_solve_rb_upper(r.get())
                << "] (budget exhausted)\n";
    wrb_formula fv;
    check(wrb_rb_formula(o.d, o.s, p.get(), &fv));
    if (fv.in_domain)
      std::cout << "closed form: " << fv.value << " (" << (fv.kind == WRB_EXACT ? "exact" : "upper bound") << ", "
                << fv.source << ")\n";
    std::cout << "witness: " << wrb_coloring_color_count(col.get()) << " colors without a rainbow "
              << pattern_name(p.get()) << (wrb_solve_from_cache(r.get()) ? " (from cache)" : "") << "\n";
  }
  if (found) {
    report_failure("solve", Json::array({Json{{"property", "witness_rainbow_free"}}}));
    return kFailed;
  }
  return kOk;
}

struct TableFlags {
  std::string ds, ss = "1", ts;
  std::string format = "csv";
  std::string out;
  double timeout = 10;
  bool no_solver = false;
  std::string cache;
  bool no_cache = false;
};

int cmd_table(const Options& o, const TableFlags& f) {
  if (f.ds.empty() || f.ts.empty()) throw Usage{"table needs --d and --t"};
  auto ds = parse_list(f.ds, "--d");
  auto ss = parse_list(f.ss, "--s");
  std::vector<Pattern> owned;
  for (int t : parse_list(f.ts, "--t")) {
    if (o.pattern.all)
      for (auto& p : all_patterns(t)) owned.push_back(std::move(p));
    else
      owned.push_back(o.pattern.build(t));
  }
  std::vector<const wrb_pattern*> ps;
  for (const auto& p : owned) ps.push_back(p.get());
  wrb_budget budget;
  wrb_budget_init(&budget);
  budget.timeout_secs = f.timeout;
  int agree = 1;
  char* text = nullptr;
  const bool as_json = o.json || f.format == "json";
  if (!as_json && f.format != "csv") throw Usage{"--format must be csv or json"};
  check(wrb_emit_table(ds.data(), ds.size(), ss.data(), ss.size(), ps.data(), ps.size(), f.no_solver ? 0 : 1,
                       &budget, cache_path(f.cache, f.no_cache).c_str(), as_json ? WRB_TABLE_JSON : WRB_TABLE_CSV,
                       &agree, &text));
  std::string table = take(text);
  if (f.out.empty())
    std::cout << table;
  else
    write_text(f.out, table);
  if (!agree) {
    report_failure("table", Json::array({Json{{"property", "agree"}, {"message", "some rows disagree"}}}));
    return kFailed;
  }
  return kOk;
}

int exit_for(wrb_status s) {
  switch (s) {
    case WRB_ERR_PARAMETER:
    case WRB_ERR_INFEASIBLE_ARC:
    case WRB_ERR_HYPOTHESIS:
    case WRB_ERR_LOOKUP: return kUsage;
    case WRB_ERR_SCHEMA: return kSchema;
    case WRB_ERR_VERIFICATION: return kFailed;
    default: return kOther;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow numbers of chorded cycles in multi-hub wheels"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto host_flags = [&](CLI::App* sub, bool pattern) {
    sub->add_option("--d", o.d, "rim length d")->required();
    sub->add_option("--s", o.s, "number of hubs s")->capture_default_str();
    if (pattern) o.pattern.add_to(sub);
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* wheel = app.add_subcommand("wheel", "describe W_d(s) and its edge numbering");
  host_flags(wheel, false);

  std::string method = "oracle";
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list copies of a pattern as sorted edge-id arrays");
  host_flags(enumerate, true);
  enumerate->add_option("--method", method, "oracle (all copies) or hub (hub-centered closed form)")
      ->check(CLI::IsMember({"oracle", "hub"}));
  enumerate->add_flag("--count", count_only, "print the number of copies only");

  LemmaFlags lf;
  auto* lemma = app.add_subcommand("lemma", "exhaustively check a counting lemma over a grid");
  lemma->add_option("--lemma", lf.lemma, "pair, triple, multi or colorbound")
      ->required()
      ->check(CLI::IsMember({"pair", "triple", "multi", "colorbound"}));
  lemma->add_option("--d", lf.ds, "rim lengths, e.g. 7..10");
  lemma->add_option("--s", lf.ss, "hub counts, e.g. 1,2,3");
  lemma->add_option("--t", lf.ts, "pattern lengths, e.g. 4..7");
  lemma->add_option("--chords", o.pattern.chords, "chord positions, e.g. 3,5");
  lemma->add_flag("--fan", o.pattern.fan, "fans F_t");
  lemma->add_flag("--cycle", o.pattern.cycle, "cycles C_t (default)");
  lemma->add_flag("--all-patterns", o.pattern.all, "every theta pattern on t vertices");
  lemma->add_option("--i", lf.is, "subset sizes for --lemma multi")->capture_default_str();
  lemma->add_option("--coloring", lf.coloring, "coloring file for --lemma colorbound");
  lemma->add_flag("--json", o.json, "machine-readable output");

  std::string mode, out_path;
  auto* extremal = app.add_subcommand("extremal", "build a grouped rainbow-free coloring");
  host_flags(extremal, false);
  extremal->add_option("--t", o.pattern.t, "pattern length t")->required();
  extremal->add_option("--mode", mode, "spoke or rim")->required()->check(CLI::IsMember({"spoke", "rim"}));
  extremal->add_option("--out", out_path, "write the coloring here instead of stdout");

  std::string coloring_file, expect;
  auto* verify = app.add_subcommand("verify", "check a coloring file against a pattern");
  verify->add_option("--coloring", coloring_file, "coloring JSON file")->required();
  o.pattern.add_to(verify);
  verify->add_option("--expect", expect, "assert rainbow or rainbow-free")
      ->check(CLI::IsMember({"rainbow", "rainbow-free"}));
  verify->add_flag("--json", o.json, "machine-readable output");

  SolveFlags sf;
  auto* solve = app.add_subcommand("solve", "compute rb(W_d(s), pattern) exactly");
  host_flags(solve, true);
  solve->add_option("--max-merges", sf.max_merges, "deepest merge count to search");
  solve->add_option("--timeout-secs", sf.timeout, "wall-clock budget (0 = none)");
  solve->add_option("--emit-witness", sf.witness, "write the extremal coloring here");
  solve->add_option("--cache", sf.cache, "cache file (default: $WHEELRB_CACHE_DIR/solve_cache.ndjson)");
  solve->add_flag("--no-cache", sf.no_cache, "neither read nor write the cache");
  solve->add_flag("--symmetry", sf.symmetry, "orbit pruning of the first merge");
  solve->add_flag("--probe", sf.probe, "seed the search with the closed-form upper bound (no cache)");

  TableFlags tf;
  auto* table = app.add_subcommand("table", "closed forms, constructions and solver values over a grid");
  table->add_option("--d", tf.ds, "rim lengths, e.g. 7..9")->required();
  table->add_option("--s", tf.ss, "hub counts")->capture_default_str();
  table->add_option("--t", tf.ts, "pattern lengths")->required();
  table->add_option("--chords", o.pattern.chords, "chord positions");
  table->add_flag("--fan", o.pattern.fan, "fans F_t");
  table->add_flag("--cycle", o.pattern.cycle, "cycles C_t (default)");
  table->add_flag("--all-patterns", o.pattern.all, "every theta pattern on t vertices");
  table->add_option("--format", tf.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", tf.out, "write the table here instead of stdout");
  table->add_option("--timeout-secs", tf.timeout, "solver budget per row")->capture_default_str();
  table->add_flag("--no-solver", tf.no_solver, "skip the solver column");
  table->add_option("--cache", tf.cache, "cache file");
  table->add_flag("--no-cache", tf.no_cache, "neither read nor write the cache");
  table->add_flag("--json", o.json, "same as --format json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*wheel) return cmd_wheel(o);
    if (*enumerate) return cmd_enumerate(o, method, count_only);
    if (*lemma) return cmd_lemma(o, lf);
    if (*extremal) return cmd_extremal(o, mode, out_path);
    if (*verify) return cmd_verify(o, coloring_file, expect);
    if (*solve) return cmd_solve(o, sf);
    if (*table) return cmd_table(o, tf);
  } catch (const Usage& e) {
    std::cerr << "wheelrb: " << e.message << "\n";
    return kUsage;
  } catch (const ApiError& e) {
    std::cerr << "wheelrb: " << wrb_status_name(e.status) << ": " << e.message << "\n";
    return exit_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "wheelrb: " << e.what() << "\n";
    return kOther;
  }
  return kUsage;
}
