#include "wheelrb/wheelrb.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "wheelrb/cache.hpp"
#include "wheelrb/errors.hpp"
#include "wheelrb/extremal.hpp"
#include "wheelrb/formulas.hpp"
#include "wheelrb/json_io.hpp"
#include "wheelrb/lemma.hpp"
#include "wheelrb/solver.hpp"
#include "wheelrb/table.hpp"

using namespace wheelrb;

struct wrb_wheel {
  WheelGraph g;
};

struct wrb_pattern {
  ThetaPattern p;
};

struct wrb_coloring {
  EdgeColoring c;
};

struct wrb_solve_result {
  WheelGraph g;
  ThetaPattern p;
  SolverResult r;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_offset = 0;

wrb_status fail(wrb_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
wrb_status guard(F&& f) {
  try {
    last_offset = 0;
    f();
    return WRB_OK;
  } catch (const SchemaError& e) {
    last_offset = e.byte_offset();
    return fail(WRB_ERR_SCHEMA, e.what());
  } catch (const InfeasibleArcError& e) {
    return fail(WRB_ERR_INFEASIBLE_ARC, e.what());
  } catch (const ParameterError& e) {
    return fail(WRB_ERR_PARAMETER, e.what());
  } catch (const LookupError& e) {
    return fail(WRB_ERR_LOOKUP, e.what());
  } catch (const HypothesisError& e) {
    return fail(WRB_ERR_HYPOTHESIS, e.what());
  } catch (const VerificationError& e) {
    return fail(WRB_ERR_VERIFICATION, e.what());
  } catch (const IoError& e) {
    return fail(WRB_ERR_IO, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(WRB_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(WRB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WRB_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* ptr, const char* name) {
  if (!ptr) throw ParameterError(std::string(name) + " is NULL");
}

SolverBudget to_budget(const wrb_budget* b) {
  SolverBudget out;
  if (b) {
    out.max_merges = b->max_merges;
    out.timeout_secs = b->timeout_secs;
    out.ceiling_rb = b->ceiling_rb;
    out.symmetry = b->symmetry != 0;
  }
  return out;
}

void fill(wrb_formula* out, const std::optional<FormulaValue>& f) {
  *out = wrb_formula{0, 0, WRB_EXACT, "", 0};
  if (!f) return;
  out->in_domain = 1;
  out->value = f->value;
  out->kind = f->kind == ValueKind::Exact ? WRB_EXACT : f->kind == ValueKind::UpperBound ? WRB_UPPER_BOUND
                                                                                         : WRB_LOWER_BOUND;
  out->source = to_string(f->source);
  out->external = f->external ? 1 : 0;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot read ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

extern "C" {

const char* wrb_version(void) { return "1.0.0"; }

const char* wrb_status_name(wrb_status status) {
  switch (status) {
    case WRB_OK: return "ok";
    case WRB_ERR_PARAMETER: return "parameter_error";
    case WRB_ERR_LOOKUP: return "lookup_error";
    case WRB_ERR_INFEASIBLE_ARC: return "infeasible_arc";
    case WRB_ERR_SCHEMA: return "schema_error";
    case WRB_ERR_HYPOTHESIS: return "hypothesis_error";
    case WRB_ERR_VERIFICATION: return "verification_error";
    case WRB_ERR_IO: return "io_error";
    case WRB_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* wrb_last_error(void) { return last_error.c_str(); }
size_t wrb_last_error_offset(void) { return last_offset; }
void wrb_string_free(char* s) { std::free(s); }

wrb_status wrb_wheel_new(int d, int s, wrb_wheel** out) {
  return guard([&] {
    need(out, "out");
    *out = new wrb_wheel{WheelGraph(d, s)};
  });
}

void wrb_wheel_free(wrb_wheel* w) { delete w; }
int wrb_wheel_d(const wrb_wheel* w) { return w->g.d(); }
int wrb_wheel_s(const wrb_wheel* w) { return w->g.s(); }
int wrb_wheel_vertex_count(const wrb_wheel* w) { return w->g.vertex_count(); }
int wrb_wheel_edge_count(const wrb_wheel* w) { return w->g.edge_count(); }

wrb_status wrb_wheel_spoke_id(const wrb_wheel* w, int hub, int i, int* out) {
  return guard([&] {
    need(w, "wheel");
    *out = w->g.linearize(EdgeId::spoke(hub, i));
  });
}

wrb_status wrb_wheel_rim_id(const wrb_wheel* w, int i, int* out) {
  return guard([&] {
    need(w, "wheel");
    *out = w->g.linearize(EdgeId::rim(i));
  });
}

wrb_status wrb_wheel_endpoints(const wrb_wheel* w, int edge, int* x, int* y) {
  return guard([&] {
    need(w, "wheel");
    auto [a, b] = w->g.endpoints(edge);
    *x = a;
    *y = b;
  });
}

wrb_status wrb_wheel_to_json(const wrb_wheel* w, char** out) {
  return guard([&] {
    need(w, "wheel");
    *out = copy_string(dump(wheel_to_json(w->g)));
  });
}

wrb_status wrb_pattern_new(int t, const int* chords, size_t n, wrb_pattern** out) {
  return guard([&] {
    need(out, "out");
    if (n > 0) need(chords, "chords");
    std::vector<int> v(chords, chords + n);
    *out = new wrb_pattern{ThetaPattern(t, std::move(v))};
  });
}

wrb_status wrb_pattern_parse(int t, const char* chords, wrb_pattern** out) {
  return guard([&] {
    need(out, "out");
    *out = new wrb_pattern{ThetaPattern(t, parse_chords(chords ? chords : ""))};
  });
}

wrb_status wrb_pattern_fan(int t, wrb_pattern** out) {
  return guard([&] { *out = new wrb_pattern{ThetaPattern::fan(t)}; });
}

wrb_status wrb_pattern_cycle(int t, wrb_pattern** out) {
  return guard([&] { *out = new wrb_pattern{ThetaPattern::cycle(t)}; });
}

void wrb_pattern_free(wrb_pattern* p) { delete p; }
int wrb_pattern_t(const wrb_pattern* p) { return p->p.t(); }
int wrb_pattern_ell(const wrb_pattern* p) { return p->p.ell(); }
int wrb_pattern_is_fan(const wrb_pattern* p) { return p->p.is_fan(); }
int wrb_pattern_is_symmetric(const wrb_pattern* p) { return p->p.is_symmetric(); }
int wrb_pattern_multiplicity(const wrb_pattern* p) { return p->p.multiplicity(); }

wrb_status wrb_pattern_name(const wrb_pattern* p, char** out) {
  return guard([&] {
    need(p, "pattern");
    *out = copy_string(p->p.name());
  });
}

namespace {
std::vector<Embedding> copies_by(const wrb_wheel* w, const wrb_pattern* p, wrb_enum_method method) {
  need(w, "wheel");
  need(p, "pattern");
  if (method == WRB_ENUM_HUB_CENTERED) return enumerate_hub_centered(w->g, p->p);
  if (method == WRB_ENUM_ORACLE) return enumerate_oracle(w->g, p->p);
  throw ParameterError("unknown enumeration method " + std::to_string(method));
}
}  // namespace

wrb_status wrb_count_copies(const wrb_wheel* w, const wrb_pattern* p, wrb_enum_method method, size_t* out) {
  return guard([&] { *out = copies_by(w, p, method).size(); });
}

wrb_status wrb_enumerate_json(const wrb_wheel* w, const wrb_pattern* p, wrb_enum_method method, char** out) {
  return guard([&] { *out = copy_string(dump(embeddings_to_json(w->g, p->p, copies_by(w, p, method)))); });
}

wrb_status wrb_incidence_count(const wrb_wheel* w, const wrb_pattern* p, int edge, int* out) {
  return guard([&] {
    need(w, "wheel");
    need(p, "pattern");
    *out = incidence_count(w->g, p->p, w->g.unlinearize(edge));
  });
}

wrb_status wrb_copies_hitting(const wrb_wheel* w, const wrb_pattern* p, const int* edges, size_t n, int min_hits,
                              int single_hub, int* out) {
  return guard([&] {
    need(w, "wheel");
    need(p, "pattern");
    if (n > 0) need(edges, "edges");
    std::vector<EdgeId> ids;
    for (size_t k = 0; k < n; ++k) ids.push_back(w->g.unlinearize(edges[k]));
    *out = copies_hitting(w->g, p->p, ids, min_hits, single_hub ? CopyScope::SingleHub : CopyScope::All);
  });
}

wrb_status wrb_coloring_new(const wrb_wheel* w, const int* colors, size_t n, wrb_coloring** out) {
  return guard([&] {
    need(w, "wheel");
    need(colors, "colors");
    if (n != static_cast<size_t>(w->g.edge_count()))
      throw ParameterError("expected " + std::to_string(w->g.edge_count()) + " colors, got " + std::to_string(n));
    std::vector<int> table(colors, colors + n);
    table.insert(table.begin(), 0);
    *out = new wrb_coloring{EdgeColoring(w->g, std::move(table))};
  });
}

wrb_status wrb_coloring_from_json(const char* text, wrb_coloring** out) {
  return guard([&] {
    need(text, "text");
    *out = new wrb_coloring{coloring_from_json(std::string(text))};
  });
}

wrb_status wrb_coloring_read_file(const char* path, wrb_coloring** out) {
  return guard([&] {
    need(path, "path");
    *out = new wrb_coloring{coloring_from_json(read_file(path))};
  });
}

wrb_status wrb_coloring_to_json(const wrb_coloring* c, char** out) {
  return guard([&] {
    need(c, "coloring");
    *out = copy_string(dump(coloring_to_json(c->c)));
  });
}

wrb_status wrb_coloring_write_file(const wrb_coloring* c, const char* path) {
  return guard([&] {
    need(c, "coloring");
    need(path, "path");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError(std::string("cannot write ") + path);
    f << dump(coloring_to_json(c->c));
    if (!f) throw IoError(std::string("cannot write ") + path);
  });
}

void wrb_coloring_free(wrb_coloring* c) { delete c; }
int wrb_coloring_d(const wrb_coloring* c) { return c->c.host().d(); }
int wrb_coloring_s(const wrb_coloring* c) { return c->c.host().s(); }
int wrb_coloring_color_count(const wrb_coloring* c) { return c->c.color_count(); }

wrb_status wrb_coloring_color(const wrb_coloring* c, int edge, int* out) {
  return guard([&] {
    need(c, "coloring");
    *out = c->c.color(edge);
  });
}

wrb_status wrb_find_rainbow(const wrb_coloring* c, const wrb_pattern* p, int* found, int* edges, size_t cap,
                            size_t* len) {
  return guard([&] {
    need(c, "coloring");
    need(p, "pattern");
    auto w = find_rainbow(c->c, p->p);
    if (found) *found = w ? 1 : 0;
    const size_t n = w ? w->embedding.edges.size() : 0;
    if (len) *len = n;
    if (w && edges) {
      if (cap < n) throw ParameterError("edge buffer holds " + std::to_string(cap) + ", need " + std::to_string(n));
      std::copy(w->embedding.edges.begin(), w->embedding.edges.end(), edges);
    }
  });
}

wrb_status wrb_p_statistic(const wrb_coloring* c, const wrb_pattern* p, int color, int* out) {
  return guard([&] {
    need(c, "coloring");
    need(p, "pattern");
    *out = p_statistic(c->c, p->p, color).p;
  });
}

wrb_status wrb_verify_json(const wrb_coloring* c, const wrb_pattern* p, int* rainbow_free, int* bounds_hold,
                           char** out) {
  return guard([&] {
    need(c, "coloring");
    need(p, "pattern");
    Json j = verify_to_json(c->c, p->p);
    if (rainbow_free) *rainbow_free = j["rainbow"].get<bool>() ? 0 : 1;
    if (bounds_hold) {
      const Json& b = j["color_bounds"];
      *bounds_hold = b.contains("holds") ? (b["holds"].get<bool>() ? 1 : 0) : 1;
    }
    if (out) *out = copy_string(dump(j));
  });
}

wrb_status wrb_construct(wrb_construction mode, int d, int s, int t, wrb_coloring** coloring, char** report_json) {
  return guard([&] {
    ConstructionReport r = mode == WRB_SPOKE_GROUPED  ? construct_spoke_grouped(d, t)
                           : mode == WRB_RIM_GROUPED ? construct_rim_grouped(d, s, t)
                                                      : throw ParameterError("unknown construction");
    std::unique_ptr<wrb_coloring> col(new wrb_coloring{r.coloring});
    if (report_json) *report_json = copy_string(dump(construction_to_json(r)));
    if (coloring) *coloring = col.release();
  });
}

wrb_status wrb_lemma_verify(wrb_lemma lemma, int d, int s, const wrb_pattern* p, int i, int* holds,
                            char** report_json) {
  return guard([&] {
    need(p, "pattern");
    LemmaReport r = lemma == WRB_LEMMA_PAIR     ? verify_pair_lemma(d, s, p->p)
                    : lemma == WRB_LEMMA_TRIPLE ? verify_triple_lemma(d, s, p->p)
                    : lemma == WRB_LEMMA_MULTI  ? verify_multi_lemma(d, s, p->p, i)
                                                : throw ParameterError("unknown lemma");
    if (holds) *holds = r.holds ? 1 : 0;
    if (report_json) *report_json = copy_string(dump(lemma_report_to_json(r)));
  });
}

wrb_status wrb_color_bounds_verify(const wrb_coloring* c, const wrb_pattern* p, int* holds, char** report_json) {
  return guard([&] {
    need(c, "coloring");
    need(p, "pattern");
    LemmaReport r = verify_color_bounds(c->c, p->p);
    if (holds) *holds = r.holds ? 1 : 0;
    if (report_json) *report_json = copy_string(dump(lemma_report_to_json(r)));
  });
}

wrb_status wrb_rb_formula(int d, int s, const wrb_pattern* p, wrb_formula* out) {
  return guard([&] {
    need(p, "pattern");
    need(out, "out");
    fill(out, rb_formula(d, s, p->p));
  });
}

wrb_status wrb_known_value(int d, int s, const wrb_pattern* p, wrb_formula* out) {
  return guard([&] {
    need(p, "pattern");
    need(out, "out");
    fill(out, known_value(d, s, p->p));
  });
}

void wrb_budget_init(wrb_budget* b) {
  SolverBudget def;
  *b = wrb_budget{def.max_merges, def.timeout_secs, def.ceiling_rb, def.symmetry ? 1 : 0};
}

wrb_status wrb_solve(const wrb_wheel* w, const wrb_pattern* p, const wrb_budget* budget, const char* cache_path,
                     wrb_solve_result** out) {
  return guard([&] {
    need(w, "wheel");
    need(p, "pattern");
    need(out, "out");
    std::optional<SolveCache> cache;
    if (cache_path && *cache_path) cache.emplace(cache_path);
    SolverResult r = solve_cached(w->g, p->p, to_budget(budget), cache ? &*cache : nullptr);
    std::vector<std::string> warnings;
    if (cache) warnings = cache->warnings();
    *out = new wrb_solve_result{w->g, p->p, std::move(r), std::move(warnings)};
  });
}

wrb_status wrb_probe(const wrb_wheel* w, const wrb_pattern* p, const wrb_budget* budget, wrb_solve_result** out) {
  return guard([&] {
    need(w, "wheel");
    need(p, "pattern");
    need(out, "out");
    *out = new wrb_solve_result{w->g, p->p, probe_open_value(w->g, p->p, to_budget(budget)), {}};
  });
}

void wrb_solve_result_free(wrb_solve_result* r) { delete r; }
wrb_solve_status wrb_solve_status_of(const wrb_solve_result* r) {
  return r->r.status == SolveStatus::Exact ? WRB_SOLVE_EXACT : WRB_SOLVE_UNKNOWN;
}
int wrb_solve_rb(const wrb_solve_result* r) { return r->r.rb_value; }
int wrb_solve_ar(const wrb_solve_result* r) { return r->r.ar_value; }
int wrb_solve_rb_lower(const wrb_solve_result* r) { return r->r.rb_lower; }
int wrb_solve_rb_upper(const wrb_solve_result* r) { return r->r.rb_upper; }
int wrb_solve_from_cache(const wrb_solve_result* r) { return r->r.from_cache ? 1 : 0; }
long long wrb_solve_nodes(const wrb_solve_result* r) { return r->r.stats.nodes; }

wrb_status wrb_solve_witness(const wrb_solve_result* r, wrb_coloring** out) {
  return guard([&] {
    need(r, "result");
    if (!r->r.witness) throw LookupError("result carries no witness");
    *out = new wrb_coloring{*r->r.witness};
  });
}

wrb_status wrb_solve_to_json(const wrb_solve_result* r, char** out) {
  return guard([&] {
    need(r, "result");
    *out = copy_string(dump(solver_result_to_json(r->g, r->p, r->r)));
  });
}

size_t wrb_solve_warning_count(const wrb_solve_result* r) { return r->warnings.size(); }
const char* wrb_solve_warning(const wrb_solve_result* r, size_t k) {
  return k < r->warnings.size() ? r->warnings[k].c_str() : nullptr;
}

wrb_status wrb_lower_bound_from_construction(const wrb_wheel* w, const wrb_pattern* p, int* out) {
  return guard([&] {
    need(w, "wheel");
    need(p, "pattern");
    *out = lower_bound_from_construction(w->g, p->p);
  });
}

wrb_status wrb_default_cache_path(char** out) {
  return guard([&] { *out = copy_string(SolveCache::default_path().string()); });
}

wrb_status wrb_emit_table(const int* ds, size_t nd, const int* ss, size_t ns, const wrb_pattern* const* patterns,
                          size_t np, int run_solver, const wrb_budget* budget, const char* cache_path,
                          wrb_table_format format, int* all_agree, char** out) {
  return guard([&] {
    if (nd) need(ds, "ds");
    if (ns) need(ss, "ss");
    if (np) need(patterns, "patterns");
    std::vector<ThetaPattern> ps;
    for (size_t k = 0; k < np; ++k) {
      need(patterns[k], "pattern");
      ps.push_back(patterns[k]->p);
    }
    std::optional<SolveCache> cache;
    if (cache_path && *cache_path) cache.emplace(cache_path);
    TableOptions options;
    options.run_solver = run_solver != 0;
    if (budget) options.budget = to_budget(budget);
    options.cache = cache ? &*cache : nullptr;
    auto rows = emit_table(std::vector<int>(ds, ds + nd), std::vector<int>(ss, ss + ns), ps, options);
    if (all_agree)
      *all_agree = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.agree; }) ? 1 : 0;
    *out = copy_string(format == WRB_TABLE_JSON ? dump(table_to_json(rows)) : table_to_csv(rows));
  });
}

}  // extern "C"
