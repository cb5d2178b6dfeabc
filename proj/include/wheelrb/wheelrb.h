/* C interface to the wheelrb library.
 *
 * Every object is an opaque handle released by its *_free function. Calls
 * that can fail return a wrb_status; on failure wrb_last_error() describes
 * the problem (thread-local, valid until the next failing call on the same
 * thread). Strings handed out through char** are owned by the caller and
 * released with wrb_string_free.
 *
 * Edge ids are the linear ids of W_d(s): spoke u_a v_i is (a-1)d + i, rim
 * edge v_i v_{i+1} is sd + i.
 */
#ifndef WHEELRB_H
#define WHEELRB_H

#include <stddef.h>

#if defined(_WIN32)
#define WRB_API __declspec(dllexport)
#else
#define WRB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wrb_status {
  WRB_OK = 0,
  WRB_ERR_PARAMETER = 1,
  WRB_ERR_LOOKUP = 2,
  WRB_ERR_INFEASIBLE_ARC = 3,
  WRB_ERR_SCHEMA = 4,
  WRB_ERR_HYPOTHESIS = 5,
  WRB_ERR_VERIFICATION = 6,
  WRB_ERR_IO = 7,
  WRB_ERR_INTERNAL = 8
} wrb_status;

typedef struct wrb_wheel wrb_wheel;
typedef struct wrb_pattern wrb_pattern;
typedef struct wrb_coloring wrb_coloring;
typedef struct wrb_solve_result wrb_solve_result;

WRB_API const char* wrb_version(void);
WRB_API const char* wrb_status_name(wrb_status status);
WRB_API const char* wrb_last_error(void);
/* Byte offset of the last JSON syntax error (0 if none). */
WRB_API size_t wrb_last_error_offset(void);
WRB_API void wrb_string_free(char* s);

/* ---- host graphs ---- */
WRB_API wrb_status wrb_wheel_new(int d, int s, wrb_wheel** out);
WRB_API void wrb_wheel_free(wrb_wheel* w);
WRB_API int wrb_wheel_d(const wrb_wheel* w);
WRB_API int wrb_wheel_s(const wrb_wheel* w);
WRB_API int wrb_wheel_vertex_count(const wrb_wheel* w);
WRB_API int wrb_wheel_edge_count(const wrb_wheel* w);
WRB_API wrb_status wrb_wheel_spoke_id(const wrb_wheel* w, int hub, int i, int* out);
WRB_API wrb_status wrb_wheel_rim_id(const wrb_wheel* w, int i, int* out);
/* Dense vertex ids: hubs 0..s-1, then v_1..v_d. */
WRB_API wrb_status wrb_wheel_endpoints(const wrb_wheel* w, int edge, int* x, int* y);
WRB_API wrb_status wrb_wheel_to_json(const wrb_wheel* w, char** out);

/* ---- patterns ---- */
WRB_API wrb_status wrb_pattern_new(int t, const int* chords, size_t n, wrb_pattern** out);
/* chords as text, e.g. "3,5"; "" for the cycle. */
WRB_API wrb_status wrb_pattern_parse(int t, const char* chords, wrb_pattern** out);
WRB_API wrb_status wrb_pattern_fan(int t, wrb_pattern** out);
WRB_API wrb_status wrb_pattern_cycle(int t, wrb_pattern** out);
WRB_API void wrb_pattern_free(wrb_pattern* p);
WRB_API int wrb_pattern_t(const wrb_pattern* p);
WRB_API int wrb_pattern_ell(const wrb_pattern* p);
WRB_API int wrb_pattern_is_fan(const wrb_pattern* p);
WRB_API int wrb_pattern_is_symmetric(const wrb_pattern* p);
WRB_API int wrb_pattern_multiplicity(const wrb_pattern* p);
WRB_API wrb_status wrb_pattern_name(const wrb_pattern* p, char** out);

/* ---- enumeration ---- */
typedef enum wrb_enum_method { WRB_ENUM_ORACLE = 0, WRB_ENUM_HUB_CENTERED = 1 } wrb_enum_method;

WRB_API wrb_status wrb_count_copies(const wrb_wheel* w, const wrb_pattern* p, wrb_enum_method method,
                                    size_t* out);
WRB_API wrb_status wrb_enumerate_json(const wrb_wheel* w, const wrb_pattern* p, wrb_enum_method method,
                                      char** out);
/* Copies (all of them) containing `edge`. */
WRB_API wrb_status wrb_incidence_count(const wrb_wheel* w, const wrb_pattern* p, int edge, int* out);
/* Copies containing at least min_hits of the n edges; single_hub != 0 keeps
 * copies with exactly one hub only. */
WRB_API wrb_status wrb_copies_hitting(const wrb_wheel* w, const wrb_pattern* p, const int* edges, size_t n,
                                      int min_hits, int single_hub, int* out);

/* ---- colorings ---- */
/* colors[k] colors linear edge k+1; n must equal the edge count. */
WRB_API wrb_status wrb_coloring_new(const wrb_wheel* w, const int* colors, size_t n, wrb_coloring** out);
WRB_API wrb_status wrb_coloring_from_json(const char* text, wrb_coloring** out);
WRB_API wrb_status wrb_coloring_read_file(const char* path, wrb_coloring** out);
WRB_API wrb_status wrb_coloring_to_json(const wrb_coloring* c, char** out);
WRB_API wrb_status wrb_coloring_write_file(const wrb_coloring* c, const char* path);
WRB_API void wrb_coloring_free(wrb_coloring* c);
WRB_API int wrb_coloring_d(const wrb_coloring* c);
WRB_API int wrb_coloring_s(const wrb_coloring* c);
WRB_API int wrb_coloring_color_count(const wrb_coloring* c);
WRB_API wrb_status wrb_coloring_color(const wrb_coloring* c, int edge, int* out);
/* *found is 1 when a rainbow copy exists; its sorted edge ids are written to
 * edges (capacity cap) and their number to *len. edges may be NULL. */
WRB_API wrb_status wrb_find_rainbow(const wrb_coloring* c, const wrb_pattern* p, int* found, int* edges,
                                    size_t cap, size_t* len);
/* Copies containing at least two edges of `color` (all copies). */
WRB_API wrb_status wrb_p_statistic(const wrb_coloring* c, const wrb_pattern* p, int color, int* out);
/* Rainbow verdict, A_i histogram and color-class bound report. *rainbow_free
 * and *bounds_hold may be NULL; bounds_hold is 1 when the report was skipped. */
WRB_API wrb_status wrb_verify_json(const wrb_coloring* c, const wrb_pattern* p, int* rainbow_free,
                                   int* bounds_hold, char** out);

/* ---- extremal constructions ---- */
typedef enum wrb_construction { WRB_SPOKE_GROUPED = 0, WRB_RIM_GROUPED = 1 } wrb_construction;

/* s is ignored for WRB_SPOKE_GROUPED. Either output may be NULL. */
WRB_API wrb_status wrb_construct(wrb_construction mode, int d, int s, int t, wrb_coloring** coloring,
                                 char** report_json);

/* ---- counting lemmas ---- */
typedef enum wrb_lemma { WRB_LEMMA_PAIR = 0, WRB_LEMMA_TRIPLE = 1, WRB_LEMMA_MULTI = 2 } wrb_lemma;

/* i is the subset size for WRB_LEMMA_MULTI and ignored otherwise. */
WRB_API wrb_status wrb_lemma_verify(wrb_lemma lemma, int d, int s, const wrb_pattern* p, int i, int* holds,
                                    char** report_json);
WRB_API wrb_status wrb_color_bounds_verify(const wrb_coloring* c, const wrb_pattern* p, int* holds,
                                           char** report_json);

/* ---- closed forms ---- */
typedef enum wrb_value_kind { WRB_EXACT = 0, WRB_UPPER_BOUND = 1, WRB_LOWER_BOUND = 2 } wrb_value_kind;

typedef struct wrb_formula {
  int in_domain;
  int value;
  wrb_value_kind kind;
  const char* source; /* static string, e.g. "fan_single_hub" */
  int external;       /* literature value, not derived here */
} wrb_formula;

WRB_API wrb_status wrb_rb_formula(int d, int s, const wrb_pattern* p, wrb_formula* out);
WRB_API wrb_status wrb_known_value(int d, int s, const wrb_pattern* p, wrb_formula* out);

/* ---- exact solver ---- */
typedef struct wrb_budget {
  int max_merges;      /* -1: no limit */
  double timeout_secs; /* 0: no limit */
  int ceiling_rb;      /* 0: none */
  int symmetry;
} wrb_budget;

typedef enum wrb_solve_status { WRB_SOLVE_EXACT = 0, WRB_SOLVE_UNKNOWN = 1 } wrb_solve_status;

WRB_API void wrb_budget_init(wrb_budget* b);
/* cache_path may be NULL (no cache). */
WRB_API wrb_status wrb_solve(const wrb_wheel* w, const wrb_pattern* p, const wrb_budget* budget,
                             const char* cache_path, wrb_solve_result** out);
/* As wrb_solve, with the closed-form ceiling for p (if any) as ceiling_rb. */
WRB_API wrb_status wrb_probe(const wrb_wheel* w, const wrb_pattern* p, const wrb_budget* budget,
                             wrb_solve_result** out);
WRB_API void wrb_solve_result_free(wrb_solve_result* r);
WRB_API wrb_solve_status wrb_solve_status_of(const wrb_solve_result* r);
WRB_API int wrb_solve_rb(const wrb_solve_result* r);
WRB_API int wrb_solve_ar(const wrb_solve_result* r);
WRB_API int wrb_solve_rb_lower(const wrb_solve_result* r);
WRB_API int wrb_solve_rb_upper(const wrb_solve_result* r);
WRB_API int wrb_solve_from_cache(const wrb_solve_result* r);
WRB_API long long wrb_solve_nodes(const wrb_solve_result* r);
WRB_API wrb_status wrb_solve_witness(const wrb_solve_result* r, wrb_coloring** out);
WRB_API wrb_status wrb_solve_to_json(const wrb_solve_result* r, char** out);
/* Cache warnings raised while producing r. */
WRB_API size_t wrb_solve_warning_count(const wrb_solve_result* r);
WRB_API const char* wrb_solve_warning(const wrb_solve_result* r, size_t k);

WRB_API wrb_status wrb_lower_bound_from_construction(const wrb_wheel* w, const wrb_pattern* p, int* out);
/* $WHEELRB_CACHE_DIR/solve_cache.ndjson, else under ~/.cache/wheelrb. */
WRB_API wrb_status wrb_default_cache_path(char** out);

/* ---- tables ---- */
typedef enum wrb_table_format { WRB_TABLE_CSV = 0, WRB_TABLE_JSON = 1 } wrb_table_format;

WRB_API wrb_status wrb_emit_table(const int* ds, size_t nd, const int* ss, size_t ns,
                                  const wrb_pattern* const* patterns, size_t np, int run_solver,
                                  const wrb_budget* budget, const char* cache_path, wrb_table_format format,
                                  int* all_agree, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WHEELRB_H */
