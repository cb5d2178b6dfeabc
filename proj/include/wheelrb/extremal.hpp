#pragma once

#include <vector>

#include "wheelrb/coloring.hpp"
#include "wheelrb/patterns.hpp"

namespace wheelrb {

/// Outcome of one of the grouped lower-bound constructions.
struct ConstructionReport {
  EdgeColoring coloring;
  int colors_used = 0;
  int formula_value = 0;   // closed-form color count for this (d, s, t)
  int group_width = 0;     // t-2 for spoke groups, t-3 for rim groups
  int group_count = 0;     // q = ceil(d / width)
  int last_group_size = 0; // p, with d = (q-1) * width + p
  bool full_last_group() const { return last_group_size == group_width; }
  /// Patterns the coloring was checked to have no rainbow copy of.
  std::vector<ThetaPattern> verified_patterns;
};

/// W_d with spokes cut into runs of t-2; the first two spokes of each run share
/// a color so that any t-1 consecutive spokes repeat a color. Rim edge
/// v_i v_{i+1} gets color i. Needs t >= 4 and d >= t-1. Verified free of
/// rainbow F_t before returning.
ConstructionReport construct_spoke_grouped(int d, int t, bool verify = true);

/// W_d(s) with rim edges cut into runs of t-3, treated like the spoke runs
/// above; spoke u_a v_i gets color (a-1)d + i. Needs t >= 5, d >= t-1, s >= 1.
/// Verified against every chorded cycle theta_{t,l} with l <= t-4 when s = 1,
/// and against F_t when s = 2, t >= 6 or s >= 3, t >= 7.
ConstructionReport construct_rim_grouped(int d, int s, int t, bool verify = true);

/// Patterns construct_rim_grouped claims to avoid for (s, t); may be empty.
std::vector<ThetaPattern> rim_grouped_targets(int s, int t);

}  // namespace wheelrb
