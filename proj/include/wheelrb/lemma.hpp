#pragma once

#include <string>
#include <vector>

#include "wheelrb/coloring.hpp"
#include "wheelrb/graph.hpp"
#include "wheelrb/patterns.hpp"

namespace wheelrb {

enum class LemmaKind { Pair, Triple, Multi, ColorBound };
enum class PatternClass { Fan, SymmetricNonFan, Asymmetric };

const char* to_string(LemmaKind k);
const char* to_string(PatternClass c);
PatternClass classify(const ThetaPattern& p);

/// A bound num/den on a copy count (den is 1 or 2; the multi-edge bounds can
/// be half-integers).
struct LemmaBound {
  LemmaKind lemma = LemmaKind::Pair;
  long long num = 0;
  long long den = 1;
  PatternClass branch = PatternClass::Fan;
  int subset_size = 2;  // i: edges in the subset, or the color-class size

  bool admits(long long observed) const { return observed * den <= num; }
  std::string text() const;
};

/// Bounds on single-hub copies meeting a pair / triple / i-set of edges in at
/// least two edges, and on p(c) for a color class of size i.
LemmaBound pair_bound(int s, const ThetaPattern& p);
LemmaBound triple_bound(int s, const ThetaPattern& p);
LemmaBound multi_bound(int s, const ThetaPattern& p, int i);
/// Throws HypothesisError when no color-class bound is stated for (s, p).
LemmaBound color_bound(int s, const ThetaPattern& p, int i);

struct ColorBoundEntry {
  int color = 0;
  int class_size = 0;
  int p = 0;
  LemmaBound bound;
};

struct LemmaReport {
  int d = 0;
  int s = 0;
  ThetaPattern pattern = ThetaPattern::cycle(3);
  LemmaBound bound;
  long long max_observed = 0;
  std::vector<int> witness;       // linear edge ids attaining max_observed
  long long subsets_checked = 0;  // pairs, triples, i-sets or colors examined
  bool holds = true;
  std::vector<ColorBoundEntry> per_color;  // color-bound reports only
};

/// Every unordered pair of edges of W_d(s). Needs d >= 2t-3, t >= max(4, l+3);
/// otherwise HypothesisError.
LemmaReport verify_pair_lemma(int d, int s, const ThetaPattern& p);

/// Every unordered triple. Needs d >= 3t-5, t >= max(4, l+3).
LemmaReport verify_triple_lemma(int d, int s, const ThetaPattern& p);

/// Every i-subset up to rotation, reflection and hub permutation: each orbit
/// contains a subset holding spoke(1,1), or an all-rim subset holding rim(1),
/// so only those are enumerated. Needs d >= t-1, t >= l+3, i >= 4.
LemmaReport verify_multi_lemma(int d, int s, const ThetaPattern& p, int i);

/// p(c) over single-hub copies against the class-size table for every color.
/// Needs d >= 3t-5, t >= max(4, l+3); for s >= 2 only fans with s = 2, t >= 6
/// or s >= 3, t >= 7 are covered.
LemmaReport verify_color_bounds(const EdgeColoring& c, const ThetaPattern& p);

/// `count` consecutive spokes u_hub v_start, u_hub v_{start+1}, ...
std::vector<EdgeId> consecutive_spokes(const WheelGraph& g, int hub, int start, int count);
/// `count` consecutive rim edges starting at v_start v_{start+1}.
std::vector<EdgeId> consecutive_rims(const WheelGraph& g, int start, int count);

/// Copies of p in g (all copies, or single-hub ones) containing at least
/// `min_hits` of `edges`.
int copies_hitting(const WheelGraph& g, const ThetaPattern& p, const std::vector<EdgeId>& edges,
                   int min_hits, CopyScope scope);

}  // namespace wheelrb
