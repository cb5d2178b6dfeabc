#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wheelrb/enumeration.hpp"
#include "wheelrb/graph.hpp"
#include "wheelrb/patterns.hpp"

namespace wheelrb {

/// A total assignment of positive colors to the edges of a wheel.
class EdgeColoring {
 public:
  /// `colors` is indexed by linear edge id; slot 0 is ignored.
  EdgeColoring(WheelGraph host, std::vector<int> colors);

  /// rim[i-1] colors v_i v_{i+1}; spokes[a-1][i-1] colors u_a v_i.
  static EdgeColoring from_rows(const WheelGraph& host, const std::vector<int>& rim,
                                const std::vector<std::vector<int>>& spokes);

  const WheelGraph& host() const { return host_; }
  int color(int edge) const;
  int color(const EdgeId& e) const { return color(host_.linearize(e)); }
  const std::vector<int>& table() const { return colors_; }

  std::vector<int> rim_row() const;
  std::vector<std::vector<int>> spoke_rows() const;

  /// Number of distinct colors, k.
  int color_count() const { return static_cast<int>(classes_.size()); }
  /// Distinct colors in increasing order.
  std::vector<int> colors() const;
  bool uses(int color) const { return classes_.count(color) != 0; }
  /// Edges carrying `color`, sorted. Throws LookupError for unused colors.
  const std::vector<int>& edges_of(int color) const;
  /// A_i for every i that occurs: class size -> colors of that size.
  std::map<int, std::vector<int>> histogram() const;

 private:
  WheelGraph host_;
  std::vector<int> colors_;
  std::map<int, std::vector<int>> classes_;
};

struct RainbowWitness {
  Embedding embedding;
  int distinct_colors = 0;
};

/// The first copy of p (in canonical edge-list order) whose edges carry
/// pairwise distinct colors, if any.
std::optional<RainbowWitness> find_rainbow(const EdgeColoring& c, const ThetaPattern& p);

enum class CopyScope { All, SingleHub };

struct PStatistic {
  int color = 0;
  int p = 0;                 // copies with at least two edges of `color`
  std::vector<int> p_by_j;   // p_by_j[j]: copies with exactly j edges of `color`
};

/// Throws LookupError if `color` is unused.
PStatistic p_statistic(const EdgeColoring& c, const ThetaPattern& p, int color,
                       CopyScope scope = CopyScope::All);

/// Same, over a precomputed copy list.
PStatistic p_statistic(const EdgeColoring& c, const std::vector<Embedding>& copies, int color);

}  // namespace wheelrb
