#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelrb/coloring.hpp"
#include "wheelrb/enumeration.hpp"
#include "wheelrb/graph.hpp"
#include "wheelrb/patterns.hpp"

namespace wheelrb {

struct SolverBudget {
  int max_merges = -1;        // deepest merge count to try; -1 = no limit
  double timeout_secs = 0.0;  // 0 = no limit
  int ceiling_rb = 0;         // known upper bound on rb used to skip shallow depths; 0 = none
  bool symmetry = false;      // orbit pruning of the first merge
};

struct SolverStats {
  long long nodes = 0;
  int depth = 0;  // merge count of the last depth searched
  double wall_seconds = 0.0;
};

enum class SolveStatus { Exact, Unknown };
const char* to_string(SolveStatus s);

/// ar is the largest color count with no rainbow copy; rb = ar + 1.
///
/// Exact: ar_value is certified, witness realizes it. Unknown: the budget ran
/// out; [rb_lower, rb_upper] is certified and witness realizes rb_lower - 1.
struct SolverResult {
  SolveStatus status = SolveStatus::Unknown;
  int ar_value = 0;
  int rb_value = 0;
  int rb_lower = 0;
  int rb_upper = 0;
  std::optional<EdgeColoring> witness;
  SolverStats stats;
  bool uses_ceiling = false;  // upper end rests on budget.ceiling_rb
  bool from_cache = false;
};

/// Iterative deepening over the number of merges M: at depth M search for a
/// partition of E into |E| - M classes covering every copy (two of its edges
/// in one class). Branching picks the uncovered copy with the fewest
/// admissible edge pairs and tries each pair in canonical order; a pair ruled
/// out by an earlier sibling is forbidden below later siblings.
SolverResult solve_exact(const WheelGraph& g, const ThetaPattern& p, const SolverBudget& budget = {});

/// colors + 1 of the matching grouped construction, after checking that it
/// has no rainbow p. ParameterError when no construction applies.
int lower_bound_from_construction(const WheelGraph& g, const ThetaPattern& p);

/// solve_exact seeded with the closed-form ceiling for p (when one exists).
SolverResult probe_open_value(const WheelGraph& g, const ThetaPattern& p, SolverBudget budget = {});

/// A rainbow-free coloring built by repeatedly merging the class pair that
/// covers the most uncovered copies. Gives a certified lower bound on ar.
EdgeColoring greedy_rainbow_free(const WheelGraph& g, const std::vector<Embedding>& copies);

/// Edge permutations induced by rotations, reflections and hub permutations.
/// Entry [k][id] is the image of linear edge id under the k-th map.
std::vector<std::vector<int>> wheel_edge_automorphisms(const WheelGraph& g);

}  // namespace wheelrb
