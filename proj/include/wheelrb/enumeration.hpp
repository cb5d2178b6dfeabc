#pragma once

#include <optional>
#include <vector>

#include "wheelrb/graph.hpp"
#include "wheelrb/patterns.hpp"

namespace wheelrb {

/// How a hub-centered copy was placed: pattern v_1 on hub u_hub, the boundary
/// path v_2 ... v_t on the arc starting at v_start, traversed forward or with
/// the pattern reflected.
struct HubPlacement {
  int hub = 1;
  int start = 1;
  bool reversed = false;

  bool operator==(const HubPlacement&) const = default;
};

/// One copy of a pattern in the host, identified by its sorted linear edge
/// ids. Equality and ordering look at the edge set only.
struct Embedding {
  std::vector<int> edges;
  std::optional<HubPlacement> placement;  // empty when found by the oracle

  bool contains(int edge) const;
  bool operator==(const Embedding& o) const { return edges == o.edges; }
  bool operator<(const Embedding& o) const { return edges < o.edges; }
};

/// Closed-form enumeration of the copies whose centre sits on a hub and whose
/// boundary path is a consecutive rim arc. Sorted, duplicate-free, and of size
/// s * d * multiplicity(p). Throws InfeasibleArcError when t > d.
std::vector<Embedding> enumerate_hub_centered(const WheelGraph& g, const ThetaPattern& p);

/// Every copy of p in g, found by backtracking the pattern's boundary cycle
/// through the host. Sorted by edge list.
std::vector<Embedding> enumerate_oracle(const WheelGraph& g, const ThetaPattern& p);

/// Copies of p whose edge colors are pairwise distinct. `colors` is indexed by
/// linear edge id (slot 0 unused). Sorted by edge list.
std::vector<Embedding> enumerate_rainbow(const WheelGraph& g, const ThetaPattern& p,
                                         const std::vector<int>& colors);

/// Number of distinct hub vertices touched by an embedding.
int hub_count(const WheelGraph& g, const Embedding& e);

/// Copies containing exactly one hub vertex.
std::vector<Embedding> single_hub_copies(const WheelGraph& g, const std::vector<Embedding>& copies);

/// Number of oracle copies containing e.
int incidence_count(const WheelGraph& g, const ThetaPattern& p, const EdgeId& e);

/// Per-edge incidence over a given copy list, indexed by linear edge id.
std::vector<int> incidence_counts(const WheelGraph& g, const std::vector<Embedding>& copies);

/// Number of copies containing at least `min_hits` of the given edges.
int count_copies_hitting(const std::vector<Embedding>& copies, const std::vector<int>& edges,
                         int min_hits);

/// For a fan p: whether every copy of p in g uses exactly one hub.
bool check_single_hub(const WheelGraph& g, const ThetaPattern& p);

}  // namespace wheelrb
