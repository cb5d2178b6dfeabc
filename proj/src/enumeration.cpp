#include "wheelrb/enumeration.hpp"

#include <algorithm>
#include <utility>

#include "wheelrb/errors.hpp"

namespace wheelrb {

bool Embedding::contains(int edge) const {
  return std::binary_search(edges.begin(), edges.end(), edge);
}

namespace {

void canonicalize(std::vector<Embedding>& copies) {
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
}

std::vector<int> arc_edges(const WheelGraph& g, int hub, int start, const std::vector<int>& x, int t) {
  std::vector<int> edges;
  edges.reserve(t - 2 + x.size());
  // Pattern vertex k (2 <= k <= t) sits on boundary v_{start + k - 2}.
  for (int k = 2; k < t; ++k) edges.push_back(g.linearize(EdgeId::rim(g.wrap(start + k - 2))));
  for (int k : x) edges.push_back(g.linearize(EdgeId::spoke(hub, g.wrap(start + k - 2))));
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Backtracking map of pattern vertices 1..t onto distinct host vertices so that
// every pattern edge lands on a host edge. With `colors` set, partial maps that
// repeat a color are cut.
class Matcher {
 public:
  Matcher(const WheelGraph& g, const ThetaPattern& p, const std::vector<int>* colors)
      : g_(g), p_(p), colors_(colors), map_(p.t() + 1, -1), used_(g.vertex_count(), false) {
    for (int k = 1; k <= p.t(); ++k) joined_.push_back(k > 2 && p.joined_to_center(k));
    joined_.insert(joined_.begin(), false);
    if (colors_) {
      int top = 0;
      for (int c : *colors_) top = std::max(top, c);
      color_use_.assign(top + 1, 0);
    }
  }

  std::vector<Embedding> run() {
    const int center_degree = p_.ell() + 2;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (static_cast<int>(g_.neighbors(v).size()) < center_degree) continue;
      place(1, v);
      extend(2);
      unplace(1);
    }
    canonicalize(found_);
    return std::move(found_);
  }

 private:
  bool push_edge(int id) {
    if (colors_) {
      int c = (*colors_)[id];
      if (color_use_[c]) return false;
      color_use_[c] = 1;
    }
    stack_.push_back(id);
    return true;
  }

  void pop_edge() {
    if (colors_) color_use_[(*colors_)[stack_.back()]] = 0;
    stack_.pop_back();
  }

  void place(int k, int v) {
    map_[k] = v;
    used_[v] = true;
  }
  void unplace(int k) {
    used_[map_[k]] = false;
    map_[k] = -1;
  }

  void extend(int k) {
    const int t = p_.t();
    if (k > t) {
      Embedding e;
      e.edges = stack_;
      std::sort(e.edges.begin(), e.edges.end());
      found_.push_back(std::move(e));
      return;
    }
    const int prev = map_[k - 1];
    const int center = map_[1];
    for (int v : g_.neighbors(prev)) {
      if (used_[v]) continue;
      int chord = 0;
      if (joined_[k]) {
        chord = g_.edge_between(center, v);
        if (!chord) continue;
      }
      int closing = 0;
      if (k == t) {
        closing = g_.edge_between(v, center);
        if (!closing) continue;
      }
      int pushed = 0;
      bool ok = push_edge(g_.edge_between(prev, v));
      if (ok) ++pushed;
      // For k == t the closing edge v_t v_1 doubles as the "chord" entry.
      if (ok && chord && k != t) {
        ok = push_edge(chord);
        if (ok) ++pushed;
      }
      if (ok && closing) {
        ok = push_edge(closing);
        if (ok) ++pushed;
      }
      if (ok) {
        place(k, v);
        extend(k + 1);
        unplace(k);
      }
      while (pushed--) pop_edge();
    }
  }

  const WheelGraph& g_;
  const ThetaPattern& p_;
  const std::vector<int>* colors_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<bool> joined_;
  std::vector<int> stack_;
  std::vector<char> color_use_;
  std::vector<Embedding> found_;
};

}  // namespace

std::vector<Embedding> enumerate_hub_centered(const WheelGraph& g, const ThetaPattern& p) {
  if (p.t() > g.d())
    throw InfeasibleArcError("pattern with t=" + std::to_string(p.t()) + " does not fit on a rim of length d=" +
                             std::to_string(g.d()));
  const std::vector<int> forward = p.chord_vector();
  std::vector<int> backward;
  if (!p.is_symmetric()) backward = p.reversed().chord_vector();

  std::vector<Embedding> out;
  for (int a = 1; a <= g.s(); ++a) {
    for (int q = 1; q <= g.d(); ++q) {
      out.push_back({arc_edges(g, a, q, forward, p.t()), HubPlacement{a, q, false}});
      if (!backward.empty()) out.push_back({arc_edges(g, a, q, backward, p.t()), HubPlacement{a, q, true}});
    }
  }
  canonicalize(out);
  return out;
}

std::vector<Embedding> enumerate_oracle(const WheelGraph& g, const ThetaPattern& p) {
  return Matcher(g, p, nullptr).run();
}

std::vector<Embedding> enumerate_rainbow(const WheelGraph& g, const ThetaPattern& p,
                                         const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.edge_count() + 1)
    throw ParameterError("color table size does not match the host");
  // Dense ranks keep the matcher's color counters small.
  std::vector<int> ranks(colors.begin() + 1, colors.end());
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  std::vector<int> dense(colors.size(), 0);
  for (std::size_t id = 1; id < colors.size(); ++id)
    dense[id] = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), colors[id]) - ranks.begin()) + 1;
  return Matcher(g, p, &dense).run();
}

int hub_count(const WheelGraph& g, const Embedding& e) {
  unsigned long long seen = 0;
  int count = 0;
  for (int id : e.edges) {
    if (!g.is_spoke(id)) continue;
    int hub = (id - 1) / g.d();
    if (!(seen >> hub & 1ULL)) {
      seen |= 1ULL << hub;
      ++count;
    }
  }
  return count;
}

std::vector<Embedding> single_hub_copies(const WheelGraph& g, const std::vector<Embedding>& copies) {
  std::vector<Embedding> out;
  for (const auto& e : copies)
    if (hub_count(g, e) == 1) out.push_back(e);
  return out;
}

std::vector<int> incidence_counts(const WheelGraph& g, const std::vector<Embedding>& copies) {
  std::vector<int> counts(g.edge_count() + 1, 0);
  for (const auto& e : copies)
    for (int id : e.edges) ++counts[id];
  return counts;
}

int incidence_count(const WheelGraph& g, const ThetaPattern& p, const EdgeId& e) {
  const int id = g.linearize(e);
  int n = 0;
  for (const auto& copy : enumerate_oracle(g, p)) n += copy.contains(id);
  return n;
}

int count_copies_hitting(const std::vector<Embedding>& copies, const std::vector<int>& edges, int min_hits) {
  int n = 0;
  for (const auto& copy : copies) {
    int hits = 0;
    for (int id : edges) hits += copy.contains(id);
    if (hits >= min_hits) ++n;
  }
  return n;
}

bool check_single_hub(const WheelGraph& g, const ThetaPattern& p) {
  if (!p.is_fan()) throw ParameterError("single-hub check is defined for fans only, got " + p.name());
  for (const auto& e : enumerate_oracle(g, p))
    if (hub_count(g, e) != 1) return false;
  return true;
}

}  // namespace wheelrb
