#include "wheelrb/graph.hpp"

#include <algorithm>

#include "wheelrb/errors.hpp"

namespace wheelrb {

std::string to_string(const Vertex& v) {
  return (v.is_hub() ? "u" : "v") + std::to_string(v.index);
}

std::string to_string(const EdgeId& e) {
  if (e.is_spoke()) return "spoke(" + std::to_string(e.hub) + "," + std::to_string(e.index) + ")";
  return "rim(" + std::to_string(e.index) + ")";
}

WheelGraph::WheelGraph(int d, int s) : d_(d), s_(s) {
  if (d < 3) throw ParameterError("wheel needs d >= 3, got d=" + std::to_string(d));
  if (s < 1) throw ParameterError("wheel needs s >= 1, got s=" + std::to_string(s));

  const int n = vertex_count();
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbors_.assign(n, {});
  auto connect = [&](int x, int y, int id) {
    adjacency_[x * n + y] = id;
    adjacency_[y * n + x] = id;
    neighbors_[x].push_back(y);
    neighbors_[y].push_back(x);
  };
  for (int a = 1; a <= s_; ++a)
    for (int i = 1; i <= d_; ++i)
      connect(a - 1, s_ + i - 1, linearize(EdgeId::spoke(a, i)));
  for (int i = 1; i <= d_; ++i)
    connect(s_ + i - 1, s_ + wrap(i + 1) - 1, linearize(EdgeId::rim(i)));
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

int WheelGraph::linearize(const EdgeId& e) const {
  if (e.index < 1 || e.index > d_) throw LookupError("no such edge: " + to_string(e));
  if (e.is_spoke()) {
    if (e.hub < 1 || e.hub > s_) throw LookupError("no such edge: " + to_string(e));
    return (e.hub - 1) * d_ + e.index;
  }
  return s_ * d_ + e.index;
}

EdgeId WheelGraph::unlinearize(int id) const {
  if (id < 1 || id > edge_count()) throw LookupError("edge id out of range: " + std::to_string(id));
  if (id <= s_ * d_) return EdgeId::spoke((id - 1) / d_ + 1, (id - 1) % d_ + 1);
  return EdgeId::rim(id - s_ * d_);
}

bool WheelGraph::contains(const Vertex& v) const {
  return v.index >= 1 && v.index <= (v.is_hub() ? s_ : d_);
}

int WheelGraph::vertex_id(const Vertex& v) const {
  if (!contains(v)) throw LookupError("no such vertex: " + to_string(v));
  return v.is_hub() ? v.index - 1 : s_ + v.index - 1;
}

Vertex WheelGraph::vertex_at(int vid) const {
  if (vid < 0 || vid >= vertex_count()) throw LookupError("vertex id out of range: " + std::to_string(vid));
  return vid < s_ ? Vertex::hub(vid + 1) : Vertex::boundary(vid - s_ + 1);
}

std::pair<int, int> WheelGraph::endpoints(int id) const {
  EdgeId e = unlinearize(id);
  if (e.is_spoke()) return {e.hub - 1, s_ + e.index - 1};
  return {s_ + e.index - 1, s_ + wrap(e.index + 1) - 1};
}

int WheelGraph::degree(const Vertex& v) const {
  return static_cast<int>(neighbors_[vertex_id(v)].size());
}

std::vector<EdgeId> WheelGraph::incident_edges(const Vertex& v) const {
  std::vector<EdgeId> out;
  if (!contains(v)) throw LookupError("no such vertex: " + to_string(v));
  if (v.is_hub()) {
    for (int i = 1; i <= d_; ++i) out.push_back(EdgeId::spoke(v.index, i));
    return out;
  }
  // Rim edges first (the one ending at v, then the one leaving v), then spokes.
  out.push_back(EdgeId::rim(wrap(v.index - 1)));
  out.push_back(EdgeId::rim(v.index));
  for (int a = 1; a <= s_; ++a) out.push_back(EdgeId::spoke(a, v.index));
  return out;
}

WheelGraph build_wheel(int d, int s) { return WheelGraph(d, s); }

}  // namespace wheelrb
