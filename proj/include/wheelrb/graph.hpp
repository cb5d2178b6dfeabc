#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace wheelrb {

/// A vertex of W_d(s): hub u_index (index in [1,s]) or boundary v_index
/// (index in [1,d]).
struct Vertex {
  enum class Kind { Hub, Boundary };
  Kind kind = Kind::Boundary;
  int index = 1;

  static Vertex hub(int a) { return {Kind::Hub, a}; }
  static Vertex boundary(int i) { return {Kind::Boundary, i}; }
  bool is_hub() const { return kind == Kind::Hub; }

  auto operator<=>(const Vertex&) const = default;
};

/// Rim(i) is v_i v_{i+1 mod d}; Spoke(hub, i) is u_hub v_i.
struct EdgeId {
  enum class Kind { Rim, Spoke };
  Kind kind = Kind::Rim;
  int hub = 0;  // 0 for rim edges
  int index = 1;

  static EdgeId rim(int i) { return {Kind::Rim, 0, i}; }
  static EdgeId spoke(int a, int i) { return {Kind::Spoke, a, i}; }
  bool is_spoke() const { return kind == Kind::Spoke; }

  auto operator<=>(const EdgeId&) const = default;
};

std::string to_string(const Vertex& v);
std::string to_string(const EdgeId& e);

/// The s-hubbed wheel: s pairwise non-adjacent hubs joined to every vertex of
/// the cycle v_1 ... v_d.
///
/// Edges are addressed by a linear id in [1, (s+1)d]: spoke(a,i) is
/// (a-1)d + i and rim(i) is sd + i. Vertices also have a dense id in
/// [0, s+d): hubs first, then the boundary in cycle order. Both numberings are
/// stable and are what embeddings and colorings are keyed on.
class WheelGraph {
 public:
  WheelGraph(int d, int s);

  int d() const { return d_; }
  int s() const { return s_; }
  int vertex_count() const { return s_ + d_; }
  int edge_count() const { return (s_ + 1) * d_; }
  int spoke_count() const { return s_ * d_; }

  int linearize(const EdgeId& e) const;
  EdgeId unlinearize(int id) const;
  bool is_spoke(int id) const { return id <= s_ * d_; }

  int vertex_id(const Vertex& v) const;
  Vertex vertex_at(int vid) const;
  bool is_hub(int vid) const { return vid < s_; }
  bool contains(const Vertex& v) const;

  /// Linear edge id joining two dense vertex ids, or 0 if not adjacent.
  int edge_between(int x, int y) const { return adjacency_[x * vertex_count() + y]; }
  const std::vector<int>& neighbors(int vid) const { return neighbors_[vid]; }
  /// Dense vertex ids of the endpoints; the hub (if any) comes first.
  std::pair<int, int> endpoints(int id) const;

  int degree(const Vertex& v) const;
  std::vector<EdgeId> incident_edges(const Vertex& v) const;

  /// Boundary index reduced into [1, d].
  int wrap(int i) const { return ((i - 1) % d_ + d_) % d_ + 1; }

 private:
  int d_;
  int s_;
  std::vector<int> adjacency_;
  std::vector<std::vector<int>> neighbors_;
};

WheelGraph build_wheel(int d, int s);

}  // namespace wheelrb
