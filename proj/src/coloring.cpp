#include "wheelrb/coloring.hpp"

#include <algorithm>

#include "wheelrb/errors.hpp"

namespace wheelrb {

EdgeColoring::EdgeColoring(WheelGraph host, std::vector<int> colors)
    : host_(std::move(host)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != host_.edge_count() + 1)
    throw ParameterError("coloring has " + std::to_string(colors_.size() ? colors_.size() - 1 : 0) +
                         " entries, host has " + std::to_string(host_.edge_count()) + " edges");
  colors_[0] = 0;
  for (int id = 1; id <= host_.edge_count(); ++id) {
    if (colors_[id] < 1) throw ParameterError("colors must be positive integers");
    classes_[colors_[id]].push_back(id);
  }
}

EdgeColoring EdgeColoring::from_rows(const WheelGraph& host, const std::vector<int>& rim,
                                     const std::vector<std::vector<int>>& spokes) {
  if (static_cast<int>(rim.size()) != host.d())
    throw ParameterError("rim row has " + std::to_string(rim.size()) + " entries, expected d=" +
                         std::to_string(host.d()));
  if (static_cast<int>(spokes.size()) != host.s())
    throw ParameterError("expected " + std::to_string(host.s()) + " spoke rows");
  std::vector<int> table(host.edge_count() + 1, 0);
  for (int a = 1; a <= host.s(); ++a) {
    if (static_cast<int>(spokes[a - 1].size()) != host.d())
      throw ParameterError("spoke row " + std::to_string(a) + " must have d entries");
    for (int i = 1; i <= host.d(); ++i) table[host.linearize(EdgeId::spoke(a, i))] = spokes[a - 1][i - 1];
  }
  for (int i = 1; i <= host.d(); ++i) table[host.linearize(EdgeId::rim(i))] = rim[i - 1];
  return EdgeColoring(host, std::move(table));
}

int EdgeColoring::color(int edge) const {
  if (edge < 1 || edge > host_.edge_count()) throw LookupError("edge id out of range: " + std::to_string(edge));
  return colors_[edge];
}

std::vector<int> EdgeColoring::rim_row() const {
  std::vector<int> row;
  for (int i = 1; i <= host_.d(); ++i) row.push_back(color(EdgeId::rim(i)));
  return row;
}

std::vector<std::vector<int>> EdgeColoring::spoke_rows() const {
  std::vector<std::vector<int>> rows(host_.s());
  for (int a = 1; a <= host_.s(); ++a)
    for (int i = 1; i <= host_.d(); ++i) rows[a - 1].push_back(color(EdgeId::spoke(a, i)));
  return rows;
}

std::vector<int> EdgeColoring::colors() const {
  std::vector<int> out;
  for (const auto& [c, _] : classes_) out.push_back(c);
  return out;
}

const std::vector<int>& EdgeColoring::edges_of(int color) const {
  auto it = classes_.find(color);
  if (it == classes_.end()) throw LookupError("color " + std::to_string(color) + " is not used");
  return it->second;
}

std::map<int, std::vector<int>> EdgeColoring::histogram() const {
  std::map<int, std::vector<int>> a;
  for (const auto& [c, edges] : classes_) a[static_cast<int>(edges.size())].push_back(c);
  return a;
}

std::optional<RainbowWitness> find_rainbow(const EdgeColoring& c, const ThetaPattern& p) {
  auto rainbow = enumerate_rainbow(c.host(), p, c.table());
  if (rainbow.empty()) return std::nullopt;
  RainbowWitness w;
  w.embedding = std::move(rainbow.front());
  std::vector<int> seen;
  for (int id : w.embedding.edges) seen.push_back(c.color(id));
  std::sort(seen.begin(), seen.end());
  w.distinct_colors = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
  return w;
}

PStatistic p_statistic(const EdgeColoring& c, const std::vector<Embedding>& copies, int color) {
  const auto& members = c.edges_of(color);
  PStatistic out;
  out.color = color;
  out.p_by_j.assign(members.size() + 1, 0);
  for (const auto& copy : copies) {
    int j = 0;
    for (int id : copy.edges) j += c.color(id) == color;
    ++out.p_by_j[j];
    if (j >= 2) ++out.p;
  }
  return out;
}

PStatistic p_statistic(const EdgeColoring& c, const ThetaPattern& p, int color, CopyScope scope) {
  c.edges_of(color);  // validates before enumerating
  auto copies = enumerate_oracle(c.host(), p);
  if (scope == CopyScope::SingleHub) copies = single_hub_copies(c.host(), copies);
  return p_statistic(c, copies, color);
}

}  // namespace wheelrb
