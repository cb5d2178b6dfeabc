#include "wheelrb/extremal.hpp"

#include <algorithm>

#include "wheelrb/errors.hpp"

namespace wheelrb {

namespace {

// Colors for a run of n consecutive edges cut into groups of `width`: the first
// two edges of a group share a color, later ones step by one, and a lone edge
// in the last group repeats its predecessor. Group m starts at
// base + (m-1)(width-1) + 1.
std::vector<int> grouped_colors(int n, int width, int base) {
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    int m = (i - 1) / width + 1;
    int r = (i - 1) % width + 1;
    out[i - 1] = base + (m - 1) * (width - 1) + std::max(1, r - 1);
  }
  if ((n - 1) % width == 0) out[n - 1] = out[n - 2];
  return out;
}

void verify_against(ConstructionReport& report, const std::vector<ThetaPattern>& targets) {
  for (const auto& p : targets) {
    if (auto w = find_rainbow(report.coloring, p)) {
      std::string edges;
      for (int id : w->embedding.edges) edges += " " + std::to_string(id);
      throw VerificationError("construction has a rainbow " + p.name() + ":" + edges);
    }
    report.verified_patterns.push_back(p);
  }
}

}  // namespace

ConstructionReport construct_spoke_grouped(int d, int t, bool verify) {
  if (t < 4) throw ParameterError("spoke-grouped construction needs t >= 4");
  if (d < t - 1) throw ParameterError("spoke-grouped construction needs d >= t-1");
  const int width = t - 2;
  WheelGraph host(d, 1);

  std::vector<int> rim(d);
  for (int i = 1; i <= d; ++i) rim[i - 1] = i;
  auto spokes = grouped_colors(d, width, d);

  ConstructionReport report{EdgeColoring::from_rows(host, rim, {spokes})};
  report.colors_used = report.coloring.color_count();
  report.formula_value = (2 * t - 5) * d / (t - 2);
  report.group_width = width;
  report.group_count = (d + width - 1) / width;
  report.last_group_size = d - (report.group_count - 1) * width;
  if (verify) verify_against(report, {ThetaPattern::fan(t)});
  return report;
}

std::vector<ThetaPattern> rim_grouped_targets(int s, int t) {
  if (s == 1 && t >= 5) return all_patterns(t, t - 4);
  if ((s == 2 && t >= 6) || (s >= 3 && t >= 7)) return {ThetaPattern::fan(t)};
  return {};
}

ConstructionReport construct_rim_grouped(int d, int s, int t, bool verify) {
  if (t < 5) throw ParameterError("rim-grouped construction needs t >= 5");
  if (d < t - 1) throw ParameterError("rim-grouped construction needs d >= t-1");
  if (s < 1) throw ParameterError("rim-grouped construction needs s >= 1");
  const int width = t - 3;
  WheelGraph host(d, s);

  std::vector<std::vector<int>> spokes(s, std::vector<int>(d));
  for (int a = 1; a <= s; ++a)
    for (int i = 1; i <= d; ++i) spokes[a - 1][i - 1] = (a - 1) * d + i;
  auto rim = grouped_colors(d, width, s * d);

  ConstructionReport report{EdgeColoring::from_rows(host, rim, spokes)};
  report.colors_used = report.coloring.color_count();
  report.formula_value = ((s + 1) * t - (3 * s + 4)) * d / (t - 3);
  report.group_width = width;
  report.group_count = (d + width - 1) / width;
  report.last_group_size = d - (report.group_count - 1) * width;
  if (verify) verify_against(report, rim_grouped_targets(s, t));
  return report;
}

}  // namespace wheelrb
