#include "wheelrb/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "wheelrb/errors.hpp"
#include "wheelrb/extremal.hpp"
#include "wheelrb/formulas.hpp"

namespace wheelrb {

const char* to_string(SolveStatus s) { return s == SolveStatus::Exact ? "exact" : "unknown"; }

namespace {

using Clock = std::chrono::steady_clock;

// Colors 1..k assigned to classes in order of their smallest edge id.
EdgeColoring coloring_from_roots(const WheelGraph& g, const std::vector<int>& root) {
  std::vector<int> colors(g.edge_count() + 1, 0);
  std::map<int, int> label;
  for (int id = 1; id <= g.edge_count(); ++id) {
    auto [it, fresh] = label.emplace(root[id], static_cast<int>(label.size()) + 1);
    colors[id] = it->second;
  }
  return EdgeColoring(g, std::move(colors));
}

class MergeSearch {
 public:
  enum Outcome { Infeasible = 0, Feasible = 1, OutOfTime = -1 };

  MergeSearch(const WheelGraph& g, const std::vector<Embedding>& copies, std::optional<Clock::time_point> deadline)
      : g_(g), copies_(copies), deadline_(deadline) {}

  Outcome run(int merges, const std::vector<std::vector<int>>* automorphisms) {
    reset();
    if (merges == 0 || !automorphisms) return dfs(merges);
    return orbit_root(merges, *automorphisms);
  }

  const std::vector<int>& witness_roots() const { return witness_; }
  long long nodes() const { return nodes_; }

 private:
  void reset() {
    const int n = g_.edge_count() + 1;
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(n, 1);
    history_.clear();
    cannot_.clear();
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
  }

  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

  static long long key(int x, int y) {
    if (x > y) std::swap(x, y);
    return static_cast<long long>(x) << 32 | static_cast<unsigned>(y);
  }

  Outcome dfs(int remaining) {
    ++nodes_;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) return OutOfTime;

    const int n = g_.edge_count() + 1;
    std::vector<int> root(n);
    for (int id = 1; id < n; ++id) root[id] = find(id);

    std::vector<int> uncovered;
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      const auto& e = copies_[c].edges;
      bool covered = false;
      for (std::size_t x = 0; x < e.size() && !covered; ++x)
        for (std::size_t y = x + 1; y < e.size(); ++y)
          if (root[e[x]] == root[e[y]]) {
            covered = true;
            break;
          }
      if (!covered) uncovered.push_back(static_cast<int>(c));
    }
    if (uncovered.empty()) {
      witness_ = root;
      return Feasible;
    }
    if (remaining == 0) return Infeasible;

    // Copies with pairwise disjoint class sets each need their own merge.
    {
      std::vector<char> taken(n, 0);
      int packed = 0;
      for (int c : uncovered) {
        const auto& e = copies_[c].edges;
        if (std::any_of(e.begin(), e.end(), [&](int id) { return taken[root[id]]; })) continue;
        for (int id : e) taken[root[id]] = 1;
        if (++packed > remaining) return Infeasible;
      }
    }

    std::vector<long long> forbidden;
    forbidden.reserve(cannot_.size());
    for (auto [x, y] : cannot_) forbidden.push_back(key(root[x], root[y]));
    std::sort(forbidden.begin(), forbidden.end());
    auto allowed = [&](int a, int b) {
      return !std::binary_search(forbidden.begin(), forbidden.end(), key(root[a], root[b]));
    };

    int best = -1;
    std::size_t best_pairs = 0;
    for (int c : uncovered) {
      const auto& e = copies_[c].edges;
      std::size_t pairs = 0;
      for (std::size_t x = 0; x < e.size(); ++x)
        for (std::size_t y = x + 1; y < e.size(); ++y) pairs += allowed(e[x], e[y]);
      if (best < 0 || pairs < best_pairs) {
        best = c;
        best_pairs = pairs;
        if (pairs == 0) return Infeasible;
      }
    }

    const auto& e = copies_[best].edges;
    std::size_t added = 0;
    Outcome outcome = Infeasible;
    for (std::size_t x = 0; x < e.size() && outcome == Infeasible; ++x)
      for (std::size_t y = x + 1; y < e.size(); ++y) {
        if (!allowed(e[x], e[y])) continue;
        unite(e[x], e[y]);
        outcome = dfs(remaining - 1);
        undo();
        if (outcome != Infeasible) break;
        cannot_.emplace_back(e[x], e[y]);
        ++added;
      }
    cannot_.resize(cannot_.size() - added);
    return outcome;
  }

  // First merge chosen among orbit representatives of in-copy edge pairs; the
  // whole orbits of earlier representatives are forbidden for later ones.
  Outcome orbit_root(int merges, const std::vector<std::vector<int>>& autos) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> orbits;
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& copy : copies_) {
      const auto& e = copy.edges;
      for (std::size_t x = 0; x < e.size(); ++x)
        for (std::size_t y = x + 1; y < e.size(); ++y) {
          std::pair<int, int> pr{e[x], e[y]};
          if (seen[pr]) continue;
          std::vector<std::pair<int, int>> images;
          for (const auto& perm : autos) {
            int a = perm[pr.first], b = perm[pr.second];
            images.emplace_back(std::min(a, b), std::max(a, b));
          }
          std::sort(images.begin(), images.end());
          images.erase(std::unique(images.begin(), images.end()), images.end());
          for (const auto& im : images) seen[im] = true;
          orbits[images.front()] = std::move(images);
        }
    }
    ++nodes_;
    for (const auto& [rep, members] : orbits) {
      unite(rep.first, rep.second);
      Outcome outcome = dfs(merges - 1);
      undo();
      if (outcome != Infeasible) return outcome;
      for (const auto& m : members) cannot_.push_back(m);
    }
    return Infeasible;
  }

  const WheelGraph& g_;
  const std::vector<Embedding>& copies_;
  std::optional<Clock::time_point> deadline_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  std::vector<std::pair<int, int>> cannot_;
  std::vector<int> witness_;
  long long nodes_ = 0;
};

std::optional<EdgeColoring> construction_for(const WheelGraph& g, const ThetaPattern& p) {
  const int d = g.d(), s = g.s(), t = p.t();
  if (d < t - 1) return std::nullopt;
  if (s == 1 && p.is_fan() && t >= 4) return construct_spoke_grouped(d, t, false).coloring;
  bool rim_theta = s == 1 && t >= 5 && t >= p.ell() + 4;
  bool rim_fan = p.is_fan() && ((s == 2 && t >= 6) || (s >= 3 && t >= 7));
  if (rim_theta || rim_fan) return construct_rim_grouped(d, s, t, false).coloring;
  return std::nullopt;
}

}  // namespace

EdgeColoring greedy_rainbow_free(const WheelGraph& g, const std::vector<Embedding>& copies) {
  const int n = g.edge_count() + 1;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (;;) {
    std::map<std::pair<int, int>, int> gain;
    for (const auto& copy : copies) {
      std::vector<int> r;
      for (int id : copy.edges) r.push_back(find(id));
      std::vector<int> sorted = r;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      for (std::size_t x = 0; x < sorted.size(); ++x)
        for (std::size_t y = x + 1; y < sorted.size(); ++y) ++gain[{sorted[x], sorted[y]}];
    }
    if (gain.empty()) break;
    auto best = std::max_element(gain.begin(), gain.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    parent[best->first.second] = best->first.first;
  }
  std::vector<int> root(n);
  for (int id = 1; id < n; ++id) root[id] = find(id);
  return coloring_from_roots(g, root);
}

std::vector<std::vector<int>> wheel_edge_automorphisms(const WheelGraph& g) {
  const int d = g.d(), s = g.s();
  std::vector<int> hubs(s);
  std::iota(hubs.begin(), hubs.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    for (int flip = 0; flip < 2; ++flip)
      for (int shift = 0; shift < d; ++shift) {
        std::vector<int> vmap(g.vertex_count());
        for (int a = 0; a < s; ++a) vmap[a] = hubs[a];
        for (int i = 0; i < d; ++i) {
          int j = flip ? (shift - i + d) % d : (shift + i) % d;
          vmap[s + i] = s + j;
        }
        std::vector<int> emap(g.edge_count() + 1, 0);
        for (int id = 1; id <= g.edge_count(); ++id) {
          auto [x, y] = g.endpoints(id);
          emap[id] = g.edge_between(vmap[x], vmap[y]);
        }
        out.push_back(std::move(emap));
      }
  } while (std::next_permutation(hubs.begin(), hubs.end()));
  return out;
}

SolverResult solve_exact(const WheelGraph& g, const ThetaPattern& p, const SolverBudget& budget) {
  const auto started = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (budget.timeout_secs > 0)
    deadline = started + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.timeout_secs));

  const int edges = g.edge_count();
  const auto copies = enumerate_oracle(g, p);

  SolverResult result;
  auto finish = [&](SolverResult& r) -> SolverResult {
    r.rb_value = r.ar_value + 1;
    if (r.status == SolveStatus::Exact) r.rb_lower = r.rb_upper = r.rb_value;
    r.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return r;
  };

  // Best certified lower bound on ar before searching.
  EdgeColoring best = greedy_rainbow_free(g, copies);
  if (auto built = construction_for(g, p); built && built->color_count() > best.color_count()) {
    if (!find_rainbow(*built, p)) best = *built;
  }
  const int lower_ar = best.color_count();

  int upper_ar = edges;
  int first_depth = 0;
  if (budget.ceiling_rb > 0 && budget.ceiling_rb - 1 < upper_ar) {
    upper_ar = budget.ceiling_rb - 1;
    first_depth = edges - upper_ar;
    result.uses_ceiling = true;
    if (lower_ar > upper_ar)
      throw Error("ceiling rb <= " + std::to_string(budget.ceiling_rb) + " contradicts a verified " +
                  std::to_string(lower_ar) + "-coloring with no rainbow " + p.name());
  }

  const auto autos = budget.symmetry ? wheel_edge_automorphisms(g) : std::vector<std::vector<int>>{};
  MergeSearch search(g, copies, deadline);
  const int known_depth = edges - lower_ar;  // feasible: `best` realizes it
  for (int depth = first_depth; depth < known_depth; ++depth) {
    if (budget.max_merges >= 0 && depth > budget.max_merges) break;
    result.stats.depth = depth;
    auto outcome = search.run(depth, budget.symmetry ? &autos : nullptr);
    result.stats.nodes = search.nodes();
    if (outcome == MergeSearch::Feasible) {
      result.status = SolveStatus::Exact;
      result.ar_value = edges - depth;
      result.witness = coloring_from_roots(g, search.witness_roots());
      return finish(result);
    }
    if (outcome == MergeSearch::OutOfTime) {
      result.status = SolveStatus::Unknown;
      result.ar_value = lower_ar;
      result.witness = best;
      result.rb_lower = lower_ar + 1;
      result.rb_upper = upper_ar + 1;
      return finish(result);
    }
    upper_ar = edges - depth - 1;
  }

  result.ar_value = lower_ar;
  result.witness = best;
  if (upper_ar == lower_ar) {
    result.status = SolveStatus::Exact;
    if (result.stats.depth < known_depth) result.stats.depth = known_depth;
  } else {
    result.status = SolveStatus::Unknown;
    result.rb_lower = lower_ar + 1;
    result.rb_upper = upper_ar + 1;
  }
  return finish(result);
}

int lower_bound_from_construction(const WheelGraph& g, const ThetaPattern& p) {
  auto built = construction_for(g, p);
  if (!built)
    throw ParameterError("no grouped construction applies to " + p.name() + " in W_" + std::to_string(g.d()) + "(" +
                         std::to_string(g.s()) + ")");
  if (find_rainbow(*built, p)) throw VerificationError("construction has a rainbow " + p.name());
  return built->color_count() + 1;
}

SolverResult probe_open_value(const WheelGraph& g, const ThetaPattern& p, SolverBudget budget) {
  if (auto f = rb_formula(g.d(), g.s(), p); f && f->kind != ValueKind::LowerBound)
    if (budget.ceiling_rb == 0 || f->value < budget.ceiling_rb) budget.ceiling_rb = f->value;
  return solve_exact(g, p, budget);
}

}  // namespace wheelrb
