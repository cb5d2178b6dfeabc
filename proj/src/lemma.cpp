#include "wheelrb/lemma.hpp"

#include <algorithm>

#include "wheelrb/enumeration.hpp"
#include "wheelrb/errors.hpp"

namespace wheelrb {

const char* to_string(LemmaKind k) {
  switch (k) {
    case LemmaKind::Pair: return "pair";
    case LemmaKind::Triple: return "triple";
    case LemmaKind::Multi: return "multi";
    case LemmaKind::ColorBound: return "colorbound";
  }
  return "?";
}

const char* to_string(PatternClass c) {
  switch (c) {
    case PatternClass::Fan: return "fan";
    case PatternClass::SymmetricNonFan: return "symmetric";
    case PatternClass::Asymmetric: return "asymmetric";
  }
  return "?";
}

PatternClass classify(const ThetaPattern& p) {
  if (p.is_fan()) return PatternClass::Fan;
  return p.is_symmetric() ? PatternClass::SymmetricNonFan : PatternClass::Asymmetric;
}

std::string LemmaBound::text() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

LemmaBound make(LemmaKind k, const ThetaPattern& p, long long num, long long den, int i) {
  if (den == 2 && num % 2 == 0) {
    num /= 2;
    den = 1;
  }
  return LemmaBound{k, num, den, classify(p), i};
}

void require(bool ok, const std::string& why) {
  if (!ok) throw HypothesisError(why);
}

void require_small_pattern(const ThetaPattern& p) {
  require(p.t() >= 4 && p.t() >= p.ell() + 3, "needs t >= max(4, l+3)");
}

std::vector<Embedding> lemma_copies(const WheelGraph& g, const ThetaPattern& p) {
  return single_hub_copies(g, enumerate_oracle(g, p));
}

}  // namespace

LemmaBound pair_bound(int s, const ThetaPattern& p) {
  const long long t = p.t();
  switch (classify(p)) {
    case PatternClass::Fan: return make(LemmaKind::Pair, p, std::max(s * (t - 3), t - 2), 1, 2);
    case PatternClass::SymmetricNonFan: return make(LemmaKind::Pair, p, s * (t - 3), 1, 2);
    case PatternClass::Asymmetric: return make(LemmaKind::Pair, p, 2 * s * (t - 3), 1, 2);
  }
  return {};
}

LemmaBound triple_bound(int s, const ThetaPattern& p) {
  const long long t = p.t();
  if (p.is_symmetric()) return make(LemmaKind::Triple, p, std::max(s * (t - 2), t - 1), 1, 3);
  return make(LemmaKind::Triple, p, std::max(2 * s * (t - 2), 2 * (t - 1)), 1, 3);
}

LemmaBound multi_bound(int s, const ThetaPattern& p, int i) {
  const long long t = p.t();
  if (p.is_fan() && s == 1) return make(LemmaKind::Multi, p, (t - 1) * i, 2, i);
  if (!p.is_symmetric()) return make(LemmaKind::Multi, p, s * (t - 2) * i, 1, i);
  return make(LemmaKind::Multi, p, s * (t - 2) * i, 2, i);
}

LemmaBound color_bound(int s, const ThetaPattern& p, int i) {
  const long long t = p.t();
  require_small_pattern(p);
  if (i <= 1) return make(LemmaKind::ColorBound, p, 0, 1, i);
  if (s == 1) {
    if (p.is_fan()) {
      if (i == 2) return make(LemmaKind::ColorBound, p, t - 2, 1, i);
      if (i == 3) return make(LemmaKind::ColorBound, p, t - 1, 1, i);
      return make(LemmaKind::ColorBound, p, (t - 1) * i, 2, i);
    }
    const long long beta = p.multiplicity();
    if (i == 2) return make(LemmaKind::ColorBound, p, beta * (t - 3), 1, i);
    if (i == 3) return make(LemmaKind::ColorBound, p, beta * (t - 1), 1, i);
    return make(LemmaKind::ColorBound, p, beta * (t - 2) * i, 2, i);
  }
  require(p.is_fan() && ((s == 2 && t >= 6) || (s >= 3 && t >= 7)),
          "color-class bounds in W_d(s), s >= 2, cover fans with s = 2, t >= 6 or s >= 3, t >= 7 only");
  if (i == 2) return make(LemmaKind::ColorBound, p, s * (t - 3), 1, i);
  if (i == 3) return make(LemmaKind::ColorBound, p, s * (t - 2), 1, i);
  return make(LemmaKind::ColorBound, p, s * (t - 2) * i, 2, i);
}

LemmaReport verify_pair_lemma(int d, int s, const ThetaPattern& p) {
  require_small_pattern(p);
  require(d >= 2 * p.t() - 3, "needs d >= 2t-3");
  WheelGraph g(d, s);
  const int n = g.edge_count() + 1;
  std::vector<int> together(static_cast<std::size_t>(n) * n, 0);
  for (const auto& copy : lemma_copies(g, p))
    for (std::size_t x = 0; x < copy.edges.size(); ++x)
      for (std::size_t y = x + 1; y < copy.edges.size(); ++y) ++together[copy.edges[x] * n + copy.edges[y]];

  LemmaReport r{d, s, p, pair_bound(s, p)};
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ++r.subsets_checked;
      if (together[a * n + b] > r.max_observed || r.witness.empty()) {
        r.max_observed = together[a * n + b];
        r.witness = {a, b};
      }
    }
  r.holds = r.bound.admits(r.max_observed);
  return r;
}

LemmaReport verify_triple_lemma(int d, int s, const ThetaPattern& p) {
  require_small_pattern(p);
  require(d >= 3 * p.t() - 5, "needs d >= 3t-5");
  WheelGraph g(d, s);
  const std::size_t n = g.edge_count() + 1;
  std::vector<int> two(n * n, 0);
  std::vector<int> three(n * n * n, 0);
  for (const auto& copy : lemma_copies(g, p)) {
    const auto& e = copy.edges;
    for (std::size_t x = 0; x < e.size(); ++x)
      for (std::size_t y = x + 1; y < e.size(); ++y) {
        ++two[e[x] * n + e[y]];
        for (std::size_t z = y + 1; z < e.size(); ++z) ++three[(e[x] * n + e[y]) * n + e[z]];
      }
  }

  // Copies meeting at least two of {a,b,c}: sum over the three pairs, minus
  // twice the copies holding all three (counted once per pair).
  LemmaReport r{d, s, p, triple_bound(s, p)};
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        ++r.subsets_checked;
        long long q = two[a * n + b] + two[a * n + c] + two[b * n + c] - 2LL * three[(a * n + b) * n + c];
        if (q > r.max_observed || r.witness.empty()) {
          r.max_observed = q;
          r.witness = {int(a), int(b), int(c)};
        }
      }
  r.holds = r.bound.admits(r.max_observed);
  return r;
}

namespace {

// Depth-first walk over i-subsets with running per-copy hit counts.
struct SubsetSweep {
  std::vector<std::vector<int>> copies_of;  // edge id -> copy indices
  std::vector<int> hits;
  std::vector<int> chosen;
  int covered = 0;
  long long visited = 0;
  long long best = -1;
  std::vector<int> best_set;

  void add(int edge) {
    chosen.push_back(edge);
    for (int c : copies_of[edge])
      if (++hits[c] == 2) ++covered;
  }
  void remove(int edge) {
    for (int c : copies_of[edge])
      if (hits[c]-- == 2) --covered;
    chosen.pop_back();
  }

  void walk(const std::vector<int>& pool, std::size_t from, int remaining) {
    if (remaining == 0) {
      ++visited;
      if (covered > best) {
        best = covered;
        best_set = chosen;
        std::sort(best_set.begin(), best_set.end());
      }
      return;
    }
    for (std::size_t k = from; k + remaining <= pool.size(); ++k) {
      add(pool[k]);
      walk(pool, k + 1, remaining - 1);
      remove(pool[k]);
    }
  }
};

}  // namespace

LemmaReport verify_multi_lemma(int d, int s, const ThetaPattern& p, int i) {
  require(i >= 4, "needs i >= 4");
  require(p.t() >= p.ell() + 3, "needs t >= l+3");
  require(d >= p.t() - 1, "needs d >= t-1");
  WheelGraph g(d, s);
  auto copies = lemma_copies(g, p);

  SubsetSweep sweep;
  sweep.copies_of.assign(g.edge_count() + 1, {});
  for (std::size_t c = 0; c < copies.size(); ++c)
    for (int id : copies[c].edges) sweep.copies_of[id].push_back(static_cast<int>(c));
  sweep.hits.assign(copies.size(), 0);

  // Subsets holding spoke(1,1) = edge 1, plus the rest of the edge set.
  std::vector<int> pool;
  for (int id = 2; id <= g.edge_count(); ++id) pool.push_back(id);
  sweep.add(1);
  sweep.walk(pool, 0, i - 1);
  sweep.remove(1);

  // All-rim subsets holding rim(1).
  const int first_rim = g.spoke_count() + 1;
  pool.clear();
  for (int id = first_rim + 1; id <= g.edge_count(); ++id) pool.push_back(id);
  if (static_cast<int>(pool.size()) >= i - 1) {
    sweep.add(first_rim);
    sweep.walk(pool, 0, i - 1);
    sweep.remove(first_rim);
  }

  LemmaReport r{d, s, p, multi_bound(s, p, i)};
  r.max_observed = std::max(0LL, sweep.best);
  r.witness = sweep.best_set;
  r.subsets_checked = sweep.visited;
  r.holds = r.bound.admits(r.max_observed);
  return r;
}

LemmaReport verify_color_bounds(const EdgeColoring& c, const ThetaPattern& p) {
  const WheelGraph& g = c.host();
  require_small_pattern(p);
  require(g.d() >= 3 * p.t() - 5, "needs d >= 3t-5");
  color_bound(g.s(), p, 2);  // hypothesis check for (s, p)

  auto copies = lemma_copies(g, p);
  LemmaReport r{g.d(), g.s(), p, color_bound(g.s(), p, 1)};
  // Tightest color: largest p - bound, compared as fractions over den.
  long long best_excess = 0, best_den = 1;
  bool first = true;
  for (int color : c.colors()) {
    const int size = static_cast<int>(c.edges_of(color).size());
    auto stat = p_statistic(c, copies, color);
    ColorBoundEntry entry{color, size, stat.p, color_bound(g.s(), p, size)};
    ++r.subsets_checked;
    if (!entry.bound.admits(entry.p)) r.holds = false;
    long long excess = entry.p * entry.bound.den - entry.bound.num;
    if (first || excess * best_den > best_excess * entry.bound.den) {
      first = false;
      best_excess = excess;
      best_den = entry.bound.den;
      r.bound = entry.bound;
      r.max_observed = entry.p;
      r.witness = c.edges_of(color);
    }
    r.per_color.push_back(entry);
  }
  return r;
}

std::vector<EdgeId> consecutive_spokes(const WheelGraph& g, int hub, int start, int count) {
  std::vector<EdgeId> out;
  for (int k = 0; k < count; ++k) out.push_back(EdgeId::spoke(hub, g.wrap(start + k)));
  return out;
}

std::vector<EdgeId> consecutive_rims(const WheelGraph& g, int start, int count) {
  std::vector<EdgeId> out;
  for (int k = 0; k < count; ++k) out.push_back(EdgeId::rim(g.wrap(start + k)));
  return out;
}

int copies_hitting(const WheelGraph& g, const ThetaPattern& p, const std::vector<EdgeId>& edges, int min_hits,
                   CopyScope scope) {
  std::vector<int> ids;
  for (const auto& e : edges) ids.push_back(g.linearize(e));
  auto copies = enumerate_oracle(g, p);
  if (scope == CopyScope::SingleHub) copies = single_hub_copies(g, copies);
  return count_copies_hitting(copies, ids, min_hits);
}

}  // namespace wheelrb
