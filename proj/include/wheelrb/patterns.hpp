#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wheelrb {

/// A t-cycle v_1 ... v_t plus chords v_1 v_i for each i in `chords`.
///
/// The chord vector X = (2, i_1, ..., i_l, t) lists every pattern vertex
/// joined to v_1. l = 0 is the cycle C_t; l = t-3 is the fan F_t.
/// Two patterns are the same iff (t, chords) agree.
class ThetaPattern {
 public:
  ThetaPattern(int t, std::vector<int> chords);

  static ThetaPattern fan(int t);
  static ThetaPattern cycle(int t);

  int t() const { return t_; }
  int ell() const { return static_cast<int>(chords_.size()); }
  std::span<const int> chords() const { return chords_; }
  std::vector<int> chord_vector() const;
  int edge_count() const { return t_ + ell(); }

  bool is_fan() const { return ell() == t_ - 3; }
  bool is_cycle() const { return chords_.empty(); }
  bool is_symmetric() const;
  int multiplicity() const { return is_symmetric() ? 1 : 2; }

  /// Reflection of the boundary cycle fixing v_1: i -> t + 2 - i (mod t).
  int reflect(int i) const;
  /// The same pattern traversed the other way round v_1.
  ThetaPattern reversed() const;

  /// True when v_1 v_i is an edge (i = 2, i = t, or a chord).
  bool joined_to_center(int i) const;
  /// Edges as 1-based pattern vertex pairs: cycle edges, then chords.
  std::vector<std::pair<int, int>> edges() const;

  /// "C5", "F6", "theta(6;3,5)".
  std::string name() const;

  auto operator<=>(const ThetaPattern&) const = default;

 private:
  int t_;
  std::vector<int> chords_;
};

bool is_symmetric(const ThetaPattern& p);
int multiplicity(const ThetaPattern& p);

/// Parses "3,5" into chords; empty string gives no chords.
std::vector<int> parse_chords(const std::string& text);

/// All chord sets for a given t with at most `max_ell` chords, ordered by
/// (ell, chords).
std::vector<ThetaPattern> all_patterns(int t, int max_ell);

}  // namespace wheelrb
