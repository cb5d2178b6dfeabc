#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelrb/patterns.hpp"

namespace wheelrb {

enum class FormulaSource {
  FanSingleHub,        // floor((2t-5)d/(t-2)) + 1, s = 1, t >= 4
  FanDoubleHub,        // floor((3t-10)d/(t-3)) + 1, s = 2, t >= 6
  FanMultiHub,         // floor(((s+1)t-(3s+4))d/(t-3)) + 1, s >= 3, t >= 7
  ChordedCycle,        // floor((2t-7)d/(t-3)) + 1, s = 1, t >= max(5, l+4)
  DoubleHubF5Upper,    // floor(33d/14) + 1, upper bound only
  TripleHubF6Upper,    // floor(55d/16) + 1, upper bound only
  KnownTriangle,       // d + 2
  KnownC4,             // floor(4d/3) + 1
  KnownC5,             // floor(3d/2) + 1
  KnownC6,             // floor(5d/3) + 1
};

enum class ValueKind { Exact, UpperBound, LowerBound };

struct FormulaValue {
  int value = 0;
  ValueKind kind = ValueKind::Exact;
  FormulaSource source = FormulaSource::FanSingleHub;
  bool external = false;  // literature value, used only as a cross-check
};

const char* to_string(FormulaSource s);
const char* to_string(ValueKind k);
/// Literature reference for the stored external values; empty otherwise.
const char* citation(FormulaSource s);

/// floor(num * d / den) in exact integer arithmetic.
long long floor_ratio(long long num, long long d, long long den);

/// Closed-form rainbow number of p in W_d(s), or nullopt outside every
/// formula's validity domain. Exact values need d >= 3t-5.
std::optional<FormulaValue> rb_formula(int d, int s, const ThetaPattern& p);

/// Published cycle values in plain wheels (C3..C6), flagged external.
std::optional<FormulaValue> known_value(int d, int s, const ThetaPattern& p);

/// Catalog entry for the general cycle bounds in plain wheels
/// (floor((2k-7)d/(k-3))+1 <= rb <= floor((2k-5)d/(k-2))+1 for d >= k-1,
/// k >= 5). Stored for reference; rb_formula never evaluates it.
struct CycleBoundsMetadata {
  int lower = 0;
  int upper = 0;
};
std::optional<CycleBoundsMetadata> cycle_bounds_metadata(int d, int k);

}  // namespace wheelrb
