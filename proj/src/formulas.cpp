#include "wheelrb/formulas.hpp"

namespace wheelrb {

const char* to_string(FormulaSource s) {
  switch (s) {
    case FormulaSource::FanSingleHub: return "fan_single_hub";
    case FormulaSource::FanDoubleHub: return "fan_double_hub";
    case FormulaSource::FanMultiHub: return "fan_multi_hub";
    case FormulaSource::ChordedCycle: return "chorded_cycle";
    case FormulaSource::DoubleHubF5Upper: return "double_hub_f5_upper";
    case FormulaSource::TripleHubF6Upper: return "triple_hub_f6_upper";
    case FormulaSource::KnownTriangle: return "known_c3";
    case FormulaSource::KnownC4: return "known_c4";
    case FormulaSource::KnownC5: return "known_c5";
    case FormulaSource::KnownC6: return "known_c6";
  }
  return "?";
}

const char* to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Exact: return "exact";
    case ValueKind::UpperBound: return "upper_bound";
    case ValueKind::LowerBound: return "lower_bound";
  }
  return "?";
}

const char* citation(FormulaSource s) {
  switch (s) {
    case FormulaSource::KnownTriangle: return "Qin, Lei, Li (2020)";
    case FormulaSource::KnownC4:
    case FormulaSource::KnownC5: return "Hornak, Jendrol', Schiermeyer, Sotak (2015)";
    case FormulaSource::KnownC6: return "Lan, Shi, Song (2019)";
    default: return "";
  }
}

long long floor_ratio(long long num, long long d, long long den) {
  long long n = num * d;
  long long q = n / den;
  if ((n % den != 0) && ((n < 0) != (den < 0))) --q;
  return q;
}

std::optional<FormulaValue> rb_formula(int d, int s, const ThetaPattern& p) {
  const int t = p.t();
  const int l = p.ell();
  auto exact = [](long long v, FormulaSource src) {
    return FormulaValue{static_cast<int>(v), ValueKind::Exact, src, false};
  };

  if (p.is_fan()) {
    if (s == 2 && t == 5 && d >= 5)
      return FormulaValue{static_cast<int>(floor_ratio(33, d, 14) + 1), ValueKind::UpperBound,
                          FormulaSource::DoubleHubF5Upper, false};
    if (s == 3 && t == 6 && d >= 5)
      return FormulaValue{static_cast<int>(floor_ratio(55, d, 16) + 1), ValueKind::UpperBound,
                          FormulaSource::TripleHubF6Upper, false};
    if (d < 3 * t - 5) return std::nullopt;
    if (s == 1 && t >= 4) return exact(floor_ratio(2 * t - 5, d, t - 2) + 1, FormulaSource::FanSingleHub);
    if (s == 2 && t >= 6) return exact(floor_ratio(3 * t - 10, d, t - 3) + 1, FormulaSource::FanDoubleHub);
    if (s >= 3 && t >= 7)
      return exact(floor_ratio((s + 1) * t - (3 * s + 4), d, t - 3) + 1, FormulaSource::FanMultiHub);
    return std::nullopt;
  }

  if (s == 1 && t >= 5 && t >= l + 4 && d >= 3 * t - 5)
    return exact(floor_ratio(2 * t - 7, d, t - 3) + 1, FormulaSource::ChordedCycle);
  return std::nullopt;
}

std::optional<FormulaValue> known_value(int d, int s, const ThetaPattern& p) {
  if (s != 1 || !p.is_cycle() || d < p.t()) return std::nullopt;
  auto ext = [](long long v, FormulaSource src) {
    return FormulaValue{static_cast<int>(v), ValueKind::Exact, src, true};
  };
  switch (p.t()) {
    case 3: return ext(d + 2, FormulaSource::KnownTriangle);
    case 4: return ext(floor_ratio(4, d, 3) + 1, FormulaSource::KnownC4);
    case 5: return ext(floor_ratio(3, d, 2) + 1, FormulaSource::KnownC5);
    case 6: return ext(floor_ratio(5, d, 3) + 1, FormulaSource::KnownC6);
    default: return std::nullopt;
  }
}

std::optional<CycleBoundsMetadata> cycle_bounds_metadata(int d, int k) {
  if (k < 5 || d < k - 1) return std::nullopt;
  return CycleBoundsMetadata{static_cast<int>(floor_ratio(2 * k - 7, d, k - 3) + 1),
                             static_cast<int>(floor_ratio(2 * k - 5, d, k - 2) + 1)};
}

}  // namespace wheelrb
