#include <doctest.h>

#include "wheelrb/extremal.hpp"
#include "wheelrb/formulas.hpp"

using namespace wheelrb;

namespace {

long long slow_floor(long long num, long long d, long long den) {
  long long n = num * d, q = 0;
  if (n >= 0)
    while ((q + 1) * den <= n) ++q;
  else
    while (q * den > n) --q;
  return q;
}

}  // namespace

TEST_CASE("formula examples") {
  auto c5 = rb_formula(10, 1, ThetaPattern::cycle(5));
  REQUIRE(c5);
  CHECK(c5->value == 16);
  CHECK(c5->kind == ValueKind::Exact);
  CHECK(c5->source == FormulaSource::ChordedCycle);

  auto f6 = rb_formula(13, 2, ThetaPattern::fan(6));
  REQUIRE(f6);
  CHECK(f6->value == 35);
  CHECK(f6->source == FormulaSource::FanDoubleHub);

  auto f7 = rb_formula(16, 3, ThetaPattern::fan(7));
  REQUIRE(f7);
  CHECK(f7->value == 61);
  CHECK(f7->source == FormulaSource::FanMultiHub);

  auto up = rb_formula(14, 2, ThetaPattern::fan(5));
  REQUIRE(up);
  CHECK(up->value == 34);
  CHECK(up->kind == ValueKind::UpperBound);

  auto up6 = rb_formula(16, 3, ThetaPattern::fan(6));
  REQUIRE(up6);
  CHECK(up6->value == 56);
  CHECK(up6->kind == ValueKind::UpperBound);

  CHECK_FALSE(rb_formula(8, 1, ThetaPattern::cycle(5)));
  CHECK(rb_formula(7, 1, ThetaPattern::fan(4))->value == 11);
  CHECK(rb_formula(10, 1, ThetaPattern::fan(5))->value == 17);
}

TEST_CASE("domain gates") {
  CHECK_FALSE(rb_formula(9, 1, ThetaPattern::fan(5)));       // d < 3t-5
  CHECK_FALSE(rb_formula(20, 2, ThetaPattern::cycle(6)));    // theta case needs s = 1
  CHECK(rb_formula(20, 1, ThetaPattern(6, {3, 5})).has_value());  // every non-fan has t >= l+4
  CHECK(rb_formula(20, 1, ThetaPattern(6, {4})).has_value());
  CHECK_FALSE(rb_formula(20, 2, ThetaPattern::fan(4)));
  CHECK_FALSE(rb_formula(20, 3, ThetaPattern::fan(5)));
  CHECK_FALSE(rb_formula(4, 2, ThetaPattern::fan(5)));       // upper bound needs d >= 5
  CHECK_FALSE(rb_formula(30, 1, ThetaPattern::cycle(4)));    // literature value, not a formula here
}

TEST_CASE("literature values are external") {
  auto k3 = known_value(5, 1, ThetaPattern::cycle(3));
  REQUIRE(k3);
  CHECK(k3->value == 7);
  CHECK(k3->external);
  CHECK(std::string(citation(k3->source)).size() > 0);
  CHECK(known_value(6, 1, ThetaPattern::cycle(4))->value == 9);
  CHECK(known_value(10, 1, ThetaPattern::cycle(5))->value == 16);
  CHECK(known_value(12, 1, ThetaPattern::cycle(6))->value == 21);
  CHECK_FALSE(known_value(10, 2, ThetaPattern::cycle(5)));
  CHECK_FALSE(known_value(10, 1, ThetaPattern::cycle(7)));
  CHECK_FALSE(known_value(3, 1, ThetaPattern::cycle(4)));
}

TEST_CASE("general cycle bounds are metadata") {
  auto m = cycle_bounds_metadata(10, 5);
  REQUIRE(m);
  CHECK(m->lower == 16);
  CHECK(m->upper == 17);
  CHECK_FALSE(cycle_bounds_metadata(10, 4));
}

TEST_CASE("property: floor_ratio is exact") {
  for (long long num = -7; num <= 40; ++num)
    for (long long d = -30; d <= 60; ++d)
      for (long long den = 1; den <= 17; ++den) CHECK(floor_ratio(num, d, den) == slow_floor(num, d, den));
}

TEST_CASE("property: single-hub fan value is spoke construction + 1") {
  for (int t = 4; t <= 10; ++t)
    for (int d = 3 * t - 5; d <= 6 * t; ++d)
      CHECK(rb_formula(d, 1, ThetaPattern::fan(t))->value == construct_spoke_grouped(d, t, false).colors_used + 1);
}

TEST_CASE("property: chorded-cycle and multi-hub fan values are rim construction + 1") {
  for (int t = 5; t <= 10; ++t)
    for (int d = 3 * t - 5; d <= 5 * t; ++d) {
      const int rim1 = construct_rim_grouped(d, 1, t, false).colors_used + 1;
      for (const auto& p : all_patterns(t, t - 4)) {
        auto f = rb_formula(d, 1, p);
        REQUIRE(f);
        CHECK(f->value == rim1);  // independent of where the chords sit
      }
      for (int s = 2; s <= 4; ++s) {
        auto f = rb_formula(d, s, ThetaPattern::fan(t));
        bool covered = (s == 2 && t >= 6) || (s >= 3 && t >= 7);
        if (!covered) continue;
        REQUIRE(f);
        CHECK(f->kind == ValueKind::Exact);
        CHECK(f->value == construct_rim_grouped(d, s, t, false).colors_used + 1);
      }
    }
}

TEST_CASE("property: the two open upper bounds are below the general pattern") {
  for (long long k = 1; k <= 200; ++k) {
    CHECK(floor_ratio(33, 14 * k, 14) + 1 < floor_ratio(5, 14 * k, 2) + 1);
    CHECK(floor_ratio(55, 16 * k, 16) + 1 < floor_ratio(11, 16 * k, 3) + 1);
  }
}

TEST_CASE("names") {
  CHECK(std::string(to_string(FormulaSource::FanSingleHub)) == "fan_single_hub");
  CHECK(std::string(to_string(ValueKind::UpperBound)) == "upper_bound");
}
