#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelrb/cache.hpp"
#include "wheelrb/formulas.hpp"
#include "wheelrb/json_io.hpp"
#include "wheelrb/solver.hpp"

namespace wheelrb {

struct TableOptions {
  bool run_solver = true;
  SolverBudget budget{-1, 10.0, 0, false};  // per row
  SolveCache* cache = nullptr;
};

struct TableRow {
  int d = 0;
  int s = 0;
  ThetaPattern pattern = ThetaPattern::cycle(3);
  std::optional<FormulaValue> formula;
  std::optional<int> construction_lb;
  std::optional<SolverResult> solver;
  /// Every available pair of values is consistent: lb <= solver, solver
  /// equal to an exact formula / at most an upper bound, lb <= formula.
  bool agree = true;
};

/// One row per (d, s, pattern), d outermost, patterns innermost. Rows whose
/// pattern has more vertices than W_d(s) are skipped.
std::vector<TableRow> emit_table(const std::vector<int>& d_range, const std::vector<int>& s_range,
                                 const std::vector<ThetaPattern>& patterns, const TableOptions& options = {});

/// Header d,s,t,chords,formula,kind,construction_lb,solver,agree. chords are
/// ';'-joined; an unfinished solver cell reads "lo..hi".
std::string table_to_csv(const std::vector<TableRow>& rows);
Json table_to_json(const std::vector<TableRow>& rows);

}  // namespace wheelrb
