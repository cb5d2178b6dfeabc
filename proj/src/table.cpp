#include "wheelrb/table.hpp"

#include <sstream>

#include "wheelrb/errors.hpp"

namespace wheelrb {

namespace {

bool consistent(const TableRow& row) {
  const auto lb = row.construction_lb;
  const auto& f = row.formula;
  if (lb && f && *lb > f->value) return false;
  if (!row.solver) return true;
  const auto& r = *row.solver;
  const int lo = r.rb_lower, hi = r.rb_upper;
  if (lb && *lb > hi) return false;
  if (!f) return true;
  if (f->kind == ValueKind::Exact) return lo <= f->value && f->value <= hi;
  if (f->kind == ValueKind::UpperBound) return lo <= f->value;
  return hi >= f->value;
}

std::string chords_text(const ThetaPattern& p) {
  std::string out;
  for (int c : p.chords()) {
    if (!out.empty()) out += ';';
    out += std::to_string(c);
  }
  return out;
}

std::string solver_text(const SolverResult& r) {
  if (r.status == SolveStatus::Exact) return std::to_string(r.rb_value);
  return std::to_string(r.rb_lower) + ".." + std::to_string(r.rb_upper);
}

}  // namespace

std::vector<TableRow> emit_table(const std::vector<int>& d_range, const std::vector<int>& s_range,
                                 const std::vector<ThetaPattern>& patterns, const TableOptions& options) {
  std::vector<TableRow> rows;
  for (int d : d_range)
    for (int s : s_range)
      for (const auto& p : patterns) {
        WheelGraph g(d, s);
        if (p.t() > g.vertex_count()) continue;
        TableRow row{d, s, p};
        row.formula = rb_formula(d, s, p);
        try {
          row.construction_lb = lower_bound_from_construction(g, p);
        } catch (const ParameterError&) {
        }
        if (options.run_solver) {
          SolverBudget budget = options.budget;
          // Only upper bounds seed the search; exact values are left for the solver to confirm.
          if (row.formula && row.formula->kind == ValueKind::UpperBound && budget.ceiling_rb == 0)
            budget.ceiling_rb = row.formula->value;
          row.solver = solve_cached(g, p, budget, options.cache);
        }
        row.agree = consistent(row);
        rows.push_back(std::move(row));
      }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "d,s,t,chords,formula,kind,construction_lb,solver,agree\n";
  for (const auto& r : rows) {
    out << r.d << ',' << r.s << ',' << r.pattern.t() << ',' << chords_text(r.pattern) << ',';
    if (r.formula) out << r.formula->value;
    out << ',' << (r.formula ? to_string(r.formula->kind) : "out_of_domain") << ',';
    if (r.construction_lb) out << *r.construction_lb;
    out << ',';
    if (r.solver) out << solver_text(*r.solver);
    out << ',' << (r.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json list = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["d"] = r.d;
    j["s"] = r.s;
    j["t"] = r.pattern.t();
    j["chords"] = std::vector<int>(r.pattern.chords().begin(), r.pattern.chords().end());
    j["pattern"] = r.pattern.name();
    j["formula"] = r.formula ? Json(r.formula->value) : Json(nullptr);
    j["kind"] = r.formula ? to_string(r.formula->kind) : "out_of_domain";
    j["source"] = r.formula ? Json(to_string(r.formula->source)) : Json(nullptr);
    j["construction_lb"] = r.construction_lb ? Json(*r.construction_lb) : Json(nullptr);
    if (r.solver) {
      j["solver"] = r.solver->status == SolveStatus::Exact ? Json(r.solver->rb_value) : Json(nullptr);
      j["solver_status"] = to_string(r.solver->status);
      j["solver_interval"] = {r.solver->rb_lower, r.solver->rb_upper};
    } else {
      j["solver"] = nullptr;
      j["solver_status"] = "skipped";
      j["solver_interval"] = nullptr;
    }
    j["agree"] = r.agree;
    list.push_back(j);
  }
  return Json{{"format", kFormatVersion}, {"rows", list}};
}

}  // namespace wheelrb
