#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wheelrb/coloring.hpp"
#include "wheelrb/extremal.hpp"
#include "wheelrb/lemma.hpp"
#include "wheelrb/solver.hpp"

namespace wheelrb {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// {"format": 1, "d": ..., "s": ..., "rim": [...], "spokes": [[...], ...]}.
Json coloring_to_json(const EdgeColoring& c);

/// Parses the coloring format. Syntax errors raise SchemaError carrying the
/// byte offset; structural errors carry the JSON pointer of the bad value.
/// A missing "format" is read as version 1; any other version is rejected.
EdgeColoring coloring_from_json(const std::string& text);
EdgeColoring coloring_from_json(const Json& doc);

Json wheel_to_json(const WheelGraph& g);
Json pattern_to_json(const ThetaPattern& p);
Json embeddings_to_json(const WheelGraph& g, const ThetaPattern& p, const std::vector<Embedding>& copies);
Json lemma_report_to_json(const LemmaReport& r);
Json construction_to_json(const ConstructionReport& r);
Json solver_result_to_json(const WheelGraph& g, const ThetaPattern& p, const SolverResult& r);

/// Rainbow verdict, A_i histogram and (when its hypotheses hold) the
/// color-class bound report for a coloring against p.
Json verify_to_json(const EdgeColoring& c, const ThetaPattern& p);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace wheelrb
