#include "wheelrb/json_io.hpp"

#include "wheelrb/errors.hpp"

namespace wheelrb {

namespace {

Json int_array(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

[[noreturn]] void schema(const std::string& pointer, const std::string& what) {
  throw SchemaError(pointer + ": " + what, 0, pointer);
}

int read_int(const Json& doc, const std::string& key, const std::string& pointer) {
  if (!doc.contains(key)) schema(pointer + "/" + key, "missing \"" + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) schema(pointer + "/" + key, "expected an integer");
  return v.get<int>();
}

std::vector<int> read_row(const Json& v, std::size_t size, const std::string& pointer) {
  if (!v.is_array()) schema(pointer, "expected an array");
  if (v.size() != size) schema(pointer, "expected " + std::to_string(size) + " entries, got " + std::to_string(v.size()));
  std::vector<int> row;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = pointer + "/" + std::to_string(k);
    if (!v[k].is_number_integer()) schema(at, "expected an integer color");
    long long c = v[k].get<long long>();
    if (c < 1 || c > 2147483647LL) schema(at, "colors must be positive 32-bit integers");
    row.push_back(static_cast<int>(c));
  }
  return row;
}

}  // namespace

Json coloring_to_json(const EdgeColoring& c) {
  Json j;
  j["format"] = kFormatVersion;
  j["d"] = c.host().d();
  j["s"] = c.host().s();
  j["rim"] = int_array(c.rim_row());
  Json spokes = Json::array();
  for (const auto& row : c.spoke_rows()) spokes.push_back(int_array(row));
  j["spokes"] = spokes;
  return j;
}

EdgeColoring coloring_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte, "");
  }
  return coloring_from_json(doc);
}

EdgeColoring coloring_from_json(const Json& doc) {
  if (!doc.is_object()) schema("", "expected an object");
  if (doc.contains("format")) {
    if (!doc["format"].is_number_integer() || doc["format"].get<long long>() != kFormatVersion)
      schema("/format", "unsupported format version " + doc["format"].dump());
  }
  const int d = read_int(doc, "d", "");
  const int s = read_int(doc, "s", "");
  if (d < 3) schema("/d", "d must be at least 3");
  if (s < 1) schema("/s", "s must be at least 1");
  if (!doc.contains("rim")) schema("/rim", "missing \"rim\"");
  if (!doc.contains("spokes")) schema("/spokes", "missing \"spokes\"");
  auto rim = read_row(doc["rim"], d, "/rim");
  const Json& sp = doc["spokes"];
  if (!sp.is_array()) schema("/spokes", "expected an array of rows");
  if (sp.size() != static_cast<std::size_t>(s)) schema("/spokes", "expected " + std::to_string(s) + " rows");
  std::vector<std::vector<int>> spokes;
  for (int a = 0; a < s; ++a) spokes.push_back(read_row(sp[a], d, "/spokes/" + std::to_string(a)));
  return EdgeColoring::from_rows(WheelGraph(d, s), rim, spokes);
}

Json wheel_to_json(const WheelGraph& g) {
  Json j;
  j["format"] = kFormatVersion;
  j["d"] = g.d();
  j["s"] = g.s();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["spokes"] = g.spoke_count();
  j["rim_edges"] = g.d();
  Json edges = Json::array();
  for (int id = 1; id <= g.edge_count(); ++id) {
    auto [x, y] = g.endpoints(id);
    edges.push_back(Json{{"id", id},
                         {"edge", to_string(g.unlinearize(id))},
                         {"ends", {to_string(g.vertex_at(x)), to_string(g.vertex_at(y))}}});
  }
  j["edge_list"] = edges;
  return j;
}

Json pattern_to_json(const ThetaPattern& p) {
  Json j;
  j["name"] = p.name();
  j["t"] = p.t();
  j["chords"] = int_array(std::vector<int>(p.chords().begin(), p.chords().end()));
  j["ell"] = p.ell();
  j["symmetric"] = p.is_symmetric();
  j["multiplicity"] = p.multiplicity();
  return j;
}

Json embeddings_to_json(const WheelGraph& g, const ThetaPattern& p, const std::vector<Embedding>& copies) {
  Json j;
  j["format"] = kFormatVersion;
  j["d"] = g.d();
  j["s"] = g.s();
  j["pattern"] = pattern_to_json(p);
  j["count"] = copies.size();
  Json list = Json::array();
  for (const auto& e : copies) list.push_back(int_array(e.edges));
  j["embeddings"] = list;
  return j;
}

Json lemma_report_to_json(const LemmaReport& r) {
  Json j;
  j["format"] = kFormatVersion;
  j["lemma"] = to_string(r.bound.lemma);
  j["d"] = r.d;
  j["s"] = r.s;
  j["pattern"] = pattern_to_json(r.pattern);
  j["branch"] = to_string(r.bound.branch);
  if (r.bound.lemma == LemmaKind::Multi) j["i"] = r.bound.subset_size;
  j["bound"] = r.bound.text();
  j["max_observed"] = r.max_observed;
  j["witness"] = int_array(r.witness);
  j["subsets_checked"] = r.subsets_checked;
  j["holds"] = r.holds;
  if (!r.per_color.empty()) {
    Json colors = Json::array();
    for (const auto& e : r.per_color)
      colors.push_back(Json{{"color", e.color},
                            {"class_size", e.class_size},
                            {"p", e.p},
                            {"bound", e.bound.text()},
                            {"holds", e.bound.admits(e.p)}});
    j["per_color"] = colors;
  }
  return j;
}

Json construction_to_json(const ConstructionReport& r) {
  Json j;
  j["format"] = kFormatVersion;
  j["colors_used"] = r.colors_used;
  j["formula_value"] = r.formula_value;
  j["group_width"] = r.group_width;
  j["q"] = r.group_count;
  j["p"] = r.last_group_size;
  j["branch"] = r.full_last_group() ? "full_last_group" : "short_last_group";
  Json targets = Json::array();
  for (const auto& p : r.verified_patterns) targets.push_back(p.name());
  j["verified_rainbow_free"] = targets;
  j["coloring"] = coloring_to_json(r.coloring);
  return j;
}

Json solver_result_to_json(const WheelGraph& g, const ThetaPattern& p, const SolverResult& r) {
  Json j;
  j["format"] = kFormatVersion;
  j["d"] = g.d();
  j["s"] = g.s();
  j["pattern"] = pattern_to_json(p);
  j["status"] = to_string(r.status);
  if (r.status == SolveStatus::Exact) {
    j["rb"] = r.rb_value;
    j["ar"] = r.ar_value;
  } else {
    j["rb"] = nullptr;
    j["ar"] = nullptr;
  }
  j["rb_lower"] = r.rb_lower;
  j["rb_upper"] = r.rb_upper;
  j["uses_ceiling"] = r.uses_ceiling;
  j["from_cache"] = r.from_cache;
  j["nodes"] = r.stats.nodes;
  j["depth"] = r.stats.depth;
  j["witness"] = r.witness ? coloring_to_json(*r.witness) : Json(nullptr);
  return j;
}

Json verify_to_json(const EdgeColoring& c, const ThetaPattern& p) {
  Json j;
  j["format"] = kFormatVersion;
  j["d"] = c.host().d();
  j["s"] = c.host().s();
  j["pattern"] = pattern_to_json(p);
  j["colors"] = c.color_count();
  auto witness = find_rainbow(c, p);
  j["rainbow"] = witness.has_value();
  j["rainbow_witness"] = witness ? int_array(witness->embedding.edges) : Json(nullptr);
  Json hist = Json::object();
  for (const auto& [size, colors] : c.histogram()) hist[std::to_string(size)] = int_array(colors);
  j["A"] = hist;
  try {
    j["color_bounds"] = lemma_report_to_json(verify_color_bounds(c, p));
  } catch (const HypothesisError& e) {
    j["color_bounds"] = Json{{"skipped", e.what()}};
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wheelrb
