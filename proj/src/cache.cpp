#include "wheelrb/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "wheelrb/errors.hpp"

namespace wheelrb {

namespace {

using nlohmann::json;

json key_of(const WheelGraph& g, const ThetaPattern& p) {
  return json{{"d", g.d()}, {"s", g.s()}, {"t", p.t()},
              {"chords", std::vector<int>(p.chords().begin(), p.chords().end())}};
}

bool same_key(const json& rec, const json& key) {
  for (const auto& [k, v] : key.items())
    if (!rec.contains(k) || rec[k] != v) return false;
  return true;
}

}  // namespace

std::string checksum(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SolveCache::SolveCache(std::filesystem::path file) : file_(std::move(file)) {}

std::filesystem::path SolveCache::default_path() {
  if (const char* dir = std::getenv("WHEELRB_CACHE_DIR"); dir && *dir)
    return std::filesystem::path(dir) / "solve_cache.ndjson";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "wheelrb" / "solve_cache.ndjson";
  return std::filesystem::path(".wheelrb-cache") / "solve_cache.ndjson";
}

void SolveCache::load() {
  if (loaded_) return;
  loaded_ = true;
  std::ifstream in(file_);
  if (!in) return;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    auto warn = [&](const std::string& why) {
      warnings_.push_back(file_.string() + ":" + std::to_string(n) + ": ignoring cache record: " + why);
    };
    json wrapper = json::parse(line, nullptr, false);
    if (wrapper.is_discarded() || !wrapper.is_object() || !wrapper.contains("record") ||
        !wrapper.contains("checksum") || !wrapper["checksum"].is_string()) {
      warn("unparsable line");
      continue;
    }
    const std::string body = wrapper["record"].dump();
    if (checksum(body) != wrapper["checksum"].get<std::string>()) {
      warn("checksum mismatch");
      continue;
    }
    lines_.push_back(body);
  }
}

std::optional<SolverResult> SolveCache::lookup(const WheelGraph& g, const ThetaPattern& p) {
  load();
  const json key = key_of(g, p);
  for (const auto& body : lines_) {
    json rec = json::parse(body);
    if (!same_key(rec, key)) continue;
    try {
      std::vector<int> table = rec.at("witness").get<std::vector<int>>();
      table.insert(table.begin(), 0);
      EdgeColoring witness(g, table);
      const int ar = rec.at("ar").get<int>();
      if (witness.color_count() != ar) throw Error("witness uses " + std::to_string(witness.color_count()) + " colors");
      if (find_rainbow(witness, p)) throw Error("witness has a rainbow " + p.name());
      SolverResult r;
      r.status = SolveStatus::Exact;
      r.ar_value = ar;
      r.rb_value = r.rb_lower = r.rb_upper = ar + 1;
      r.witness = std::move(witness);
      r.stats.depth = g.edge_count() - ar;
      r.from_cache = true;
      return r;
    } catch (const std::exception& e) {
      warnings_.push_back(file_.string() + ": ignoring cache record for " + key.dump() + ": " + e.what());
    }
  }
  return std::nullopt;
}

bool SolveCache::store(const WheelGraph& g, const ThetaPattern& p, const SolverResult& r) {
  if (r.status != SolveStatus::Exact || r.uses_ceiling || r.from_cache || !r.witness) return false;
  load();
  json rec = key_of(g, p);
  for (const auto& body : lines_)
    if (same_key(json::parse(body), rec)) return false;
  rec["ar"] = r.ar_value;
  rec["rb"] = r.rb_value;
  const auto& table = r.witness->table();
  rec["witness"] = std::vector<int>(table.begin() + 1, table.end());
  const std::string body = rec.dump();

  std::error_code ec;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path(), ec);
  if (ec) throw IoError("cannot create " + file_.parent_path().string() + ": " + ec.message());
  std::ofstream out(file_, std::ios::app);
  if (!out) throw IoError("cannot write cache file " + file_.string());
  out << json{{"checksum", checksum(body)}, {"record", rec}}.dump() << "\n";
  lines_.push_back(body);
  return true;
}

SolverResult solve_cached(const WheelGraph& g, const ThetaPattern& p, const SolverBudget& budget, SolveCache* cache) {
  if (cache)
    if (auto hit = cache->lookup(g, p)) return *hit;
  auto r = solve_exact(g, p, budget);
  if (cache) cache->store(g, p, r);
  return r;
}

}  // namespace wheelrb
