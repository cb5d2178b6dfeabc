#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wheelrb/solver.hpp"

namespace wheelrb {

/// Exact solver results kept in a newline-delimited JSON file, one
/// {"checksum": ..., "record": {...}} object per line and keyed by
/// (d, s, t, chords). A line whose checksum does not match, that does not
/// parse, or whose witness fails re-verification is skipped with a warning.
class SolveCache {
 public:
  explicit SolveCache(std::filesystem::path file);

  /// $WHEELRB_CACHE_DIR/solve_cache.ndjson, else ~/.cache/wheelrb/solve_cache.ndjson.
  static std::filesystem::path default_path();

  const std::filesystem::path& path() const { return file_; }

  std::optional<SolverResult> lookup(const WheelGraph& g, const ThetaPattern& p);
  /// Appends `r` if it is exact, does not rest on a ceiling and is not
  /// already present. Returns whether a line was written.
  bool store(const WheelGraph& g, const ThetaPattern& p, const SolverResult& r);

  /// Warnings collected while reading, in file order.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void load();

  std::filesystem::path file_;
  bool loaded_ = false;
  std::vector<std::string> lines_;  // validated records, compact JSON
  std::vector<std::string> warnings_;
};

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string checksum(const std::string& bytes);

/// solve_exact behind an optional cache.
SolverResult solve_cached(const WheelGraph& g, const ThetaPattern& p, const SolverBudget& budget, SolveCache* cache);

}  // namespace wheelrb
