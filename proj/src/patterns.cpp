#include "wheelrb/patterns.hpp"

#include <algorithm>
#include <charconv>

#include "wheelrb/errors.hpp"

namespace wheelrb {

ThetaPattern::ThetaPattern(int t, std::vector<int> chords) : t_(t), chords_(std::move(chords)) {
  if (t_ < 3) throw ParameterError("pattern needs t >= 3, got t=" + std::to_string(t_));
  for (std::size_t j = 0; j < chords_.size(); ++j) {
    int c = chords_[j];
    if (c <= 2 || c >= t_)
      throw ParameterError("chord endpoint " + std::to_string(c) + " outside (2, " + std::to_string(t_) + ")");
    if (j > 0 && chords_[j - 1] >= c) throw ParameterError("chords must be strictly increasing");
  }
}

ThetaPattern ThetaPattern::fan(int t) {
  if (t < 3) throw ParameterError("fan needs t >= 3, got t=" + std::to_string(t));
  std::vector<int> chords;
  for (int i = 3; i < t; ++i) chords.push_back(i);
  return ThetaPattern(t, std::move(chords));
}

ThetaPattern ThetaPattern::cycle(int t) { return ThetaPattern(t, {}); }

std::vector<int> ThetaPattern::chord_vector() const {
  std::vector<int> x{2};
  x.insert(x.end(), chords_.begin(), chords_.end());
  x.push_back(t_);
  return x;
}

bool ThetaPattern::is_symmetric() const {
  const int l = ell();
  for (int j = 0; j < l; ++j)
    if (chords_[j] + chords_[l - 1 - j] != t_ + 2) return false;
  return true;
}

int ThetaPattern::reflect(int i) const {
  int r = (t_ + 2 - i) % t_;
  return r <= 0 ? r + t_ : r;
}

ThetaPattern ThetaPattern::reversed() const {
  std::vector<int> chords;
  for (int c : chords_) chords.push_back(reflect(c));
  std::sort(chords.begin(), chords.end());
  return ThetaPattern(t_, std::move(chords));
}

bool ThetaPattern::joined_to_center(int i) const {
  return i == 2 || i == t_ || std::binary_search(chords_.begin(), chords_.end(), i);
}

std::vector<std::pair<int, int>> ThetaPattern::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < t_; ++i) out.emplace_back(i, i + 1);
  out.emplace_back(1, t_);
  for (int c : chords_) out.emplace_back(1, c);
  return out;
}

std::string ThetaPattern::name() const {
  if (is_cycle()) return "C" + std::to_string(t_);
  if (is_fan()) return "F" + std::to_string(t_);
  std::string s = "theta(" + std::to_string(t_) + ";";
  for (std::size_t j = 0; j < chords_.size(); ++j) s += (j ? "," : "") + std::to_string(chords_[j]);
  return s + ")";
}

bool is_symmetric(const ThetaPattern& p) { return p.is_symmetric(); }
int multiplicity(const ThetaPattern& p) { return p.multiplicity(); }

std::vector<int> parse_chords(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw ParameterError("bad chord list '" + text + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::vector<ThetaPattern> all_patterns(int t, int max_ell) {
  std::vector<ThetaPattern> out;
  const int n = t - 3;  // candidate endpoints 3 .. t-1
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) > max_ell) continue;
    std::vector<int> chords;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) chords.push_back(b + 3);
    out.emplace_back(t, std::move(chords));
  }
  std::sort(out.begin(), out.end(), [](const ThetaPattern& a, const ThetaPattern& b) {
    if (a.ell() != b.ell()) return a.ell() < b.ell();
    return std::lexicographical_compare(a.chords().begin(), a.chords().end(), b.chords().begin(),
                                        b.chords().end());
  });
  return out;
}

}  // namespace wheelrb
