#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace enumscheme {

/// Counts of untracked large entries in the gaps around a tracked pattern of
/// length k: component j is the gap before the j-th tracked entry, component
/// k+1 the gap after the last one.
class GapVector {
 public:
  GapVector() : comps_(1, 0) {}

  explicit GapVector(std::vector<int> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("gap vector must have length >= 1");
    for (int c : comps_)
      if (c < 0) throw std::invalid_argument("gap vector components must be >= 0");
  }

  static GapVector zeros(int length) {
    return GapVector(std::vector<int>(static_cast<std::size_t>(length), 0));
  }

  static GapVector unit(int length, int slot) {
    std::vector<int> v(static_cast<std::size_t>(length), 0);
    v.at(static_cast<std::size_t>(slot - 1)) = 1;
    return GapVector(std::move(v));
  }

  int size() const { return static_cast<int>(comps_.size()); }

  /// Component at 1-based slot j.
  int at(int j) const {
    if (j < 1 || j > size()) throw std::invalid_argument("gap slot out of range");
    return comps_[static_cast<std::size_t>(j - 1)];
  }

  int norm() const { return std::accumulate(comps_.begin(), comps_.end(), 0); }

  const std::vector<int>& components() const { return comps_; }

  friend bool operator==(const GapVector& a, const GapVector& b) = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(comps_[i]);
    }
    out += ')';
    return out;
  }

 private:
  std::vector<int> comps_;
};

/// Componentwise a <= b (the product order).
inline bool dominated_by(const GapVector& a, const GapVector& b) {
  if (a.size() != b.size()) return false;
  for (int j = 1; j <= a.size(); ++j)
    if (a.at(j) > b.at(j)) return false;
  return true;
}

/// Norm first, then lexicographic: the scan order of every bounded search.
inline bool graded_lex_less(const GapVector& a, const GapVector& b) {
  if (a.norm() != b.norm()) return a.norm() < b.norm();
  return a.components() < b.components();
}

/// The d_r action on gap vectors: slots r and r+1 merge by addition.
inline GapVector gap_delete(const GapVector& g, int r) {
  if (r < 1 || r > g.size() - 1) throw std::invalid_argument("gap_delete: slot out of range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.size() - 1));
  for (int j = 1; j <= g.size(); ++j) {
    if (j == r) {
      out.push_back(g.at(r) + g.at(r + 1));
      ++j;
    } else {
      out.push_back(g.at(j));
    }
  }
  return GapVector(std::move(out));
}

/// Splits slot j into (i, g_j - 1 - i): one untracked entry of that gap
/// becomes tracked. Norm drops by exactly one.
inline GapVector gap_split(const GapVector& g, int j, int i) {
  if (j < 1 || j > g.size()) throw std::invalid_argument("gap_split: slot out of range");
  if (g.at(j) == 0) throw std::invalid_argument("gap_split: empty gap");
  if (i < 0 || i > g.at(j) - 1) throw std::invalid_argument("gap_split: bad left part");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.size() + 1));
  for (int s = 1; s <= g.size(); ++s) {
    if (s == j) {
      out.push_back(i);
      out.push_back(g.at(j) - 1 - i);
    } else {
      out.push_back(g.at(s));
    }
  }
  return GapVector(std::move(out));
}

/// All vectors of the given length with norm <= max_norm, in graded
/// lexicographic order. A negative bound yields the empty list.
inline std::vector<GapVector> bounded_gap_vectors(int length, int max_norm) {
  std::vector<GapVector> out;
  if (length < 1 || max_norm < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == length - 1) {
      cur[static_cast<std::size_t>(slot)] = remaining;
      out.push_back(GapVector(cur));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  for (int s = 0; s <= max_norm; ++s) rec(rec, 0, s);
  return out;
}

}  // namespace enumscheme
