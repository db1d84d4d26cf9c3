#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumscheme/gap_vector.hpp"

namespace enumscheme {

/// The subset of `vs` minimal under the product order (an antichain whose
/// up-closure equals that of `vs`). Duplicates collapse.
inline std::vector<GapVector> minimal_elements(std::vector<GapVector> vs) {
  std::sort(vs.begin(), vs.end(), graded_lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<GapVector> out;
  for (const auto& v : vs) {
    bool dominated = false;
    for (const auto& m : out) {
      if (dominated_by(m, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(v);
  }
  return out;
}

/// A downward-closed set of gap vectors of a fixed dimension, represented by
/// the antichain of its minimal excluded vectors. An empty excluded basis is
/// the full ideal.
class GapIdeal {
 public:
  GapIdeal() : dimension_(1) {}

  GapIdeal(int dimension, std::vector<GapVector> excluded_basis)
      : dimension_(dimension) {
    if (dimension_ < 1) throw std::invalid_argument("gap ideal dimension must be >= 1");
    for (const auto& v : excluded_basis)
      if (v.size() != dimension_)
        throw std::invalid_argument("gap ideal basis vector has wrong dimension");
    excluded_ = minimal_elements(std::move(excluded_basis));
  }

  static GapIdeal full(int dimension) { return GapIdeal(dimension, {}); }

  int dimension() const { return dimension_; }
  const std::vector<GapVector>& excluded_basis() const { return excluded_; }

  /// True iff no excluded-basis vector is componentwise <= g.
  bool member(const GapVector& g) const {
    if (g.size() != dimension_) throw std::invalid_argument("gap ideal dimension mismatch");
    for (const auto& b : excluded_)
      if (dominated_by(b, g)) return false;
    return true;
  }

  friend bool operator==(const GapIdeal& a, const GapIdeal& b) = default;

  /// Renders as Av(...) over the excluded basis, e.g. "Av((0,2,0))".
  std::string str() const {
    std::string out = "Av(";
    for (std::size_t i = 0; i < excluded_.size(); ++i) {
      if (i) out += ',';
      out += excluded_[i].str();
    }
    out += ')';
    return out;
  }

 private:
  int dimension_;
  std::vector<GapVector> excluded_;  // antichain in graded lex order
};

inline bool ideal_member(const GapVector& g, const GapIdeal& ideal) {
  return ideal.member(g);
}

}  // namespace enumscheme
