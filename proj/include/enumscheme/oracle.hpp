#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "enumscheme/bignat.hpp"
#include "enumscheme/permutation.hpp"
#include "enumscheme/scheme.hpp"

namespace enumscheme {

/// Thrown when a brute-force request exceeds its guard cap.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBruteCap = 10;

/// Walks the pattern-avoidance tree: every avoider of length <= n_max is
/// visited exactly once. Avoidance propagates upward to parents, so pruning
/// non-avoiding children is sound, and a child can only pick up a pattern
/// occurrence through its new maximum.
template <typename Visit>
inline void for_each_avoider(const Basis& b, int n_max, Visit visit) {
  std::vector<detail::PatternScaffold> scaffolds;
  for (const auto& p : b.patterns()) scaffolds.emplace_back(p);

  auto rec = [&](auto&& self, const Permutation& pi) -> void {
    visit(pi);
    if (pi.size() == n_max) return;
    for (int j = 1; j <= pi.size() + 1; ++j) {
      std::vector<int> vals;
      vals.reserve(static_cast<std::size_t>(pi.size() + 1));
      for (int i = 1; i < j; ++i) vals.push_back(pi.at(i));
      vals.push_back(pi.size() + 1);
      for (int i = j; i <= pi.size(); ++i) vals.push_back(pi.at(i));
      bool hit = false;
      for (const auto& sc : scaffolds) {
        if (detail::embeds(vals, sc, j - 1)) {
          hit = true;
          break;
        }
      }
      if (!hit) self(self, Permutation(std::move(vals)));
    }
  };
  rec(rec, Permutation());
}

/// Exact avoider counts for n = 0..n_max by avoidance-tree traversal.
inline std::vector<BigNat> brute_sequence(const Basis& b, int n_max,
                                          int cap = kDefaultBruteCap) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (n_max > cap)
    throw resource_limit_error("brute-force request n=" + std::to_string(n_max) +
                               " exceeds cap " + std::to_string(cap));
  std::vector<BigNat> counts(static_cast<std::size_t>(n_max) + 1, 0);
  for_each_avoider(b, n_max,
                   [&](const Permutation& pi) { ++counts[static_cast<std::size_t>(pi.size())]; });
  return counts;
}

inline BigNat brute_avoiders(const Basis& b, int n, int cap = kDefaultBruteCap) {
  return brute_sequence(b, n, cap)[static_cast<std::size_t>(n)];
}

struct CompareRow {
  int n = 0;
  BigNat brute;
  BigNat scheme;
  bool match() const { return brute == scheme; }
};

struct CompareReport {
  std::vector<CompareRow> rows;
  bool all_match = true;
};

/// Scheme counts against ground truth, exact equality required.
inline CompareReport compare_with_oracle(const Basis& b, int n_max, const Scheme& s,
                                         int cap = kDefaultBruteCap) {
  const auto brute = brute_sequence(b, n_max, cap);
  const auto counted = eval_sequence(s, n_max);
  CompareReport report;
  for (int n = 0; n <= n_max; ++n) {
    CompareRow row{n, brute[static_cast<std::size_t>(n)], counted[static_cast<std::size_t>(n)]};
    report.all_match = report.all_match && row.match();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace enumscheme
