#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumscheme/oracle.hpp"
#include "enumscheme/permutation.hpp"

namespace enumscheme {

inline constexpr int kDefaultSimpleCap = 9;
inline constexpr int kDefaultSbMax = 6;

/// The finitely-labeled-generating-tree criterion: the class must omit a
/// child of an increasing permutation and a child of a decreasing one. Any
/// omitted child shrinks to a witness over a monotone host of length at most
/// ||B||_inf, so the scan below decides each flag.
struct FinlabelFlags {
  bool omits_increasing_child = false;
  bool omits_decreasing_child = false;
  bool applicable() const { return omits_increasing_child && omits_decreasing_child; }
};

inline FinlabelFlags finlabel_applicable(const Basis& b) {
  if (b.empty()) throw std::invalid_argument("finlabel test needs a non-empty basis");
  auto omits_child_of = [&](bool increasing) {
    for (int m = 0; m <= b.max_pattern_length(); ++m) {
      const Permutation base =
          increasing ? Permutation::identity(m) : Permutation::decreasing(m);
      for (const auto& child : children(base))
        if (!avoids_all(child, b)) return true;
    }
    return false;
  };
  return FinlabelFlags{omits_child_of(true), omits_child_of(false)};
}

/// Visits the basis of the k-th slot-bounded class: every length-(2k+1)
/// permutation whose odd positions carry {k+1..2k+1} and even positions
/// carry {1..k}. There are (k+1)! * k! of them.
template <typename Visit>
inline void for_each_slot_bounded_basis(int k, Visit visit) {
  if (k < 1) throw std::invalid_argument("slot-bounded index must be >= 1");
  std::vector<int> big(static_cast<std::size_t>(k + 1));
  std::vector<int> small(static_cast<std::size_t>(k));
  for (int i = 0; i <= k; ++i) big[static_cast<std::size_t>(i)] = k + 1 + i;
  for (int i = 0; i < k; ++i) small[static_cast<std::size_t>(i)] = i + 1;

  std::vector<int> vals(static_cast<std::size_t>(2 * k + 1));
  do {
    std::vector<int> small_arr = small;
    do {
      for (int i = 0; i <= k; ++i) vals[static_cast<std::size_t>(2 * i)] = big[static_cast<std::size_t>(i)];
      for (int i = 0; i < k; ++i) vals[static_cast<std::size_t>(2 * i + 1)] = small_arr[static_cast<std::size_t>(i)];
      if (!visit(Permutation(vals))) return;
    } while (std::next_permutation(small_arr.begin(), small_arr.end()));
  } while (std::next_permutation(big.begin(), big.end()));
}

inline std::vector<Permutation> slot_bounded_basis(int k) {
  std::vector<Permutation> out;
  for_each_slot_bounded_basis(k, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

/// Regular(k) iff Av(B) is a subclass of the k-th slot-bounded class, i.e.
/// every member of that class's basis contains some pattern of B. A miss up
/// to k_max is only "not within k_max": no stopping bound exists.
struct InsertionVerdict {
  std::optional<int> regular_k;
  int k_max = 0;
  bool regular() const { return regular_k.has_value(); }
};

inline InsertionVerdict insertion_regular(const Basis& b, int k_max = kDefaultSbMax) {
  for (int k = 1; k <= k_max; ++k) {
    bool all_contain = true;
    for_each_slot_bounded_basis(k, [&](const Permutation& omega) {
      if (avoids_all(omega, b)) {
        all_contain = false;
        return false;
      }
      return true;
    });
    if (all_contain) return InsertionVerdict{k, k_max};
  }
  return InsertionVerdict{std::nullopt, k_max};
}

/// All simple B-avoiders of length m, through the avoidance tree.
inline std::vector<Permutation> enumerate_simple(const Basis& b, int m,
                                                 int cap = kDefaultSimpleCap) {
  if (m < 1) throw std::invalid_argument("length must be >= 1");
  if (m > cap)
    throw resource_limit_error("simple enumeration at length " + std::to_string(m) +
                               " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> out;
  for_each_avoider(b, m, [&](const Permutation& pi) {
    if (pi.size() == m && is_simple(pi)) out.push_back(pi);
  });
  return out;
}

/// Finiteness semi-decision: two consecutive lengths without simple avoiders
/// prove no longer ones exist (every simple permutation of length n > 2
/// contains one of length n-1 or n-2, and the class is closed downward).
struct SimpleFinitenessVerdict {
  bool finite = false;
  int no_simples_from = 0;            // least scanned m with none of length >= m (when finite)
  std::vector<Permutation> simples;   // exhaustive when finite, else all found up to cap
  int cap = 0;

  int max_simple_length() const {
    return simples.empty() ? 0 : simples.back().size();
  }
};

inline SimpleFinitenessVerdict simple_finiteness(const Basis& b, int cap = kDefaultSimpleCap) {
  if (cap < 5) throw std::invalid_argument("simple finiteness scan needs cap >= 5");
  SimpleFinitenessVerdict v;
  v.cap = cap;
  for (const auto& text : {"1", "12", "21"}) {
    const Permutation p = Permutation::parse(text);
    if (avoids_all(p, b)) v.simples.push_back(p);
  }
  bool prev_empty = false;
  for (int m = 4; m <= cap; ++m) {
    const auto found = enumerate_simple(b, m, cap);
    if (found.empty() && prev_empty) {
      // lengths m-1 and m are both simple-free
      v.finite = true;
      v.no_simples_from = m - 1;
      return v;
    }
    prev_empty = found.empty();
    for (const auto& p : found) v.simples.push_back(p);
  }
  return v;
}

struct TriageVerdict {
  FinlabelFlags finlabel;
  InsertionVerdict insertion;
  SimpleFinitenessVerdict simples;
};

inline TriageVerdict run_triage(const Basis& b, int sb_max = kDefaultSbMax,
                                int simple_cap = kDefaultSimpleCap) {
  return TriageVerdict{finlabel_applicable(b), insertion_regular(b, sb_max),
                       simple_finiteness(b, simple_cap)};
}

inline nlohmann::ordered_json triage_to_json(const TriageVerdict& v) {
  nlohmann::ordered_json out;
  out["finlabel"] = v.finlabel.applicable();
  if (v.insertion.regular())
    out["insertion"] = {{"regular", *v.insertion.regular_k}};
  else
    out["insertion"] = {{"not_within", v.insertion.k_max}};
  nlohmann::ordered_json simples = nlohmann::ordered_json::array();
  for (const auto& p : v.simples.simples) simples.push_back(p.str());
  out["simples"] = {{"finite", v.simples.finite}, {"list", std::move(simples)},
                    {"cap", v.simples.cap}};
  return out;
}

inline std::string triage_table(const TriageVerdict& v) {
  std::string out;
  out += "finitely labeled generating tree:  ";
  out += v.finlabel.applicable() ? "yes" : "no";
  out += " (omits increasing child: ";
  out += v.finlabel.omits_increasing_child ? "yes" : "no";
  out += ", omits decreasing child: ";
  out += v.finlabel.omits_decreasing_child ? "yes" : "no";
  out += ")\n";
  out += "regular insertion encoding:        ";
  if (v.insertion.regular())
    out += "yes, within the slot-bounded class k=" + std::to_string(*v.insertion.regular_k);
  else
    out += "not settled for k <= " + std::to_string(v.insertion.k_max);
  out += "\n";
  out += "simple permutations:               ";
  if (v.simples.finite) {
    out += "finitely many (max length " + std::to_string(v.simples.max_simple_length()) + "):";
  } else {
    out += "inconclusive up to length " + std::to_string(v.simples.cap) + "; found:";
  }
  if (v.simples.simples.empty()) out += " none";
  for (const auto& p : v.simples.simples) out += " " + p.str();
  out += "\n";
  return out;
}

}  // namespace enumscheme
