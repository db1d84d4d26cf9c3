#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "enumscheme/bignat.hpp"
#include "enumscheme/reducibility.hpp"

namespace enumscheme {

enum class NodeKind { Expand, Reduce };

/// One state of an enumeration scheme. Expand nodes sum over the B-avoiding
/// children; Reduce nodes delete the entry at position r, guarded by a gap
/// ideal.
struct SchemeNode {
  Permutation perm;
  NodeKind kind = NodeKind::Expand;
  // Expand: the B-avoiding children with their insertion positions, in
  // position order.
  std::vector<std::pair<int, Permutation>> avoiding_children;
  // Reduce:
  int r = 0;
  GapIdeal gaps;

  friend bool operator==(const SchemeNode& a, const SchemeNode& b) = default;
};

/// A finite closed map from permutations to nodes, rooted at the empty
/// permutation, evaluable as an exact counting recurrence for Av(basis).
class Scheme {
 public:
  Scheme() = default;
  Scheme(Basis basis, std::map<Permutation, SchemeNode> nodes)
      : basis_(std::move(basis)), nodes_(std::move(nodes)) {}

  const Basis& basis() const { return basis_; }
  const std::map<Permutation, SchemeNode>& nodes() const { return nodes_; }

  bool has(const Permutation& p) const { return nodes_.count(p) != 0; }

  const SchemeNode& node(const Permutation& p) const {
    auto it = nodes_.find(p);
    if (it == nodes_.end())
      throw std::logic_error("scheme closure violated: missing node " + p.str());
    return it->second;
  }

  friend bool operator==(const Scheme& a, const Scheme& b) = default;

 private:
  Basis basis_;
  std::map<Permutation, SchemeNode> nodes_;  // keyed in length-lex order
};

/// Search failure: the permutations at the depth limit with no reducible
/// entry under the chosen test.
struct Frontier {
  Basis basis;
  int depth = 0;
  std::vector<Permutation> irreducible;  // length-lex order
};

using BuildResult = std::variant<Scheme, Frontier>;

enum class BuildMode { EsPlus, Classic };

/// Breadth-first scheme discovery. Each encountered avoider gets a Reduce
/// node at its first reducible position, an Expand node below the depth
/// limit otherwise. Reduce targets are classified too, so the result is
/// closed. Returns the Frontier instead when some permutation at the depth
/// limit is irreducible.
inline BuildResult build_scheme(const ZsetCounter& z, int max_depth,
                                BuildMode mode = BuildMode::EsPlus) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  std::map<Permutation, SchemeNode> nodes;
  std::set<Permutation> stuck;
  std::deque<Permutation> work{Permutation()};

  while (!work.empty()) {
    const Permutation pi = work.front();
    work.pop_front();
    if (nodes.count(pi) || stuck.count(pi)) continue;

    int found_r = 0;
    for (int r = 1; r <= pi.size(); ++r) {
      const bool ok = mode == BuildMode::EsPlus ? es_plus_reducible(z, pi, r)
                                                : es_reducible(z, pi, r);
      if (ok) {
        found_r = r;
        break;
      }
    }

    SchemeNode node;
    node.perm = pi;
    if (found_r > 0) {
      node.kind = NodeKind::Reduce;
      node.r = found_r;
      node.gaps = mode == BuildMode::EsPlus ? reduction_gap_basis(z, pi, found_r)
                                            : classic_gap_ideal(z, pi);
      work.push_back(delete_at(pi, found_r));
    } else if (pi.size() < max_depth) {
      node.kind = NodeKind::Expand;
      const auto kids = children(pi);
      for (int j = 1; j <= pi.size() + 1; ++j) {
        const Permutation& child = kids[static_cast<std::size_t>(j - 1)];
        if (avoids_all(child, z.basis())) {
          node.avoiding_children.emplace_back(j, child);
          work.push_back(child);
        }
      }
    } else {
      stuck.insert(pi);
      continue;
    }
    nodes.emplace(pi, std::move(node));
  }

  if (!stuck.empty())
    return Frontier{z.basis(), max_depth,
                    std::vector<Permutation>(stuck.begin(), stuck.end())};
  return Scheme(z.basis(), std::move(nodes));
}

inline BuildResult build_scheme(const Basis& b, int max_depth = 6,
                                BuildMode mode = BuildMode::EsPlus) {
  ZsetCounter z(b);
  return build_scheme(z, max_depth, mode);
}

/// Memoized counts keyed by (permutation, gap vector); safe for concurrent
/// evaluation, and transparent: values equal the uncached recurrence.
class CountCache {
 public:
  std::optional<BigNat> get(const Permutation& pi, const GapVector& g) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find({pi.values(), g.components()});
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const Permutation& pi, const GapVector& g, const BigNat& value) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(detail::ZKey{pi.values(), g.components()}, value);
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<detail::ZKey, BigNat, detail::ZKeyHash> map_;
};

/// Evaluates |Z(B; pi; g)| through the scheme. Expansion strictly lowers the
/// norm and reduction strictly shortens the permutation, so the recursion
/// terminates. Pass a null cache for uncached evaluation.
inline BigNat eval_count(const Scheme& s, const Permutation& pi, const GapVector& g,
                         CountCache* cache = nullptr) {
  if (g.size() != pi.size() + 1)
    throw std::invalid_argument("gap vector length must be |pi| + 1");
  if (cache) {
    if (auto hit = cache->get(pi, g)) return *hit;
  }
  const SchemeNode& node = s.node(pi);
  BigNat result = 0;
  if (node.kind == NodeKind::Reduce) {
    if (node.gaps.member(g))
      result = eval_count(s, delete_at(pi, node.r), gap_delete(g, node.r), cache);
  } else if (g.norm() == 0) {
    result = 1;
  } else {
    for (const auto& [j, child] : node.avoiding_children)
      for (int i = 0; i < g.at(j); ++i)
        result += eval_count(s, child, gap_split(g, j, i), cache);
  }
  if (cache) cache->put(pi, g, result);
  return result;
}

/// s_n(B) for n = 0..n_max.
inline std::vector<BigNat> eval_sequence(const Scheme& s, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  CountCache cache;
  std::vector<BigNat> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    out.push_back(eval_count(s, Permutation(), GapVector({n}), &cache));
  return out;
}

/// One more than the longest permutation that still needs expansion.
inline int scheme_depth(const Scheme& s) {
  int longest = 0;
  for (const auto& [perm, node] : s.nodes())
    if (node.kind == NodeKind::Expand) longest = std::max(longest, perm.size());
  return longest + 1;
}

struct SchemeViolation {
  Permutation where;
  std::string message;
};

struct VerifyReport {
  std::vector<SchemeViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Re-derives every node invariant: avoidance, expansion child lists,
/// reducibility with its gap ideal, and closure. Violations are reported,
/// not thrown, so stored schemes can be audited.
inline VerifyReport verify_scheme(const Scheme& s, const ZsetCounter& z) {
  VerifyReport report;
  auto flag = [&](const Permutation& where, std::string msg) {
    report.violations.push_back({where, std::move(msg)});
  };

  if (!s.has(Permutation())) flag(Permutation(), "root is missing");
  for (const auto& [perm, node] : s.nodes()) {
    if (!(node.perm == perm)) {
      flag(perm, "node is keyed under the wrong permutation");
      continue;
    }
    if (!avoids_all(perm, z.basis())) {
      flag(perm, "node permutation contains a basis element");
      continue;
    }
    if (node.kind == NodeKind::Expand) {
      std::vector<std::pair<int, Permutation>> expected;
      const auto kids = children(perm);
      for (int j = 1; j <= perm.size() + 1; ++j)
        if (avoids_all(kids[static_cast<std::size_t>(j - 1)], z.basis()))
          expected.emplace_back(j, kids[static_cast<std::size_t>(j - 1)]);
      if (node.avoiding_children != expected)
        flag(perm, "expand node child list is not the avoiding children");
      for (const auto& [j, child] : node.avoiding_children)
        if (!s.has(child)) flag(perm, "missing child node " + child.str());
    } else {
      if (node.r < 1 || node.r > perm.size()) {
        flag(perm, "reduce position out of range");
        continue;
      }
      if (!es_plus_reducible(z, perm, node.r)) {
        flag(perm, "entry is not extended-reducible");
        continue;
      }
      if (!(node.gaps == reduction_gap_basis(z, perm, node.r)))
        flag(perm, "gap ideal differs from the recomputed basis");
      const Permutation target = delete_at(perm, node.r);
      if (!s.has(target)) flag(perm, "missing reduction target " + target.str());
    }
  }
  return report;
}

inline VerifyReport verify_scheme(const Scheme& s) {
  ZsetCounter z(s.basis());
  return verify_scheme(s, z);
}

}  // namespace enumscheme
