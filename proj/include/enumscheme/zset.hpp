#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "enumscheme/bignat.hpp"
#include "enumscheme/gap_vector.hpp"
#include "enumscheme/permutation.hpp"

namespace enumscheme {

namespace detail {

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct ZKey {
  std::vector<int> perm;
  std::vector<int> gaps;
  friend bool operator==(const ZKey& a, const ZKey& b) = default;
};

struct ZKeyHash {
  std::size_t operator()(const ZKey& k) const {
    std::size_t h = k.perm.size() * 31 + k.gaps.size();
    for (int v : k.perm) hash_mix(h, static_cast<std::size_t>(v));
    for (int v : k.gaps) hash_mix(h, static_cast<std::size_t>(v) + 0x5bd1e995);
    return h;
  }
};

}  // namespace detail

/// Enumerates and counts the sets Z(B; pi; g): all B-avoiding permutations of
/// length |pi| + ||g|| whose |pi| smallest values sit at the gap-determined
/// positions and form the pattern pi. Counts are cached per (pi, g); the
/// basis is fixed per instance.
class ZsetCounter {
 public:
  explicit ZsetCounter(Basis basis) : basis_(std::move(basis)) {
    for (const auto& p : basis_.patterns()) scaffolds_.emplace_back(p);
  }

  const Basis& basis() const { return basis_; }

  /// ||B||_inf - 1, the norm bound of every reducibility scan.
  int scan_norm_bound() const { return basis_.max_pattern_length() - 1; }

  BigNat count(const Permutation& pi, const GapVector& g) const {
    detail::ZKey key{pi.values(), g.components()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    BigNat n = 0;
    enumerate(pi, g, [&](const std::vector<int>&) { ++n; });
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(std::move(key), std::move(n)).first->second;
  }

  bool nonempty(const Permutation& pi, const GapVector& g) const {
    return count(pi, g) > 0;
  }

  /// The members themselves, in lexicographic order.
  std::vector<Permutation> members(const Permutation& pi, const GapVector& g) const {
    std::vector<Permutation> out;
    enumerate(pi, g, [&](const std::vector<int>& vals) { out.emplace_back(vals); });
    return out;
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  // Fills the untracked cells left to right with the values k+1..k+m,
  // aborting a branch as soon as the filled entries contain a basis pattern.
  // Cells are filled in position order and values tried in increasing order,
  // so complete members arrive lexicographically.
  template <typename Visit>
  void enumerate(const Permutation& pi, const GapVector& g, Visit visit) const {
    const int k = pi.size();
    if (g.size() != k + 1)
      throw std::invalid_argument("gap vector length must be |pi| + 1");
    if (!avoids_all(pi, basis_)) return;  // tracked entries already witness a pattern

    const int m = g.norm();
    const int total = k + m;
    std::vector<int> seq(static_cast<std::size_t>(total), 0);
    std::vector<int> cell_pos;  // 0-based positions of the untracked cells
    cell_pos.reserve(static_cast<std::size_t>(m));
    {
      int pos = 0;
      for (int j = 1; j <= k + 1; ++j) {
        for (int c = 0; c < g.at(j); ++c) cell_pos.push_back(pos++);
        if (j <= k) {
          seq[static_cast<std::size_t>(pos)] = pi.at(j);
          ++pos;
        }
      }
    }

    std::vector<int> filled;  // scratch for the filled subsequence
    filled.reserve(static_cast<std::size_t>(total));
    std::vector<bool> used(static_cast<std::size_t>(m), false);

    auto creates_pattern = [&](int pos) {
      filled.clear();
      int anchor = -1;
      for (int i = 0; i < total; ++i) {
        if (seq[static_cast<std::size_t>(i)] == 0) continue;
        if (i == pos) anchor = static_cast<int>(filled.size());
        filled.push_back(seq[static_cast<std::size_t>(i)]);
      }
      for (const auto& sc : scaffolds_)
        if (detail::embeds(filled, sc, anchor)) return true;
      return false;
    };

    auto rec = [&](auto&& self, int t) -> void {
      if (t == m) {
        visit(seq);
        return;
      }
      const int pos = cell_pos[static_cast<std::size_t>(t)];
      for (int v = 0; v < m; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        seq[static_cast<std::size_t>(pos)] = k + 1 + v;
        if (!creates_pattern(pos)) {
          used[static_cast<std::size_t>(v)] = true;
          self(self, t + 1);
          used[static_cast<std::size_t>(v)] = false;
        }
      }
      seq[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0);
  }

  Basis basis_;
  std::vector<detail::PatternScaffold> scaffolds_;
  mutable std::mutex mu_;
  mutable std::unordered_map<detail::ZKey, BigNat, detail::ZKeyHash> cache_;
};

inline BigNat zset_count(const ZsetCounter& z, const Permutation& pi, const GapVector& g) {
  return z.count(pi, g);
}

inline std::vector<Permutation> zset_members(const ZsetCounter& z, const Permutation& pi,
                                             const GapVector& g) {
  return z.members(pi, g);
}

}  // namespace enumscheme
