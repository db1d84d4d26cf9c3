#pragma once

#include <stdexcept>
#include <vector>

#include "enumscheme/gap_ideal.hpp"
#include "enumscheme/gap_vector.hpp"
#include "enumscheme/zset.hpp"

namespace enumscheme {

/// Gap slots that can never hold an untracked entry in a nonempty Z-set.
struct ForbiddenSlots {
  std::vector<int> slots;  // ascending 1-based gap indices

  bool contains(int j) const {
    for (int s : slots)
      if (s == j) return true;
    return false;
  }
  friend bool operator==(const ForbiddenSlots& a, const ForbiddenSlots& b) = default;
};

namespace detail {
inline void require_avoider(const ZsetCounter& z, const Permutation& pi) {
  if (!avoids_all(pi, z.basis()))
    throw std::invalid_argument("permutation contains a basis element");
}
inline void require_position(const Permutation& pi, int r) {
  if (r < 1 || r > pi.size()) throw std::invalid_argument("deletion position out of range");
}
}  // namespace detail

/// Slot j is forbidden iff the Z-set of the unit vector e_j is empty; that
/// single check settles membership for all vectors with g_j > 0.
inline ForbiddenSlots forbidden_slots(const ZsetCounter& z, const Permutation& pi) {
  detail::require_avoider(z, pi);
  ForbiddenSlots out;
  for (int j = 1; j <= pi.size() + 1; ++j)
    if (z.count(pi, GapVector::unit(pi.size() + 1, j)) == 0) out.slots.push_back(j);
  return out;
}

/// Classic reducibility of the entry at position r: deletion preserves the
/// Z-set count for every slot-obeying vector with norm <= ||B||_inf - 1.
inline bool es_reducible(const ZsetCounter& z, const Permutation& pi, int r) {
  detail::require_avoider(z, pi);
  detail::require_position(pi, r);
  const ForbiddenSlots banned = forbidden_slots(z, pi);
  const Permutation target = delete_at(pi, r);
  for (const auto& g : bounded_gap_vectors(pi.size() + 1, z.scan_norm_bound())) {
    bool obeys = true;
    for (int j : banned.slots)
      if (g.at(j) > 0) {
        obeys = false;
        break;
      }
    if (!obeys) continue;
    if (z.count(pi, g) != z.count(target, gap_delete(g, r))) return false;
  }
  return true;
}

/// Extended reducibility: the count equality is required only where the
/// Z-set of pi itself is nonempty.
inline bool es_plus_reducible(const ZsetCounter& z, const Permutation& pi, int r) {
  detail::require_avoider(z, pi);
  detail::require_position(pi, r);
  const Permutation target = delete_at(pi, r);
  for (const auto& g : bounded_gap_vectors(pi.size() + 1, z.scan_norm_bound())) {
    const BigNat c = z.count(pi, g);
    if (c == 0) continue;
    if (c != z.count(target, gap_delete(g, r))) return false;
  }
  return true;
}

/// The largest ideal of gap vectors on which "zero or recurse via d_r" is
/// valid. Only defined for extended-reducible entries, where every basis
/// vector of the ideal has norm <= ||B||_inf - 1, so the bounded violation
/// scan below is exhaustive.
inline GapIdeal reduction_gap_basis(const ZsetCounter& z, const Permutation& pi, int r) {
  if (!es_plus_reducible(z, pi, r))
    throw std::logic_error("reduction_gap_basis requires an extended-reducible entry");
  const Permutation target = delete_at(pi, r);
  std::vector<GapVector> violations;
  for (const auto& g : bounded_gap_vectors(pi.size() + 1, z.scan_norm_bound())) {
    if (z.count(pi, g) == 0 && z.count(target, gap_delete(g, r)) > 0)
      violations.push_back(g);
  }
  return GapIdeal(pi.size() + 1, minimal_elements(std::move(violations)));
}

/// The ideal realizing the classic reduction rule: excluded exactly where a
/// forbidden slot is occupied.
inline GapIdeal classic_gap_ideal(const ZsetCounter& z, const Permutation& pi) {
  const ForbiddenSlots banned = forbidden_slots(z, pi);
  std::vector<GapVector> excl;
  for (int j : banned.slots) excl.push_back(GapVector::unit(pi.size() + 1, j));
  return GapIdeal(pi.size() + 1, std::move(excl));
}

}  // namespace enumscheme
