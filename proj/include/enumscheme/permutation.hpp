#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace enumscheme {

/// A permutation of {1..k} in one-line notation. Values and positions are
/// 1-based throughout; the empty permutation (k = 0) is valid.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : vals_(std::move(values)) {
    check_is_permutation(vals_);
  }

  static Permutation identity(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
  }

  static Permutation decreasing(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = k - i;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }

  /// Value at 1-based position r.
  int at(int r) const {
    if (r < 1 || r > size()) throw std::invalid_argument("position out of range");
    return vals_[static_cast<std::size_t>(r - 1)];
  }

  const std::vector<int>& values() const { return vals_; }
  std::span<const int> span() const { return vals_; }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

  /// Length-first, then lexicographic. This is the canonical node order used
  /// for serialization and reporting.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.vals_ <=> b.vals_;
  }

  /// Digit string when all values fit in one digit, space-separated otherwise.
  /// The empty permutation renders as "∅" (its only use is display).
  std::string str() const {
    if (vals_.empty()) return "∅";
    if (size() <= 9) {
      std::string out;
      for (int v : vals_) out += static_cast<char>('0' + v);
      return out;
    }
    std::string out;
    for (std::size_t i = 0; i < vals_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(vals_[i]);
    }
    return out;
  }

  /// Parses either form of the text format ("51342" or "4 6 7 1 8 2 3 5").
  static Permutation parse(const std::string& text) {
    std::vector<int> v;
    if (text.find(' ') == std::string::npos) {
      for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text: " + text);
        v.push_back(c - '0');
      }
    } else {
      std::istringstream in(text);
      int x;
      while (in >> x) v.push_back(x);
      if (!in.eof()) throw std::invalid_argument("bad permutation text: " + text);
    }
    return Permutation(std::move(v));
  }

 private:
  static void check_is_permutation(const std::vector<int>& v) {
    const int k = static_cast<int>(v.size());
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int x : v) {
      if (x < 1 || x > k || seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("values are not a permutation of 1..k");
      seen[static_cast<std::size_t>(x - 1)] = 1;
    }
  }

  std::vector<int> vals_;
};

/// The unique permutation order isomorphic to a sequence of distinct numbers.
inline Permutation standardize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize: entries must be distinct");
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), word[i]);
    out[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

inline Permutation standardize(const std::vector<int>& word) {
  return standardize(std::span<const int>(word));
}

namespace detail {

/// Precomputed embedding constraints for one pattern: for each index i, the
/// earlier index holding the closest smaller (resp. larger) value, or -1.
/// During the backtracking embedding this gives an O(1) consistency window
/// per placed entry.
struct PatternScaffold {
  std::vector<int> pattern;  // pattern values, 0-based storage
  std::vector<int> below;    // index of max earlier value < pattern[i]
  std::vector<int> above;    // index of min earlier value > pattern[i]

  explicit PatternScaffold(const Permutation& p) : pattern(p.values()) {
    const int m = static_cast<int>(pattern.size());
    below.assign(static_cast<std::size_t>(m), -1);
    above.assign(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < i; ++j) {
        auto ii = static_cast<std::size_t>(i);
        auto jj = static_cast<std::size_t>(j);
        if (pattern[jj] < pattern[ii]) {
          if (below[ii] < 0 || pattern[static_cast<std::size_t>(below[ii])] < pattern[jj])
            below[ii] = j;
        } else {
          if (above[ii] < 0 || pattern[static_cast<std::size_t>(above[ii])] > pattern[jj])
            above[ii] = j;
        }
      }
    }
  }

  int size() const { return static_cast<int>(pattern.size()); }
};

/// Backtracking embedding of `sc` into `host` (any distinct values). When
/// `anchor >= 0` the occurrence must use host index `anchor`.
inline bool embeds(std::span<const int> host, const PatternScaffold& sc, int anchor = -1) {
  const int m = sc.size();
  const int n = static_cast<int>(host.size());
  if (m == 0) return anchor < 0;  // the empty pattern cannot cover an anchor
  if (m > n) return false;

  // chosen[i] = host index matched to pattern index i
  std::vector<int> chosen(static_cast<std::size_t>(m));
  auto fits = [&](int i, int p) {
    const int v = host[static_cast<std::size_t>(p)];
    const int bi = sc.below[static_cast<std::size_t>(i)];
    const int ai = sc.above[static_cast<std::size_t>(i)];
    if (bi >= 0 && v < host[static_cast<std::size_t>(chosen[static_cast<std::size_t>(bi)])]) return false;
    if (ai >= 0 && v > host[static_cast<std::size_t>(chosen[static_cast<std::size_t>(ai)])]) return false;
    return true;
  };

  // Try pattern index `a` as the one mapped onto the anchor (a == -1 means
  // unanchored).
  auto attempt = [&](int a) -> bool {
    int i = 0;
    int next = 0;  // smallest host index to try for pattern index i
    while (true) {
      int limit = n - (m - i - 1);  // leave room for the rest
      if (a >= 0 && i < a) limit = std::min(limit, anchor);
      int found = -1;
      if (a >= 0 && i == a) {
        if (anchor >= next && anchor < limit && fits(i, anchor)) found = anchor;
      } else {
        for (int p = next; p < limit; ++p) {
          if (fits(i, p)) {
            found = p;
            break;
          }
        }
      }
      if (found >= 0) {
        chosen[static_cast<std::size_t>(i)] = found;
        if (i + 1 == m) return true;
        ++i;
        next = found + 1;
        continue;
      }
      if (i == 0) return false;
      --i;
      next = chosen[static_cast<std::size_t>(i)] + 1;
    }
  };

  if (anchor < 0) return attempt(-1);
  for (int a = 0; a < m; ++a)
    if (attempt(a)) return true;
  return false;
}

}  // namespace detail

/// True iff some subsequence of `host` (arbitrary distinct values) is order
/// isomorphic to `pattern`.
inline bool contains_values(std::span<const int> host, const Permutation& pattern) {
  return detail::embeds(host, detail::PatternScaffold(pattern));
}

inline bool contains(const Permutation& p, const Permutation& pattern) {
  return detail::embeds(p.span(), detail::PatternScaffold(pattern));
}

/// A finite antichain of non-empty patterns defining the class Av(B).
/// Construction normalizes: duplicates and patterns containing another
/// pattern of the set are dropped, so the antichain invariant always holds.
class Basis {
 public:
  Basis() = default;

  explicit Basis(std::vector<Permutation> patterns) {
    for (const auto& p : patterns)
      if (p.empty())
        throw std::invalid_argument("basis patterns must be non-empty");
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    for (const auto& p : patterns) {
      bool dominated = false;
      for (const auto& q : patterns) {
        if (q == p) continue;
        if (q.size() <= p.size() && contains(p, q)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) patterns_.push_back(p);
    }
  }

  const std::vector<Permutation>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  int size() const { return static_cast<int>(patterns_.size()); }

  /// Length of the longest pattern (0 for the empty basis).
  int max_pattern_length() const {
    return patterns_.empty() ? 0 : patterns_.back().size();
  }

  friend bool operator==(const Basis& a, const Basis& b) = default;

  std::string str() const {
    if (patterns_.empty()) return "∅";
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (i) out += ',';
      out += patterns_[i].str();
    }
    return out;
  }

  /// Comma-separated patterns; an empty string denotes the empty basis.
  static Basis parse(const std::string& text) {
    std::vector<Permutation> ps;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      std::string tok = text.substr(start, end - start);
      const auto a = tok.find_first_not_of(" \t");
      if (a != std::string::npos) {
        const auto b = tok.find_last_not_of(" \t");
        ps.push_back(Permutation::parse(tok.substr(a, b - a + 1)));
      }
      start = end + 1;
    }
    return Basis(std::move(ps));
  }

 private:
  std::vector<Permutation> patterns_;
};

inline Basis normalize_basis(std::vector<Permutation> patterns) {
  return Basis(std::move(patterns));
}

inline bool avoids_all(const Permutation& p, const Basis& b) {
  for (const auto& beta : b.patterns())
    if (contains(p, beta)) return false;
  return true;
}

/// st(p with the entry at position r removed); the d_r operation.
inline Permutation delete_at(const Permutation& p, int r) {
  if (r < 1 || r > p.size()) throw std::invalid_argument("delete_at: position out of range");
  const int removed = p.at(r);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size() - 1));
  for (int i = 1; i <= p.size(); ++i) {
    if (i == r) continue;
    const int v = p.at(i);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

/// The k+1 permutations obtained by inserting a new maximum at each position;
/// entry j (1-based) has the maximum at position j.
inline std::vector<Permutation> children(const Permutation& p) {
  const int k = p.size();
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(k + 1));
  for (int j = 1; j <= k + 1; ++j) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(k + 1));
    for (int i = 1; i < j; ++i) v.push_back(p.at(i));
    v.push_back(k + 1);
    for (int i = j; i <= k; ++i) v.push_back(p.at(i));
    out.emplace_back(std::move(v));
  }
  return out;
}

inline Permutation reversed(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

inline Permutation complemented(const Permutation& p) {
  const int k = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(k));
  for (int x : p.values()) v.push_back(k + 1 - x);
  return Permutation(std::move(v));
}

inline Permutation inverted(const Permutation& p) {
  std::vector<int> v(p.values().size());
  for (int i = 1; i <= p.size(); ++i) v[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(v));
}

enum class Symmetry { Reverse, Complement, Inverse };

inline Permutation apply_symmetry(const Permutation& p, Symmetry op) {
  switch (op) {
    case Symmetry::Reverse: return reversed(p);
    case Symmetry::Complement: return complemented(p);
    case Symmetry::Inverse: return inverted(p);
  }
  throw std::invalid_argument("unknown symmetry");
}

inline Basis apply_symmetry(const Basis& b, Symmetry op) {
  std::vector<Permutation> ps;
  ps.reserve(b.patterns().size());
  for (const auto& p : b.patterns()) ps.push_back(apply_symmetry(p, op));
  return Basis(std::move(ps));
}

inline Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> v = p.values();
  for (int x : q.values()) v.push_back(x + p.size());
  return Permutation(std::move(v));
}

inline Permutation skew_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(p.size() + q.size()));
  for (int x : p.values()) v.push_back(x + q.size());
  for (int x : q.values()) v.push_back(x);
  return Permutation(std::move(v));
}

/// True iff p has no interval of length strictly between 1 and |p|.
/// Lengths 1 and 2 count as simple; no length-3 permutation is.
inline bool is_simple(const Permutation& p) {
  const int k = p.size();
  if (k == 0) throw std::invalid_argument("is_simple: empty permutation");
  if (k <= 2) return true;
  for (int a = 1; a <= k - 1; ++a) {
    int lo = p.at(a), hi = p.at(a);
    for (int b = a + 1; b <= k; ++b) {
      lo = std::min(lo, p.at(b));
      hi = std::max(hi, p.at(b));
      const int len = b - a + 1;
      if (len == k) break;
      if (hi - lo + 1 == len) return false;
    }
  }
  return true;
}

}  // namespace enumscheme
