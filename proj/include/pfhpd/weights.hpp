#pragma once

// GL(n) weights and the Borel-Bott-Weil reduction step.
//
// A weight is an integer vector of fixed rank n. Under the standard
// identification the k-th fundamental weight is (1,...,1,0,...,0) with k
// ones, and dominant weights are the nonincreasing vectors.

#include "pfhpd/integer.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pfhpd {

class Weight {
 public:
  Weight() = default;

  explicit Weight(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("weight of rank 0");
  }

  static Weight zeros(std::size_t n) { return constant(n, 0); }

  static Weight constant(std::size_t n, Entry c) {
    return Weight(std::vector<Entry>(n, c));
  }

  std::size_t rank() const { return entries_.size(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

  bool is_dominant() const {
    return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{});
  }

  Entry size() const {
    Entry s = 0;
    for (Entry e : entries_) s += e;
    return s;
  }

  /// alpha + c*(1,...,1)
  Weight shifted(Entry c) const {
    std::vector<Entry> v = entries_;
    for (Entry& e : v) e += c;
    return Weight(std::move(v));
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    check_same_rank(a, b);
    std::vector<Entry> v(a.rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return Weight(std::move(v));
  }

  friend Weight operator-(const Weight& a, const Weight& b) {
    check_same_rank(a, b);
    std::vector<Entry> v(a.rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return Weight(std::move(v));
  }

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  static void check_same_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) {
      throw RankMismatch("weight rank mismatch: " + std::to_string(a.rank()) + " vs " +
                         std::to_string(b.rank()));
    }
  }

 private:
  std::vector<Entry> entries_;
};

/// A nonincreasing weight; indexes the irreducible representation Σ^α.
class DominantWeight {
 public:
  DominantWeight() = default;

  explicit DominantWeight(Weight w) : w_(std::move(w)) {
    if (!w_.is_dominant()) throw std::invalid_argument("weight is not dominant");
  }

  explicit DominantWeight(std::vector<Entry> entries) : DominantWeight(Weight(std::move(entries))) {}

  static DominantWeight zeros(std::size_t n) { return DominantWeight(Weight::zeros(n)); }
  static DominantWeight constant(std::size_t n, Entry c) {
    return DominantWeight(Weight::constant(n, c));
  }
  /// (1,...,1,0,...,0) with k ones: the highest weight of Λ^k.
  static DominantWeight fundamental(std::size_t n, std::size_t k) {
    std::vector<Entry> v(n, 0);
    for (std::size_t i = 0; i < k && i < n; ++i) v[i] = 1;
    return DominantWeight(std::move(v));
  }
  /// (m,0,...,0): the highest weight of S^m.
  static DominantWeight symmetric(std::size_t n, Entry m) {
    std::vector<Entry> v(n, 0);
    v[0] = m;
    return DominantWeight(std::move(v));
  }

  const Weight& weight() const { return w_; }
  std::size_t rank() const { return w_.rank(); }
  Entry operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Entry>& entries() const { return w_.entries(); }
  Entry size() const { return w_.size(); }
  Entry first() const { return w_[0]; }
  Entry last() const { return w_[w_.rank() - 1]; }

  DominantWeight shifted(Entry c) const { return DominantWeight(w_.shifted(c)); }

  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  Weight w_;
};

/// ρ = (n, n-1, ..., 1).
inline Weight rho(std::size_t n) {
  if (n < 1) throw std::invalid_argument("rho: rank must be positive");
  std::vector<Entry> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Entry>(n - i);
  return Weight(std::move(v));
}

/// Nonvanishing branch of Borel-Bott-Weil: H^degree = Σ^weight V*.
struct BBWResult {
  int degree = 0;
  DominantWeight weight;

  friend bool operator==(const BBWResult&, const BBWResult&) = default;
};

/// std::nullopt is the acyclic case (α+ρ has a repeated entry).
using BBWOutcome = std::optional<BBWResult>;

/// Cohomology of the line bundle L_α on the full flag variety of GL(n).
/// The returned weight is the exponent of the dual space V*.
inline BBWOutcome bbw_reduce(const Weight& alpha) {
  const std::size_t n = alpha.rank();
  Weight shifted = alpha + rho(n);
  std::vector<Entry> v = shifted.entries();

  int inversions = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) return std::nullopt;
      if (v[i] < v[j]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>{});
  return BBWResult{inversions, DominantWeight(Weight(std::move(v)) - rho(n))};
}

/// (Σ^α V)* = Σ^{-reverse(α)} V.
inline Weight dual_weight(const Weight& alpha) {
  std::vector<Entry> v(alpha.entries().rbegin(), alpha.entries().rend());
  for (Entry& e : v) e = -e;
  return Weight(std::move(v));
}

inline DominantWeight dual_weight(const DominantWeight& alpha) {
  return DominantWeight(dual_weight(alpha.weight()));
}

inline std::string format_weight(const std::vector<Entry>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

inline std::string format_weight(const Weight& w) { return format_weight(w.entries()); }
inline std::string format_weight(const DominantWeight& w) { return format_weight(w.entries()); }

/// Parses "a1,a2,...,an" (whitespace tolerated).
inline Weight parse_weight(const std::string& text) {
  std::vector<Entry> v;
  std::string token;
  auto flush = [&] {
    std::string t;
    for (char c : token) {
      if (c != ' ' && c != '\t') t += c;
    }
    if (t.empty()) throw std::invalid_argument("empty weight entry in '" + text + "'");
    Integer value = parse_integer(t);
    if (value > Integer(1) << 40 || value < -(Integer(1) << 40)) {
      throw std::invalid_argument("weight entry out of range: " + t);
    }
    v.push_back(static_cast<Entry>(value));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return Weight(std::move(v));
}

}  // namespace pfhpd
