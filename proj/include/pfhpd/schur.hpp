#pragma once

// The representation ring of GL(n): virtual combinations of irreducibles
// Σ^λ indexed by dominant weights, Littlewood-Richardson products, duals,
// Weyl dimensions and the plethysm S^t(Λ²).

#include "pfhpd/integer.hpp"
#include "pfhpd/weights.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace pfhpd {

/// Formal Z-linear combination of irreducible GL(n)-representations.
/// Zero multiplicities are never stored; keys iterate lexicographically.
class VirtualRep {
 public:
  using Terms = std::map<DominantWeight, Integer>;

  VirtualRep() = default;
  explicit VirtualRep(std::size_t rank) : rank_(rank) {}

  static VirtualRep irreducible(const DominantWeight& w, const Integer& mult = 1) {
    VirtualRep r(w.rank());
    r.add(w, mult);
    return r;
  }

  static VirtualRep trivial(std::size_t rank, const Integer& mult = 1) {
    return irreducible(DominantWeight::zeros(rank), mult);
  }

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_nonnegative() const {
    for (const auto& [w, m] : terms_) {
      if (m < 0) return false;
    }
    return true;
  }

  Integer multiplicity(const DominantWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const DominantWeight& w, const Integer& mult) {
    if (w.rank() != rank_) {
      throw RankMismatch("VirtualRep of rank " + std::to_string(rank_) +
                         " cannot hold a weight of rank " + std::to_string(w.rank()));
    }
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  VirtualRep& operator+=(const VirtualRep& other) {
    check_rank(other);
    for (const auto& [w, m] : other.terms_) add(w, m);
    return *this;
  }

  VirtualRep& operator-=(const VirtualRep& other) {
    check_rank(other);
    for (const auto& [w, m] : other.terms_) add(w, -m);
    return *this;
  }

  VirtualRep& operator*=(const Integer& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, m] : terms_) m *= c;
    return *this;
  }

  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(VirtualRep a, const Integer& c) { return a *= c; }
  friend VirtualRep operator*(const Integer& c, VirtualRep a) { return a *= c; }
  friend VirtualRep operator-(VirtualRep a) { return a *= Integer(-1); }

  friend bool operator==(const VirtualRep& a, const VirtualRep& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Positive and negative parts, so that *this == positive - negative.
  std::pair<VirtualRep, VirtualRep> split_signs() const {
    VirtualRep pos(rank_), neg(rank_);
    for (const auto& [w, m] : terms_) {
      if (m > 0) {
        pos.add(w, m);
      } else {
        neg.add(w, -m);
      }
    }
    return {pos, neg};
  }

 private:
  void check_rank(const VirtualRep& other) const {
    if (other.rank_ != rank_) {
      throw RankMismatch("VirtualRep rank mismatch: " + std::to_string(rank_) + " vs " +
                         std::to_string(other.rank_));
    }
  }

  std::size_t rank_ = 0;
  Terms terms_;
};

/// dim Σ^λ(C^n) by the Weyl dimension formula ∏_{i<j} (λ_i-λ_j+j-i)/(j-i).
inline Integer dimension(const DominantWeight& lambda) {
  const std::size_t n = lambda.rank();
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= Integer(lambda[i] - lambda[j] + static_cast<Entry>(j - i));
      den *= Integer(static_cast<Entry>(j - i));
    }
  }
  return num / den;
}

/// Signed total dimension Σ m_λ dim Σ^λ.
inline Integer dimension(const VirtualRep& rep) {
  Integer total = 0;
  for (const auto& [w, m] : rep.terms()) total += m * dimension(w);
  return total;
}

inline VirtualRep dualize(const VirtualRep& rep) {
  VirtualRep out(rep.rank());
  for (const auto& [w, m] : rep.terms()) out.add(dual_weight(w), m);
  return out;
}

namespace detail {

using Partition = std::vector<Entry>;

/// Enumerates Littlewood-Richardson skew tableaux of shape ν/λ and content μ
/// (semistandard, reverse reading word a lattice word), adding one label at
/// a time as a horizontal strip. Shapes are confined to `rows` rows.
class LRFiller {
 public:
  LRFiller(const Partition& mu, std::size_t rows) : mu_(mu), rows_(rows) {}

  std::map<Partition, Integer> run(const Partition& lambda) {
    out_.clear();
    Partition shape = lambda;
    std::vector<Entry> no_prev(rows_, 0);
    fill_label(0, shape, no_prev);
    return std::move(out_);
  }

 private:
  void fill_label(std::size_t label, Partition& shape, const std::vector<Entry>& prev_counts) {
    if (label == mu_.size() || mu_[label] == 0) {
      out_[shape] += 1;
      return;
    }
    const Partition old = shape;
    std::vector<Entry> counts(rows_, 0);
    place_row(label, 0, mu_[label], 0, 0, old, shape, counts, prev_counts);
  }

  // cum_new: label boxes placed in rows < row; cum_prev: label-1 boxes in rows < row.
  void place_row(std::size_t label, std::size_t row, Entry remaining, Entry cum_new,
                 Entry cum_prev, const Partition& old, Partition& shape,
                 std::vector<Entry>& counts, const std::vector<Entry>& prev_counts) {
    if (remaining == 0) {
      fill_label(label + 1, shape, counts);
      return;
    }
    if (row == rows_) return;

    Entry cap = remaining;
    if (row > 0) cap = std::min(cap, old[row - 1] - old[row]);
    if (label > 0) cap = std::min(cap, cum_prev - cum_new);
    const Entry next_prev = cum_prev + prev_counts[row];

    for (Entry a = cap; a >= 0; --a) {
      shape[row] = old[row] + a;
      counts[row] = a;
      place_row(label, row + 1, remaining - a, cum_new + a, next_prev, old, shape, counts,
                prev_counts);
    }
    shape[row] = old[row];
    counts[row] = 0;
  }

  Partition mu_;
  std::size_t rows_;
  std::map<Partition, Integer> out_;
};

/// Thread-safe memo of LR products on partitions. Fills are idempotent: the
/// value for a key is a pure function of the key.
class LRCache {
 public:
  static LRCache& instance() {
    static LRCache cache;
    return cache;
  }

  std::map<Partition, Integer> product(const Partition& lambda, const Partition& mu) {
    Key key{lambda, mu};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    auto value = LRFiller(mu, lambda.size()).run(lambda);
    std::lock_guard<std::mutex> lock(mutex_);
    table_.try_emplace(key, value);
    return value;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    table_.clear();
  }

 private:
  using Key = std::pair<Partition, Partition>;
  std::mutex mutex_;
  std::map<Key, std::map<Partition, Integer>> table_;
};

}  // namespace detail

/// Σ^λ ⊗ Σ^μ = ⊕ c^ν_{λμ} Σ^ν for GL(n). Negative entries are handled by
/// det-normalization: both inputs are shifted to partitions, multiplied, and
/// the outputs shifted back.
inline VirtualRep lr_product(const DominantWeight& lambda, const DominantWeight& mu) {
  Weight::check_same_rank(lambda.weight(), mu.weight());
  const std::size_t n = lambda.rank();
  const Entry shift_l = lambda.last();
  const Entry shift_m = mu.last();

  detail::Partition pl(n), pm(n);
  for (std::size_t i = 0; i < n; ++i) {
    pl[i] = lambda[i] - shift_l;
    pm[i] = mu[i] - shift_m;
  }
  // Iterating over the smaller content keeps the enumeration short.
  Entry size_l = 0, size_m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    size_l += pl[i];
    size_m += pm[i];
  }
  if (size_m > size_l) std::swap(pl, pm);

  VirtualRep out(n);
  for (const auto& [nu, c] : detail::LRCache::instance().product(pl, pm)) {
    std::vector<Entry> v(nu);
    for (Entry& e : v) e += shift_l + shift_m;
    out.add(DominantWeight(std::move(v)), c);
  }
  return out;
}

/// Bilinear extension of lr_product.
inline VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
  if (a.rank() != b.rank()) {
    throw RankMismatch("tensor: rank mismatch " + std::to_string(a.rank()) + " vs " +
                       std::to_string(b.rank()));
  }
  VirtualRep out(a.rank());
  for (const auto& [wa, ma] : a.terms()) {
    for (const auto& [wb, mb] : b.terms()) {
      VirtualRep p = lr_product(wa, wb);
      p *= ma * mb;
      out += p;
    }
  }
  return out;
}

/// (det)^c ⊗ rep.
inline VirtualRep det_twist(const VirtualRep& rep, Entry c) {
  if (c == 0) return rep;
  VirtualRep out(rep.rank());
  for (const auto& [w, m] : rep.terms()) out.add(w.shifted(c), m);
  return out;
}

/// The summands of S^t(Λ²E) for E of rank r: partitions of 2t whose columns
/// all have even length, with at most r rows, padded to length r. These are
/// exactly the weights (a1,a1,a2,a2,...) with a1 >= a2 >= ... and Σ a_i = t.
inline std::vector<DominantWeight> sym_power_of_wedge2(Entry t, std::size_t r) {
  if (t < 0) throw std::invalid_argument("sym_power_of_wedge2: negative power");
  if (r < 2) throw std::invalid_argument("sym_power_of_wedge2: rank must be at least 2");
  const std::size_t pairs = r / 2;
  std::vector<DominantWeight> out;
  std::vector<Entry> parts;

  auto recurse = [&](auto&& self, Entry remaining, Entry max_part) -> void {
    if (remaining == 0) {
      std::vector<Entry> v(r, 0);
      for (std::size_t i = 0; i < parts.size(); ++i) v[2 * i] = v[2 * i + 1] = parts[i];
      out.emplace_back(std::move(v));
      return;
    }
    if (parts.size() == pairs) return;
    for (Entry a = std::min(remaining, max_part); a >= 1; --a) {
      parts.push_back(a);
      self(self, remaining - a, a);
      parts.pop_back();
    }
  };
  recurse(recurse, t, t);
  std::sort(out.begin(), out.end());
  return out;
}

/// S^t(Λ²E) as a representation of GL(r); zero for t < 0.
inline VirtualRep sym_power_of_wedge2_rep(Entry t, std::size_t r) {
  VirtualRep out(r);
  if (t < 0) return out;
  for (const auto& w : sym_power_of_wedge2(t, r)) out.add(w, 1);
  return out;
}

namespace detail {

inline VirtualRep jacobi_trudi_wedge2(const std::vector<Entry>& lambda, std::size_t r) {
  const std::size_t l = lambda.size();
  std::vector<std::size_t> perm(l);
  for (std::size_t i = 0; i < l; ++i) perm[i] = i;
  VirtualRep out(r);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = i + 1; j < l; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    VirtualRep prod = VirtualRep::trivial(r);
    for (std::size_t i = 0; i < l && !prod.is_zero(); ++i) {
      const Entry k = lambda[i] - static_cast<Entry>(i) + static_cast<Entry>(perm[i]);
      if (k < 0) {
        prod = VirtualRep(r);
      } else if (k > 0) {
        prod = tensor(prod, sym_power_of_wedge2_rep(k, r));
      }
    }
    prod *= Integer(sign);
    out += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace detail

/// Σ^ν(Λ²E) for E of rank r >= 2 and ν dominant of rank r(r-1)/2, as a
/// representation of GL(r). Computed by the Jacobi-Trudi determinant in
/// the symmetric powers S^k(Λ²E), after moving ν.last into a power of
/// det Λ²E = (det E)^{r-1}.
inline VirtualRep schur_of_wedge2(const DominantWeight& nu, std::size_t r) {
  if (r < 2) throw std::invalid_argument("schur_of_wedge2: rank must be at least 2");
  if (nu.rank() != r * (r - 1) / 2) {
    throw RankMismatch("schur_of_wedge2: weight of rank " + std::to_string(nu.rank()) +
                       " for Λ² of a rank " + std::to_string(r) + " bundle");
  }
  static std::mutex mutex;
  static std::map<std::pair<DominantWeight, std::size_t>, VirtualRep> cache;
  const auto key = std::make_pair(nu, r);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const Entry c = nu.last();
  std::vector<Entry> lambda;
  for (Entry e : nu.entries()) {
    if (e - c > 0) lambda.push_back(e - c);
  }
  VirtualRep value = lambda.empty() ? VirtualRep::trivial(r)
                                    : detail::jacobi_trudi_wedge2(lambda, r);
  value = det_twist(value, c * static_cast<Entry>(r - 1));
  std::lock_guard<std::mutex> lock(mutex);
  cache.try_emplace(key, value);
  return value;
}

/// "0", or a sum like "S(1,1,0,0) + 2 S(0,0,0,-1)" with signed multiplicities.
inline std::string format_rep(const VirtualRep& rep) {
  if (rep.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, m] : rep.terms()) {
    Integer mag = m < 0 ? Integer(-m) : m;
    if (first) {
      if (m < 0) s += "-";
    } else {
      s += m < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += to_decimal(mag) + " ";
    s += "S(" + format_weight(w) + ")";
  }
  return s;
}

}  // namespace pfhpd
