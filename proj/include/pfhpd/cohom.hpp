#pragma once

// Equivariant cohomology of Schur bundles on Grassmannians and on the
// projective bundle ζ: TY = P_G(V) → G, where G = Gr(n-4, n), K = U is the
// tautological bundle of rank n-4, and V = Λ²K^⊥ has rank 6.
//
// Conventions. On Gr(k,n) with tautological U of rank k and U^⊥ ⊂ W* of
// rank n-k, a Schur bundle is Σ^β U* ⊗ Σ^γ U^⊥. GL(W)-representations are
// always recorded by their exponent on W*, so Σ^λ stands for Σ^λ W*; in
// particular W = Σ^{(0,...,0,-1)} and det W* = Σ^{(1,...,1)}.
//
// Since det U* ⊗ det U^⊥ = det W* equivariantly, a bundle (β+c, γ+c) equals
// (β, γ) ⊗ (det W*)^c. Terms are kept with γ normalized to end in 0 and the
// character moved into the coefficient representation.
//
// On TY the fiber P(V) is the Grassmannian of lines L = O(-H_Y) ⊂ V with
// quotient Q = V/L of rank 5. A term additionally carries a fiber weight
// (a | δ), meaning Σ^a L* ⊗ Σ^δ Q*, so O(a·H_Y) has δ = 0. The same
// normalization applies with det L* ⊗ det Q* = det V* = (det K^⊥)^{-3}.
//
// A term sitting in position d of a complex (written F[-d] for a single
// sheaf) contributes its H^q to total degree q + d.

#include "pfhpd/schur.hpp"
#include "pfhpd/weights.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace pfhpd {

class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GrassmannianSpace {
  std::size_t k = 1;
  std::size_t n = 2;

  GrassmannianSpace() = default;
  GrassmannianSpace(std::size_t k_, std::size_t n_) : k(k_), n(n_) {
    if (k < 1 || k + 1 > n) {
      throw std::invalid_argument("Gr(" + std::to_string(k) + "," + std::to_string(n) +
                                  "): need 1 <= k <= n-1");
    }
  }

  std::size_t perp_rank() const { return n - k; }
  std::size_t dim() const { return k * (n - k); }

  friend auto operator<=>(const GrassmannianSpace&, const GrassmannianSpace&) = default;
};

/// Rank of V = Λ²K^⊥, the bundle projectivized by TY.
inline constexpr std::size_t kFiberRank = 6;

/// Either a Grassmannian, or TY(n) = P_G(Λ²K^⊥) over G = Gr(n-4, n).
struct Space {
  enum class Kind { Grassmannian, TY };
  Kind kind = Kind::Grassmannian;
  GrassmannianSpace base;

  static Space gr(std::size_t k, std::size_t n) {
    return Space{Kind::Grassmannian, GrassmannianSpace(k, n)};
  }
  static Space ty(std::size_t n) {
    if (n < 5) throw std::invalid_argument("ty(n) needs n >= 5");
    return Space{Kind::TY, GrassmannianSpace(n - 4, n)};
  }

  bool is_ty() const { return kind == Kind::TY; }
  std::size_t n() const { return base.n; }
  std::size_t dim() const { return base.dim() + (is_ty() ? kFiberRank - 1 : 0); }
  /// Rank of the fiber weight δ: 5 on TY, 0 on a Grassmannian.
  std::size_t fiber_rank() const { return is_ty() ? kFiberRank - 1 : 0; }

  std::string name() const {
    if (is_ty()) return "ty(" + std::to_string(base.n) + ")";
    return "gr(" + std::to_string(base.k) + "," + std::to_string(base.n) + ")";
  }

  friend auto operator<=>(const Space&, const Space&) = default;
};

struct SchurBundle {
  DominantWeight beta;   // exponent on U*
  DominantWeight gamma;  // exponent on U^⊥

  friend auto operator<=>(const SchurBundle&, const SchurBundle&) = default;
};

inline SchurBundle trivial_bundle(const GrassmannianSpace& g) {
  return {DominantWeight::zeros(g.k), DominantWeight::zeros(g.perp_rank())};
}

inline SchurBundle dual_bundle(const SchurBundle& b) {
  return {dual_weight(b.beta), dual_weight(b.gamma)};
}

/// One summand coeff ⊗ Σ^β U* ⊗ Σ^γ U^⊥ ⊗ Σ^hy L* ⊗ Σ^fiber Q* in position
/// `degree` of a complex. `fiber` is empty on a Grassmannian.
struct Term {
  SchurBundle bundle;
  Entry hy = 0;
  DominantWeight fiber;
  Entry degree = 0;
  VirtualRep coeff;

  auto key() const { return std::tie(degree, hy, fiber, bundle); }
};

/// A finite formal complex of Schur bundles, kept in canonical form.
class EquivariantObject {
 public:
  EquivariantObject() = default;
  explicit EquivariantObject(Space space) : space_(space) {}

  static EquivariantObject zero(Space space) { return EquivariantObject(space); }

  static EquivariantObject structure_sheaf(Space space) {
    EquivariantObject o(space);
    o.add_term(trivial_bundle(space.base), 0, 0, VirtualRep::trivial(space.n()));
    return o;
  }

  static EquivariantObject bundle(Space space, const DominantWeight& beta,
                                  const DominantWeight& gamma, Entry hy = 0, Entry degree = 0) {
    EquivariantObject o(space);
    o.add_term(SchurBundle{beta, gamma}, hy, degree, VirtualRep::trivial(space.n()));
    return o;
  }

  const Space& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds a term with trivial fiber weight δ = 0.
  void add_term(const SchurBundle& b, Entry hy, Entry degree, const VirtualRep& coeff) {
    add_term(Term{b, hy, DominantWeight(), degree, coeff});
  }

  void add_term(Term t) {
    if (t.bundle.beta.rank() != space_.base.k ||
        t.bundle.gamma.rank() != space_.base.perp_rank()) {
      throw RankMismatch("Schur bundle of shape (" + std::to_string(t.bundle.beta.rank()) +
                         "," + std::to_string(t.bundle.gamma.rank()) + ") on " +
                         space_.name());
    }
    if (t.coeff.rank() != space_.n()) {
      throw RankMismatch("coefficient representation must have rank " +
                         std::to_string(space_.n()));
    }
    if (!space_.is_ty() && (t.hy != 0 || t.fiber.rank() != 0)) {
      throw SpaceMismatch("fiber twist on " + space_.name());
    }
    if (space_.is_ty() && t.fiber.rank() == 0) t.fiber = DominantWeight::zeros(space_.fiber_rank());
    if (t.fiber.rank() != space_.fiber_rank()) {
      throw RankMismatch("fiber weight must have rank " + std::to_string(space_.fiber_rank()));
    }
    if (t.coeff.is_zero()) return;

    if (space_.is_ty()) {
      const Entry c = t.fiber.last();
      if (c != 0) {
        t.hy -= c;
        t.fiber = t.fiber.shifted(-c);
        t.bundle.gamma = t.bundle.gamma.shifted(-3 * c);
      }
    }
    const Entry c = t.bundle.gamma.last();
    if (c != 0) {
      t.bundle.beta = t.bundle.beta.shifted(-c);
      t.bundle.gamma = t.bundle.gamma.shifted(-c);
      t.coeff = det_twist(t.coeff, c);
    }

    auto pos = std::lower_bound(terms_.begin(), terms_.end(), t,
                                [](const Term& x, const Term& y) { return x.key() < y.key(); });
    if (pos != terms_.end() && pos->key() == t.key()) {
      pos->coeff += t.coeff;
      if (pos->coeff.is_zero()) terms_.erase(pos);
      return;
    }
    terms_.insert(pos, std::move(t));
  }

  EquivariantObject& operator+=(const EquivariantObject& other) {
    check_space(other);
    for (const Term& t : other.terms_) add_term(t);
    return *this;
  }

  friend EquivariantObject operator+(EquivariantObject a, const EquivariantObject& b) {
    return a += b;
  }

  /// F[k]: every term moves k positions to the left.
  EquivariantObject shifted(Entry k) const {
    EquivariantObject o(space_);
    for (Term t : terms_) {
      t.degree -= k;
      o.add_term(std::move(t));
    }
    return o;
  }

  /// F ⊗ O(a·H_G + b·H_Y). On a Grassmannian H_G is the Plücker class O(1).
  EquivariantObject twisted(Entry a, Entry b = 0) const {
    if (b != 0 && !space_.is_ty()) throw SpaceMismatch("H_Y twist on " + space_.name());
    EquivariantObject o(space_);
    for (Term t : terms_) {
      t.bundle.beta = t.bundle.beta.shifted(a);
      t.hy += b;
      o.add_term(std::move(t));
    }
    return o;
  }

  /// V ⊗ F for a GL(W)-representation V (given on W*).
  EquivariantObject times(const VirtualRep& rep) const {
    EquivariantObject o(space_);
    for (Term t : terms_) {
      t.coeff = tensor(t.coeff, rep);
      o.add_term(std::move(t));
    }
    return o;
  }

  /// Termwise dual: position d goes to -d, weights and coefficients invert.
  EquivariantObject dual() const {
    EquivariantObject o(space_);
    for (const Term& t : terms_) {
      o.add_term(Term{dual_bundle(t.bundle), -t.hy,
                      space_.is_ty() ? dual_weight(t.fiber) : DominantWeight(), -t.degree,
                      dualize(t.coeff)});
    }
    return o;
  }

  /// Rank of the underlying graded bundle, counted with signs (-1)^degree.
  Integer signed_rank() const;

  friend bool operator==(const EquivariantObject& a, const EquivariantObject& b) {
    if (!(a.space_ == b.space_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const Term& x = a.terms_[i];
      const Term& y = b.terms_[i];
      if (x.key() != y.key() || !(x.coeff == y.coeff)) return false;
    }
    return true;
  }

  void check_space(const EquivariantObject& other) const {
    if (!(other.space_ == space_)) {
      throw SpaceMismatch("objects live on " + space_.name() + " and " + other.space_.name());
    }
  }

 private:
  Space space_;
  std::vector<Term> terms_;
};

inline Integer EquivariantObject::signed_rank() const {
  Integer total = 0;
  for (const Term& t : terms_) {
    Integer r = dimension(t.bundle.beta) * dimension(t.bundle.gamma) * dimension(t.coeff);
    if (space_.is_ty()) r *= dimension(t.fiber);
    total += (t.degree % 2 == 0) ? r : Integer(-r);
  }
  return total;
}

/// Slotwise Littlewood-Richardson product of two objects.
inline EquivariantObject tensor(const EquivariantObject& a, const EquivariantObject& b) {
  a.check_space(b);
  const bool ty = a.space().is_ty();
  EquivariantObject out(a.space());
  for (const Term& x : a.terms()) {
    for (const Term& y : b.terms()) {
      const VirtualRep coeff = tensor(x.coeff, y.coeff);
      const VirtualRep betas = lr_product(x.bundle.beta, y.bundle.beta);
      const VirtualRep gammas = lr_product(x.bundle.gamma, y.bundle.gamma);
      VirtualRep fibers = ty ? lr_product(x.fiber, y.fiber) : VirtualRep(0);
      if (!ty) fibers.add(DominantWeight(), 1);
      for (const auto& [bw, bm] : betas.terms()) {
        for (const auto& [gw, gm] : gammas.terms()) {
          for (const auto& [fw, fm] : fibers.terms()) {
            out.add_term(Term{SchurBundle{bw, gw}, x.hy + y.hy, fw, x.degree + y.degree,
                              coeff * (bm * gm * fm)});
          }
        }
      }
    }
  }
  return out;
}

/// Cohomological degree ↦ GL(W)-representation (on W*).
class GradedRep {
 public:
  GradedRep() = default;
  explicit GradedRep(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const std::map<Entry, VirtualRep>& degrees() const { return degrees_; }
  bool is_zero() const { return degrees_.empty(); }

  VirtualRep at(Entry d) const {
    auto it = degrees_.find(d);
    return it == degrees_.end() ? VirtualRep(rank_) : it->second;
  }

  void add(Entry d, const VirtualRep& rep) {
    if (rep.rank() != rank_) throw RankMismatch("GradedRep rank mismatch");
    if (rep.is_zero()) return;
    auto [it, inserted] = degrees_.try_emplace(d, rep);
    if (!inserted) {
      it->second += rep;
      if (it->second.is_zero()) degrees_.erase(it);
    }
  }

  void add(Entry d, const DominantWeight& w, const Integer& m) {
    add(d, VirtualRep::irreducible(w, m));
  }

  GradedRep& operator+=(const GradedRep& other) {
    for (const auto& [d, r] : other.degrees_) add(d, r);
    return *this;
  }

  friend bool operator==(const GradedRep&, const GradedRep&) = default;

 private:
  std::size_t rank_ = 0;
  std::map<Entry, VirtualRep> degrees_;
};

inline VirtualRep euler_characteristic(const GradedRep& g) {
  VirtualRep chi(g.rank());
  for (const auto& [d, r] : g.degrees()) {
    if (d % 2 == 0) {
      chi += r;
    } else {
      chi -= r;
    }
  }
  return chi;
}

/// Degree ↦ signed total dimension, zero degrees omitted.
inline std::map<Entry, Integer> graded_dimension(const GradedRep& g) {
  std::map<Entry, Integer> out;
  for (const auto& [d, r] : g.degrees()) {
    Integer dim = dimension(r);
    if (dim != 0) out[d] = dim;
  }
  return out;
}

struct ExtBounds {
  GradedRep lower;
  GradedRep upper;
  VirtualRep euler;
};

/// Exact value, or bounds when differentials of the hypercohomology
/// spectral sequence could cancel first-page entries.
class ExtAnswer {
 public:
  explicit ExtAnswer(GradedRep exact) : v_(std::move(exact)) {}
  explicit ExtAnswer(ExtBounds bounds) : v_(std::move(bounds)) {}

  bool is_exact() const { return std::holds_alternative<GradedRep>(v_); }
  const GradedRep& exact() const { return std::get<GradedRep>(v_); }
  const ExtBounds& bounds() const { return std::get<ExtBounds>(v_); }

  bool is_zero() const { return upper().is_zero(); }
  const GradedRep& upper() const { return is_exact() ? exact() : bounds().upper; }

 private:
  std::variant<GradedRep, ExtBounds> v_;
};

inline VirtualRep euler_characteristic(const ExtAnswer& a) {
  return a.is_exact() ? euler_characteristic(a.exact()) : a.bounds().euler;
}

/// H^•(Gr(k,n), Σ^β U* ⊗ Σ^γ U^⊥): BBW on the concatenation (β, γ).
inline BBWOutcome bundle_cohomology(const SchurBundle& b) {
  std::vector<Entry> alpha = b.beta.entries();
  alpha.insert(alpha.end(), b.gamma.entries().begin(), b.gamma.entries().end());
  return bbw_reduce(Weight(std::move(alpha)));
}

namespace detail {

/// First page of the hypercohomology spectral sequence, keyed by
/// (filtration index p = term position, total degree).
struct FirstPage {
  std::size_t rank;
  std::map<std::pair<Entry, Entry>, VirtualRep> entries;

  void add(Entry p, Entry total, const VirtualRep& rep) {
    if (rep.is_zero()) return;
    auto [it, inserted] = entries.try_emplace({p, total}, rep);
    if (!inserted) {
      it->second += rep;
      if (it->second.is_zero()) entries.erase(it);
    }
  }
};

/// Cohomology of a single term on a Grassmannian, into slot p.
inline void accumulate_term_gr(const Term& t, Entry p, Entry extra_degree, FirstPage& page) {
  BBWOutcome h = bundle_cohomology(t.bundle);
  if (!h) return;
  page.add(p, t.degree + extra_degree + h->degree,
           tensor(t.coeff, VirtualRep::irreducible(h->weight)));
}

/// Differentials raise total degree by one, strictly raise p, and are
/// GL(W)-equivariant. The answer is exact unless some irreducible appears
/// at (p, d) and (p', d+1) with p' > p.
inline ExtAnswer resolve(const FirstPage& page) {
  GradedRep upper(page.rank);
  for (const auto& [key, rep] : page.entries) upper.add(key.second, rep);

  bool exact = true;
  for (const auto& [k1, r1] : page.entries) {
    for (const auto& [k2, r2] : page.entries) {
      if (k2.second != k1.second + 1 || k2.first <= k1.first) continue;
      for (const auto& [w, m] : r1.terms()) {
        if (m > 0 && r2.multiplicity(w) > 0) exact = false;
      }
    }
  }
  if (exact) return ExtAnswer(std::move(upper));

  // Per irreducible, an entry survives at least by what its two neighbours
  // cannot absorb.
  GradedRep lower(page.rank);
  std::set<DominantWeight> weights;
  for (const auto& [d, r] : upper.degrees()) {
    for (const auto& [w, m] : r.terms()) weights.insert(w);
  }
  for (const auto& w : weights) {
    for (const auto& [d, r] : upper.degrees()) {
      const Integer u = r.multiplicity(w);
      const Integer below = upper.at(d - 1).multiplicity(w);
      const Integer above = upper.at(d + 1).multiplicity(w);
      const Integer lo = u - std::max(below, Integer(0)) - std::max(above, Integer(0));
      if (lo > 0) lower.add(d, w, lo);
    }
  }
  VirtualRep chi = euler_characteristic(upper);
  return ExtAnswer(ExtBounds{std::move(lower), std::move(upper), std::move(chi)});
}

}  // namespace detail

/// H^•(Gr(k,n), obj). Exact for a single term; for complexes the isolation
/// rule of detail::resolve decides.
inline ExtAnswer cohomology_gr(const EquivariantObject& obj) {
  if (obj.space().is_ty()) {
    throw SpaceMismatch("cohomology_gr called on " + obj.space().name());
  }
  detail::FirstPage page{obj.space().n(), {}};
  for (const Term& t : obj.terms()) detail::accumulate_term_gr(t, t.degree, 0, page);
  return detail::resolve(page);
}

/// Ext^•(E, F) = H^•(E^∨ ⊗ F) on a Grassmannian.
inline ExtAnswer ext_gr(const EquivariantObject& e, const EquivariantObject& f) {
  e.check_space(f);
  if (e.space().is_ty()) throw SpaceMismatch("ext_gr called on " + e.space().name());
  return cohomology_gr(tensor(e.dual(), f));
}

// ---------------------------------------------------------------------------
// Pushforward along ζ: TY → G.

namespace detail {

/// Σ^μ V* for V = Λ²K^⊥, as a representation of GL(K^⊥) (exponents on K^⊥).
/// Of the two equivalent Jacobi-Trudi expansions, Σ^μ(Λ²E)* and
/// Σ^{-rev μ}(Λ²E), the one with fewer rows is used.
inline VirtualRep fiber_cohomology_rep(const DominantWeight& mu) {
  auto rows = [](const DominantWeight& w) {
    std::size_t r = 0;
    Entry size = 0;
    for (Entry e : w.entries()) {
      if (e != w.last()) ++r;
      size += e - w.last();
    }
    return std::make_pair(r, size);
  };
  const DominantWeight dual = dual_weight(mu);
  if (rows(mu) <= rows(dual)) return dualize(schur_of_wedge2(mu, 4));
  return schur_of_wedge2(dual, 4);
}

}  // namespace detail

/// Rζ_* of one TY term: relative BBW on the fiber P^5 = Gr(1, V), then
/// Σ^μ V* rewritten as Schur functors of K^⊥. The result sits in a single
/// position (term position + fiber degree).
inline EquivariantObject push_term(std::size_t n, const Term& t) {
  const Space g = Space::gr(n - 4, n);
  EquivariantObject out(g);
  std::vector<Entry> alpha{t.hy};
  alpha.insert(alpha.end(), t.fiber.entries().begin(), t.fiber.entries().end());
  BBWOutcome h = bbw_reduce(Weight(std::move(alpha)));
  if (!h) return out;
  const VirtualRep on_kperp = detail::fiber_cohomology_rep(h->weight);
  for (const auto& [gw, gm] : on_kperp.terms()) {
    const VirtualRep gammas = lr_product(t.bundle.gamma, gw);
    for (const auto& [lw, lm] : gammas.terms()) {
      out.add_term(SchurBundle{t.bundle.beta, lw}, 0, t.degree + h->degree,
                   t.coeff * (gm * lm));
    }
  }
  return out;
}

class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

/// With L = O(-H_Y) the tautological subline, ζ_*O(H_Y) = V^∨ = Λ²(W/K).
inline void projbundle_self_test(std::size_t n) {
  static std::mutex m;
  static std::set<std::size_t> done;
  std::lock_guard<std::mutex> lock(m);
  if (done.count(n)) return;
  const Space ty = Space::ty(n);
  Term line{trivial_bundle(ty.base), 1, DominantWeight::zeros(kFiberRank - 1), 0,
            VirtualRep::trivial(n)};
  EquivariantObject expected = EquivariantObject::bundle(
      Space::gr(n - 4, n), DominantWeight::zeros(n - 4), DominantWeight({0, 0, -1, -1}));
  if (!(push_term(n, line) == expected)) {
    throw ConventionError("projective bundle convention check failed for n=" +
                          std::to_string(n));
  }
  done.insert(n);
}

}  // namespace detail

/// ζ_*(E ⊗ O(t·H_Y)) for E on TY(n), as an object on Gr(n-4, n).
inline EquivariantObject projbundle_pushforward(std::size_t n, Entry t,
                                                const EquivariantObject& e) {
  if (!e.space().is_ty() || e.space().n() != n) {
    throw SpaceMismatch("projbundle_pushforward expects an object on ty(" +
                        std::to_string(n) + "), got " + e.space().name());
  }
  detail::projbundle_self_test(n);
  EquivariantObject out(Space::gr(n - 4, n));
  for (Term term : e.terms()) {
    term.hy += t;
    out += push_term(n, term);
  }
  return out;
}

/// ζ_*O(t·H_Y):
///   t >= 0:          S^t V^∨, in position 0
///   -5 <= t <= -1:   0
///   t <= -6:         S^{-t-6} V ⊗ det V, in position 5
inline EquivariantObject line_pushforward(std::size_t n, Entry t) {
  return projbundle_pushforward(n, t, EquivariantObject::structure_sheaf(Space::ty(n)));
}

/// Pulls an object on G = Gr(n-4, n) back to TY(n).
inline EquivariantObject pullback_to_ty(const EquivariantObject& e) {
  if (e.space().is_ty()) return e;
  const std::size_t n = e.space().n();
  if (e.space().base.k + 4 != n) {
    throw SpaceMismatch("only Gr(n-4,n) is the base of ty(n)");
  }
  EquivariantObject out(Space::ty(n));
  for (const Term& t : e.terms()) out.add_term(t.bundle, 0, t.degree, t.coeff);
  return out;
}

/// H^•(TY(n), obj). Every term is an irreducible homogeneous bundle, so its
/// pushforward is concentrated in one degree and splits as a direct sum on
/// G; only distinct term positions can interact.
inline ExtAnswer cohomology_ty(const EquivariantObject& obj) {
  if (!obj.space().is_ty()) {
    throw SpaceMismatch("cohomology_ty called on " + obj.space().name());
  }
  const std::size_t n = obj.space().n();
  detail::projbundle_self_test(n);
  detail::FirstPage page{n, {}};
  for (const Term& term : obj.terms()) {
    const EquivariantObject down = push_term(n, term);
    for (const Term& piece : down.terms()) {
      detail::accumulate_term_gr(piece, term.degree, 0, page);
    }
  }
  return detail::resolve(page);
}

inline ExtAnswer ext_ty(const EquivariantObject& e, const EquivariantObject& f) {
  e.check_space(f);
  if (!e.space().is_ty()) throw SpaceMismatch("ext_ty called on " + e.space().name());
  return cohomology_ty(tensor(e.dual(), f));
}

/// Ext on whichever space the objects live on.
inline ExtAnswer ext(const EquivariantObject& e, const EquivariantObject& f) {
  return e.space().is_ty() ? ext_ty(e, f) : ext_gr(e, f);
}

inline ExtAnswer cohomology(const EquivariantObject& obj) {
  return obj.space().is_ty() ? cohomology_ty(obj) : cohomology_gr(obj);
}

/// χ(TY(n), O(t·H_Y)).
inline Integer chi_ty(std::size_t n, Entry t) {
  return dimension(euler_characteristic(
      cohomology_ty(EquivariantObject::structure_sheaf(Space::ty(n)).twisted(0, t))));
}

/// Serre duality on Gr(k,n) (ω = O(-n)) at the level of graded dimensions:
/// dim Ext^i(E,F) = dim Ext^{d-i}(F, E(-n)). std::nullopt when either side is
/// only bounded.
inline std::optional<bool> serre_check(const EquivariantObject& e, const EquivariantObject& f) {
  const Space& s = e.space();
  if (s.is_ty()) throw SpaceMismatch("serre_check is for Grassmannians");
  e.check_space(f);
  const Entry d = static_cast<Entry>(s.dim());
  const Entry canonical = -static_cast<Entry>(s.n());
  ExtAnswer lhs = ext_gr(e, f);
  ExtAnswer rhs = ext_gr(f, e.twisted(canonical));
  if (!lhs.is_exact() || !rhs.is_exact()) return std::nullopt;
  auto a = graded_dimension(lhs.exact());
  auto b = graded_dimension(rhs.exact());
  std::map<Entry, Integer> b_flipped;
  for (const auto& [i, dim] : b) b_flipped[d - i] = dim;
  return a == b_flipped;
}

/// "0" or "H^0: ..., H^2: ...".
inline std::string format_graded(const GradedRep& g) {
  if (g.is_zero()) return "0";
  std::string s;
  for (const auto& [d, r] : g.degrees()) {
    if (!s.empty()) s += "; ";
    s += "H^" + std::to_string(d) + ": " + format_rep(r);
  }
  return s;
}

inline std::string format_answer(const ExtAnswer& a) {
  if (a.is_exact()) return format_graded(a.exact());
  return "bounds {lower " + format_graded(a.bounds().lower) + " | upper " +
         format_graded(a.bounds().upper) + " | euler " + format_rep(a.bounds().euler) + "}";
}

}  // namespace pfhpd
