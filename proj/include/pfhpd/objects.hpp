#pragma once

// Named objects: the triple E_0, E_1, E_2 on Gr(2,n) and the triple
// F_0, F_1, F_2 on TY(n) together with their duals and mutations.

#include "pfhpd/cohom.hpp"

#include <string>

namespace pfhpd {

namespace detail {

inline DominantWeight last_entries(std::size_t rank, std::size_t count, Entry value) {
  std::vector<Entry> v(rank, 0);
  for (std::size_t i = rank - count; i < rank; ++i) v[i] = value;
  return DominantWeight(std::move(v));
}

inline VirtualRep rep_w(std::size_t n) {
  return VirtualRep::irreducible(last_entries(n, 1, -1));
}

inline VirtualRep rep_sym2_w(std::size_t n) {
  return VirtualRep::irreducible(last_entries(n, 1, -2));
}

}  // namespace detail

/// W as a GL(W)-representation (on W*: Σ^{(0,...,0,-1)}).
inline VirtualRep rep_W(std::size_t n) { return detail::rep_w(n); }

/// E_k = S^k U on Gr(2,n), k = 0,1,2.
inline EquivariantObject object_E(std::size_t n, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("E_k needs k in {0,1,2}");
  return EquivariantObject::bundle(Space::gr(2, n), DominantWeight({0, -k}),
                                   DominantWeight::zeros(n - 2));
}

/// Λ^k(W/K) on Gr(n-4, n) (or any Gr(k', n) with quotient of rank >= k).
inline EquivariantObject wedge_quotient(Space space, std::size_t k) {
  const std::size_t q = space.base.perp_rank();
  if (k > q) return EquivariantObject::zero(space);
  return EquivariantObject::bundle(space, DominantWeight::zeros(space.base.k),
                                   detail::last_entries(q, k, -1));
}

/// The cokernel Q = V/L of the tautological line L = O(-H_Y) ⊂ V = Λ²K^⊥.
inline EquivariantObject tautological_quotient(std::size_t n) {
  EquivariantObject q(Space::ty(n));
  q.add_term(Term{trivial_bundle(q.space().base), 0, DominantWeight({0, 0, 0, 0, -1}), 0,
                  VirtualRep::trivial(n)});
  return q;
}

/// F_2 = O, F_1 = W/K, F_0 = Λ²(W/K) / O(H_G - H_Y) on TY(n). Since
/// Λ²(W/K) = Λ²K^⊥ ⊗ (det K^⊥)^{-1}, the bundle F_0 is Q ⊗ (det K^⊥)^{-1}.
inline EquivariantObject object_F(std::size_t n, int k) {
  const Space ty = Space::ty(n);
  switch (k) {
    case 2:
      return EquivariantObject::structure_sheaf(ty);
    case 1:
      return wedge_quotient(ty, 1);
    case 0:
      return tensor(tautological_quotient(n),
                    EquivariantObject::bundle(ty, DominantWeight::zeros(n - 4),
                                              DominantWeight::constant(4, -1)));
    default:
      throw std::invalid_argument("F_k needs k in {0,1,2}");
  }
}

/// F_0 as the two-term complex {O(H_G - H_Y) → Λ²(W/K)}. The first term is
/// written as (det K^⊥)^{-1}(-H_Y) so that the differential, induced by
/// O(-H_Y) ⊂ Λ²K^⊥, is GL(W)-equivariant.
inline EquivariantObject object_F0_resolution(std::size_t n) {
  const Space ty = Space::ty(n);
  EquivariantObject f = wedge_quotient(ty, 2);
  f += EquivariantObject::bundle(ty, DominantWeight::zeros(n - 4),
                                 DominantWeight::constant(4, -1), -1, -1);
  return f;
}

inline EquivariantObject object_F_dual(std::size_t n, int k) { return object_F(n, k).dual(); }

/// K = U on TY(n), the rank n-4 tautological bundle pulled back from G.
inline EquivariantObject object_K(std::size_t n) {
  return EquivariantObject::bundle(Space::ty(n), detail::last_entries(n - 4, 1, -1),
                                   DominantWeight::zeros(4));
}

/// F'_2 = F_2, F'_1 = {W ⊗ F_2 → F_1}, F'_0 = {S²W ⊗ F_2 → W ⊗ F_1 → F_0}.
inline EquivariantObject object_F_mutated(std::size_t n, int k) {
  switch (k) {
    case 2:
      return object_F(n, 2);
    case 1:
      return object_F(n, 2).times(rep_W(n)).shifted(1) + object_F(n, 1);
    case 0:
      return object_F(n, 2).times(detail::rep_sym2_w(n)).shifted(2) +
             object_F(n, 1).times(rep_W(n)).shifted(1) + object_F(n, 0);
    default:
      throw std::invalid_argument("F'_k needs k in {0,1,2}");
  }
}

/// The images 'F_k of E_k: 'F_0 = F_0^*, 'F_1 = {W ⊗ F_0^* → F_1^*},
/// 'F_2 = {S²W ⊗ F_0^* → W ⊗ F_1^* → F_2^*}.
inline EquivariantObject object_F_image(std::size_t n, int k) {
  switch (k) {
    case 0:
      return object_F_dual(n, 0);
    case 1:
      return object_F_dual(n, 0).times(rep_W(n)).shifted(1) + object_F_dual(n, 1);
    case 2:
      return object_F_dual(n, 0).times(detail::rep_sym2_w(n)).shifted(2) +
             object_F_dual(n, 1).times(rep_W(n)).shifted(1) + object_F_dual(n, 2);
    default:
      throw std::invalid_argument("'F_k needs k in {0,1,2}");
  }
}

/// S^m W* as a representation.
inline VirtualRep rep_sym_dual(std::size_t n, Entry m) {
  if (m < 0) return VirtualRep(n);
  return VirtualRep::irreducible(DominantWeight::symmetric(n, m));
}

/// Λ^m W as a representation.
inline VirtualRep rep_wedge_W(std::size_t n, std::size_t m) {
  if (m > n) return VirtualRep(n);
  return VirtualRep::irreducible(detail::last_entries(n, m, -1));
}

}  // namespace pfhpd
