"""Stabilizer parabolics of Schubert varieties, tracked by their simple roots.

P(w) is generated by B and the s_alpha with alpha in N_Delta(w); its Levi
factor L(w) containing T is determined by the same set.  No group objects
are built: a Levi is just a set of simple indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInQuotientError, NotWeakBelowError
from .inversion import apply_to_mask, simple_inversions
from .order import weak_leq_right
from .rootsys import sub_root_subset
from .weyl import WeylElement, format_simple_subset, is_min_coset_rep


@dataclass(frozen=True)
class LeviSupport:
    simples: frozenset

    def names(self) -> list[str]:
        return format_simple_subset(self.simples)

    def __contains__(self, i):
        return i in self.simples

    def __len__(self):
        return len(self.simples)


def levi_support(w: WeylElement) -> LeviSupport:
    return LeviSupport(simple_inversions(w))


def coset_stabilizer_support(v: WeylElement, K) -> frozenset:
    """Simple roots alpha with v^{-1}(alpha) in Phi^- or Phi_K, for v in W^K.

    These generate (with B) the stabilizer of the Schubert variety of v in G/P_K.
    """
    K = frozenset(K)
    if not is_min_coset_rep(v, K):
        raise NotInQuotientError(f"{v} is not in W^K for K={sorted(K)}")
    sys = v.system
    m = sys.n_pos
    kmask = sub_root_subset(sys, K).mask
    inv = v.inverse()
    out = set()
    for i in range(sys.rank):
        img = inv.perm[i]
        k = img - m if img >= m else img
        if img >= m or kmask >> k & 1:
            out.add(i)
    return frozenset(out)


def stab_strictness_witness(v: WeylElement, w: WeylElement):
    """For v <=_R w with w = v u: a positive-root index k in N(u) with v(beta_k)
    simple, or None."""
    if not weak_leq_right(v, w):
        raise NotWeakBelowError(f"{v} is not below {w} in right weak order")
    u = v.inverse() * w
    sys = v.system
    mask = u.inv_mask
    for k in range(sys.n_pos):
        if mask >> k & 1 and v.perm[k] < sys.rank:
            return k
    return None


def check_stab_monotone(v: WeylElement, w: WeylElement) -> bool:
    """P(v) is contained in P(w), strictly exactly when a strictness witness exists."""
    witness = stab_strictness_witness(v, w)
    nv, nw = simple_inversions(v), simple_inversions(w)
    if not nv <= nw:
        return False
    # also cross-check the disjoint-union description of N(w)
    u = v.inverse() * w
    image = apply_to_mask(v, u.inv_mask)
    if image is None or image | v.inv_mask != w.inv_mask:
        return False
    return (nv < nw) == (witness is not None)
