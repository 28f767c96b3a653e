"""Inversion sets N(w), I(w), simple inversions and the biclosed-set bijection."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, NotBiclosedError
from .rootsys import RootSubset, closure_violation, format_root
from .weyl import WeylElement, from_word, left_descents


@dataclass(frozen=True)
class InversionSet(RootSubset):
    """A RootSubset tagged with ``side``: "left" for N(w), "right" for I(w)."""

    side: str = "left"

    def pretty(self) -> list[str]:
        return [format_root(r) for r in self.roots()]


def inversions_left(w: WeylElement) -> InversionSet:
    """N(w) = positive roots sent negative by w^{-1}."""
    return InversionSet(w.inv_mask, w.system, "left")


def inversions_right(w: WeylElement) -> InversionSet:
    """I(w) = N(w^{-1}) = positive roots sent negative by w."""
    return InversionSet(w.rinv_mask, w.system, "right")


def simple_inversions(w: WeylElement) -> frozenset:
    """N_Delta(w), as 0-based simple indices (equal to the left descents)."""
    return left_descents(w)


def simple_inversions_via_covers(w: WeylElement) -> frozenset:
    """N_Delta(w) recomputed as the union of N_Delta over right weak covers.

    A simple reflection has only the identity below it, so for length one the
    union is empty and the reflection itself has to be added back.
    """
    out = set()
    for i in range(w.system.rank):
        if w.rinv_mask >> i & 1:
            out |= left_descents(w.right_mul(i))
    if w.length == 1:
        out |= {i for i in range(w.system.rank) if w.inv_mask >> i & 1}
    return frozenset(out)


def apply_to_mask(w: WeylElement, mask: int):
    """Image of a set of positive roots under w, as a mask, or None if some
    image is negative."""
    m = w.system.n_pos
    out = 0
    k = 0
    while mask:
        if mask & 1:
            img = w.perm[k]
            if img >= m:
                return None
            out |= 1 << img
        mask >>= 1
        k += 1
    return out


def element_from_biclosed(A: RootSubset) -> WeylElement:
    """The unique w with N(w) = A, by peeling simple roots off A."""
    sys = A.system
    mask = A.mask
    word = []
    while mask:
        simple = mask & ((1 << sys.rank) - 1)
        if not simple:
            break
        i = (simple & -simple).bit_length() - 1
        word.append(i)
        rest = mask & ~(1 << i)
        # s_i permutes the positive roots other than alpha_i
        mask = apply_to_mask(from_word(sys, [i]), rest)
    w = from_word(sys, word)
    if w.inv_mask != A.mask:
        _raise_not_biclosed(A)
    return w


def _raise_not_biclosed(A: RootSubset):
    sys = A.system
    pair = closure_violation(sys, A.mask)
    side = "closed"
    if pair is None:
        pair = closure_violation(sys, A.complement().mask)
        side = "coclosed"
    if pair is None:
        raise InternalInconsistencyError(f"biclosed set {A.pretty()} is not an inversion set")
    a, b = (format_root(sys.positive_roots[k]) for k in pair)
    raise NotBiclosedError(f"not {side}: cone of {a} and {b} leaves the set", pair=pair, side=side)


def check_concat(w: WeylElement, v: WeylElement, u: WeylElement) -> bool:
    """For w = v u, decide whether lengths add, and confirm that this happens
    exactly when N(w) is the disjoint union of N(v) and v(N(u))."""
    if v * u != w:
        raise ValueError(f"{w} is not the product of {v} and {u}")
    additive = w.length == v.length + u.length
    image = apply_to_mask(v, u.inv_mask)
    identity_holds = (
        image is not None and image & v.inv_mask == 0 and image | v.inv_mask == w.inv_mask
    )
    if additive != identity_holds:
        raise InternalInconsistencyError(
            f"length additivity ({additive}) disagrees with the inversion-set identity ({identity_holds})"
        )
    return additive
