"""Bruhat order, weak orders, lower intervals and Poincare polynomials."""

from __future__ import annotations

from functools import lru_cache

from . import config
from .errors import NotInQuotientError, ResourceCapError, SystemMismatchError
from .rootsys import RootSystem
from .weyl import WeylElement, enumerate_group, group_order, identity, is_min_coset_rep, right_descents


@lru_cache(maxsize=None)
def reflections(sys: RootSystem) -> tuple:
    """``t[k]`` is the reflection in the k-th positive root."""
    m = sys.n_pos
    out = [None] * m
    for i in range(sys.rank):
        out[i] = WeylElement(sys, sys.simple_perms[i])
    heights = [sum(r) for r in sys.positive_roots]
    for k in sorted(range(sys.rank, m), key=lambda k: heights[k]):
        # some simple reflection lowers the height of a non-simple positive root
        for i in range(sys.rank):
            j = sys.reflection_table[k][i]
            if heights[j] < heights[k]:
                s = out[i]
                out[k] = s * out[j] * s
                break
    return tuple(out)


def _check(x, w):
    if x.system != w.system:
        raise SystemMismatchError(f"{x.system.ctype} vs {w.system.ctype}")


def bruhat_leq(x: WeylElement, w: WeylElement) -> bool:
    """x <= w in Bruhat order, by descending along left descents of w.

    For s a left descent of w: if s is also a left descent of x then
    x <= w iff sx <= sw, otherwise x <= w iff x <= sw.
    """
    _check(x, w)
    while True:
        lx, lw = x.length, w.length
        if lx > lw:
            return False
        if lx == 0:
            return True
        if lx == lw:
            return x == w
        mask = w.inv_mask
        i = (mask & -mask).bit_length() - 1
        if x.inv_mask >> i & 1:
            x = x.left_mul(i)
        w = w.left_mul(i)


def bruhat_less(x: WeylElement, w: WeylElement) -> bool:
    return x != w and bruhat_leq(x, w)


def weak_leq_right(x: WeylElement, w: WeylElement) -> bool:
    """x <=_R w (w = x s_1 ... s_k, lengths adding), i.e. N(x) inside N(w)."""
    _check(x, w)
    return x.inv_mask & ~w.inv_mask == 0


def weak_leq_left(x: WeylElement, w: WeylElement) -> bool:
    _check(x, w)
    return x.rinv_mask & ~w.rinv_mask == 0


def covers_weak_right(w: WeylElement) -> list[WeylElement]:
    return [w.right_mul(i) for i in sorted(right_descents(w))]


def covers_weak_left(w: WeylElement) -> list[WeylElement]:
    return [w.left_mul(i) for i in range(w.system.rank) if w.inv_mask >> i & 1]


def covers_bruhat(w: WeylElement) -> list[WeylElement]:
    """Elements covered by w: w t for reflections t dropping the length by one."""
    ts = reflections(w.system)
    target = w.length - 1
    out = []
    for k in range(w.system.n_pos):
        if w.rinv_mask >> k & 1:
            x = w * ts[k]
            if x.length == target:
                out.append(x)
    return out


class BruhatTable:
    """Every lower interval [id, w] of a small group as a bitset over a fixed
    enumeration of W, built bottom-up: [id, w] = {w} plus the union of the
    intervals of the elements w covers."""

    def __init__(self, sys: RootSystem):
        self.elements = tuple(enumerate_group(sys))
        self.index = {w: k for k, w in enumerate(self.elements)}
        top = max(w.length for w in self.elements)
        by_length = [0] * (top + 1)
        below = [0] * len(self.elements)
        # enumerate_group lists W by length, so covers come first
        for k, w in enumerate(self.elements):
            by_length[w.length] |= 1 << k
            acc = 1 << k
            for x in covers_bruhat(w):
                acc |= below[self.index[x]]
            below[k] = acc
        self.below = tuple(below)
        self.by_length = tuple(by_length)
        self._quotients = {}

    def interval_mask(self, w: WeylElement) -> int:
        return self.below[self.index[w]]

    def quotient_mask(self, J: frozenset) -> int:
        """Bitset of W^J."""
        if J not in self._quotients:
            jmask = sum(1 << j for j in J)
            self._quotients[J] = sum(1 << k for k, x in enumerate(self.elements) if not x.rinv_mask & jmask)
        return self._quotients[J]

    def grade(self, mask: int, top: int) -> list[int]:
        return [(mask & self.by_length[k]).bit_count() for k in range(top + 1)]

    def members(self, mask: int) -> frozenset:
        out = []
        k = 0
        while mask:
            low = mask & -mask
            k = low.bit_length() - 1
            out.append(self.elements[k])
            mask ^= low
        return frozenset(out)


@lru_cache(maxsize=None)
def _build_table(sys: RootSystem) -> BruhatTable:
    return BruhatTable(sys)


def bruhat_table(sys: RootSystem) -> BruhatTable | None:
    """The interval table for ``sys`` if |W| is within ``LIMITS.table_cap``."""
    if group_order(sys) > min(config.LIMITS.table_cap, config.LIMITS.interval_cap):
        return None
    return _build_table(sys)


def lower_interval_bruhat(w: WeylElement, cap: int | None = None) -> frozenset:
    """[id, w] in Bruhat order, enumerated level by level through covers."""
    cap = config.LIMITS.interval_cap if cap is None else cap
    table = bruhat_table(w.system)
    if table is not None:
        return table.members(table.interval_mask(w))
    return _interval(w, None, cap)


def quotient_interval(v: WeylElement, J, cap: int | None = None) -> frozenset:
    """[id, v] intersected with W^J, for v in W^J."""
    J = frozenset(J)
    if not is_min_coset_rep(v, J):
        raise NotInQuotientError(f"{v} is not a minimal representative for J={sorted(J)}")
    cap = config.LIMITS.interval_cap if cap is None else cap
    table = bruhat_table(v.system)
    if table is not None:
        return table.members(table.interval_mask(v) & table.quotient_mask(J))
    return _interval(v, J, cap)


@lru_cache(maxsize=2048)
def _interval(w: WeylElement, J, cap: int) -> frozenset:
    # the Bruhat order on W^J is graded by length, so walking down through
    # covers that stay inside W^J reaches all of [id, w]^J
    ts = reflections(w.system)
    m = w.system.n_pos
    Jmask = 0 if J is None else sum(1 << j for j in J)
    seen = {w}
    layer = [w]
    while layer:
        nxt = set()
        for y in layer:
            target = y.length - 1
            rin = y.rinv_mask
            for k in range(m):
                if rin >> k & 1:
                    x = y * ts[k]
                    if x.length == target and not x.rinv_mask & Jmask and x not in seen:
                        nxt.add(x)
        seen.update(nxt)
        if len(seen) > cap:
            raise ResourceCapError(f"interval below {w} exceeds cap {cap}")
        layer = list(nxt)
    return frozenset(seen)


def grade(elements, top: int) -> list[int]:
    coeffs = [0] * (top + 1)
    for x in elements:
        coeffs[x.length] += 1
    return coeffs


def poincare(w: WeylElement, cap: int | None = None) -> list[int]:
    """Rank generating function of [id, w], constant term first."""
    table = bruhat_table(w.system)
    if table is not None:
        return table.grade(table.interval_mask(w), w.length)
    return grade(lower_interval_bruhat(w, cap), w.length)


def poincare_coset(v: WeylElement, J, cap: int | None = None) -> list[int]:
    """Rank generating function of [id, v] in W^J."""
    J = frozenset(J)
    table = bruhat_table(v.system)
    if table is not None:
        if not is_min_coset_rep(v, J):
            raise NotInQuotientError(f"{v} is not a minimal representative for J={sorted(J)}")
        return table.grade(table.interval_mask(v) & table.quotient_mask(J), v.length)
    return grade(quotient_interval(v, J, cap), v.length)


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def is_chain_in_WJ(v: WeylElement, J) -> bool:
    """Is [id, v] in W^J totally ordered?  Requires v in W^J.

    Bruhat order on W^J is graded by length, so the interval is a chain
    exactly when every length 0..l(v) occurs once.
    """
    return all(c == 1 for c in poincare_coset(v, J))


def maximal_chains_weak_right(sys: RootSystem, elements) -> list[list[WeylElement]]:
    """All maximal chains id = x_0 <_R ... <_R x_k of a finite lower set in
    right weak order, following covers upwards."""
    elements = set(elements)
    ups = {x: [y for y in elements if y.length == x.length + 1 and weak_leq_right(x, y)] for x in elements}
    chains = []

    def walk(path):
        nxt = ups[path[-1]]
        if not nxt:
            chains.append(list(path))
            return
        for y in nxt:
            walk(path + [y])

    walk([identity(sys)])
    return chains
