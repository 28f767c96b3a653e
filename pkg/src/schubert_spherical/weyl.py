"""Weyl group elements as permutations of the root table.

An element is stored as the permutation it induces on the ``2m`` roots (see
:class:`~schubert_spherical.rootsys.RootSystem` for the indexing).  This is
equivalent to its action matrix on the simple-root basis, which is exposed
as :attr:`WeylElement.action`; both determine the element uniquely, so
equality never depends on a choice of reduced word.
"""

from __future__ import annotations

import math
from functools import lru_cache

from . import config
from .errors import ConstructionError, ResourceCapError, SystemMismatchError
from .rootsys import RootSystem

SimpleSubset = frozenset


class WeylElement:
    __slots__ = ("system", "perm", "inv_mask", "rinv_mask", "_hash", "_inverse")

    def __init__(self, system: RootSystem, perm: tuple):
        self.system = system
        self.perm = perm
        m = system.n_pos
        nmask = 0
        imask = 0
        for k in range(m):
            img = perm[k]
            if img >= m:
                imask |= 1 << k
                # w(beta_k) = -beta_j, so beta_j = w(-beta_k) is in N(w)
                nmask |= 1 << (img - m)
        self.inv_mask = nmask
        self.rinv_mask = imask
        self._hash = hash(perm)
        self._inverse = None

    # -- identity and comparison --------------------------------------------

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm and (
            self.system is other.system or self.system == other.system
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeylElement({self.system.ctype}, {format_element(self)!r})"

    # -- group structure ----------------------------------------------------

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.system is not other.system and self.system != other.system:
            raise SystemMismatchError(f"cannot multiply elements of {self.system.ctype} and {other.system.ctype}")
        return WeylElement(self.system, tuple(map(self.perm.__getitem__, other.perm)))

    def inverse(self) -> "WeylElement":
        if self._inverse is None:
            inv = [0] * len(self.perm)
            for k, img in enumerate(self.perm):
                inv[img] = k
            self._inverse = WeylElement(self.system, tuple(inv))
            self._inverse._inverse = self
        return self._inverse

    def left_mul(self, i: int) -> "WeylElement":
        """s_i * self"""
        s = self.system.simple_perms[i]
        return WeylElement(self.system, tuple(map(s.__getitem__, self.perm)))

    def right_mul(self, i: int) -> "WeylElement":
        """self * s_i"""
        return WeylElement(self.system, tuple(map(self.perm.__getitem__, self.system.simple_perms[i])))

    # -- cached invariants --------------------------------------------------

    @property
    def length(self) -> int:
        return self.rinv_mask.bit_count()

    @property
    def action(self) -> tuple:
        """Integer matrix whose column j is w(alpha_j) in simple-root coordinates."""
        cols = [self.system.root(self.perm[j]) for j in range(self.system.rank)]
        return tuple(tuple(col[r] for col in cols) for r in range(self.system.rank))

    def is_identity(self) -> bool:
        return self.rinv_mask == 0

    def has_left_descent(self, i: int) -> bool:
        return bool(self.inv_mask >> i & 1)

    def has_right_descent(self, i: int) -> bool:
        return bool(self.rinv_mask >> i & 1)

    def apply(self, full_index: int) -> int:
        return self.perm[full_index]


def identity(sys: RootSystem) -> WeylElement:
    return WeylElement(sys, tuple(range(2 * sys.n_pos)))


def simple_reflection(sys: RootSystem, i: int) -> WeylElement:
    if not 0 <= i < sys.rank:
        raise ConstructionError(f"generator index {i} out of range for {sys.ctype}")
    return WeylElement(sys, sys.simple_perms[i])


def from_word(sys: RootSystem, word) -> WeylElement:
    """Product s_{i1} s_{i2} ... in the given order; words need not be reduced."""
    perm = list(range(2 * sys.n_pos))
    for i in word:
        if not 0 <= i < sys.rank:
            raise ConstructionError(f"generator index {i} out of range for {sys.ctype}")
        s = sys.simple_perms[i]
        perm = [perm[j] for j in s]
    return WeylElement(sys, tuple(perm))


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    return x * y


def inverse(x: WeylElement) -> WeylElement:
    return x.inverse()


def length(w: WeylElement) -> int:
    return w.length


def left_descents(w: WeylElement) -> SimpleSubset:
    """Simple indices i with l(s_i w) < l(w), i.e. alpha_i in N(w)."""
    return frozenset(i for i in range(w.system.rank) if w.inv_mask >> i & 1)


def right_descents(w: WeylElement) -> SimpleSubset:
    return frozenset(i for i in range(w.system.rank) if w.rinv_mask >> i & 1)


def reduced_word(w: WeylElement) -> tuple:
    """Lexicographically smallest reduced word, found by always stripping the
    smallest left descent."""
    word = []
    while w.inv_mask:
        i = (w.inv_mask & -w.inv_mask).bit_length() - 1
        # the lowest set bit of N(w) is a simple root because simple roots
        # occupy the first table slots
        if i >= w.system.rank:
            raise AssertionError("nonempty inversion set without a simple root")
        word.append(i)
        w = w.left_mul(i)
    return tuple(word)


def support(w: WeylElement) -> SimpleSubset:
    """S(w): the generators occurring in (any) reduced word of w."""
    return frozenset(reduced_word(w))


def min_coset_rep(w: WeylElement, J) -> WeylElement:
    """The minimal-length representative of the coset w W_J."""
    J = frozenset(J)
    while True:
        d = next((j for j in sorted(J) if w.rinv_mask >> j & 1), None)
        if d is None:
            return w
        w = w.right_mul(d)


def is_min_coset_rep(w: WeylElement, J) -> bool:
    return not any(w.rinv_mask >> j & 1 for j in J)


def longest_element(sys: RootSystem, J=None) -> WeylElement:
    """w_{0,J}, the unique longest element of W_J (all of W when J is None)."""
    J = range(sys.rank) if J is None else J
    return _longest(sys, frozenset(J))


@lru_cache(maxsize=4096)
def _longest(sys: RootSystem, J: frozenset) -> WeylElement:
    w = identity(sys)
    order = sorted(J)
    while True:
        a = next((j for j in order if not w.rinv_mask >> j & 1), None)
        if a is None:
            return w
        w = w.right_mul(a)


def in_parabolic(w: WeylElement, J) -> bool:
    return support(w) <= frozenset(J)


# --- type A one-line notation ---------------------------------------------


def _require_type_a(sys):
    if sys.ctype.family != "A":
        raise ConstructionError(f"one-line notation needs type A, got {sys.ctype}")


def perm_to_element(sys: RootSystem, p) -> WeylElement:
    """One-line permutation of 1..n (n = rank + 1) to a Weyl element of A_{n-1}."""
    _require_type_a(sys)
    p = list(p)
    n = sys.rank + 1
    if sorted(p) != list(range(1, n + 1)):
        raise ConstructionError(f"{p} is not a permutation of 1..{n}")
    word = []
    while True:
        i = next((k for k in range(n - 1) if p[k] > p[k + 1]), None)
        if i is None:
            break
        p[i], p[i + 1] = p[i + 1], p[i]
        word.append(i)
    return from_word(sys, reversed(word))


def element_to_perm(w: WeylElement) -> tuple:
    _require_type_a(w.system)
    n = w.system.rank + 1
    img = list(range(1, n + 1))
    # w = s_{i1} ... s_{ik} acting on positions: w(a) = s_{i1}(... s_{ik}(a))
    out = []
    word = reduced_word(w)
    for a in img:
        x = a
        for i in reversed(word):
            if x == i + 1:
                x = i + 2
            elif x == i + 2:
                x = i + 1
        out.append(x)
    return tuple(out)


# --- serialisation ---------------------------------------------------------


def format_word(sys: RootSystem, word) -> str:
    if not word:
        return "e"
    return " ".join(f"s{i + 1}" for i in word)


def format_element(w: WeylElement) -> str:
    """One-line notation for type A, lexicographically minimal reduced word otherwise."""
    if w.system.ctype.family == "A":
        p = element_to_perm(w)
        return "".join(map(str, p)) if len(p) <= 9 else ",".join(map(str, p))
    return format_word(w.system, reduced_word(w))


_G2_ALIASES = {"s": 0, "t": 1}


def parse_element(sys: RootSystem, text: str) -> WeylElement:
    """Accepts one-line permutations for type A (``4231`` or ``4,2,3,1``), and
    whitespace-separated generators ``s1 s2 ...`` for any type (``s t`` for G2)."""
    text = text.strip()
    if text in ("", "e", "id"):
        return identity(sys)
    if sys.ctype.family == "A" and (text.isdigit() or "," in text):
        parts = text.split(",") if "," in text else list(text)
        try:
            p = [int(x) for x in parts]
        except ValueError:
            raise ConstructionError(f"cannot parse permutation {text!r}") from None
        return perm_to_element(sys, p)
    word = []
    for tok in text.replace(",", " ").replace("*", " ").split():
        tok = tok.lower()
        if sys.ctype.family == "G" and tok in _G2_ALIASES:
            word.append(_G2_ALIASES[tok])
        elif tok.startswith("s") and tok[1:].isdigit():
            word.append(int(tok[1:]) - 1)
        else:
            raise ConstructionError(f"cannot parse generator {tok!r}")
    if any(not 0 <= i < sys.rank for i in word):
        raise ConstructionError(f"generator out of range for {sys.ctype} in {text!r}")
    return from_word(sys, word)


def parse_simple_subset(sys: RootSystem, text: str) -> SimpleSubset:
    """``s1,s3`` / ``a1 a3`` / ``1,3`` style lists of simple nodes (1-based)."""
    out = set()
    for tok in text.replace(",", " ").split():
        tok = tok.lower().lstrip("sa")
        if not tok.isdigit():
            raise ConstructionError(f"cannot parse simple node in {text!r}")
        i = int(tok) - 1
        if not 0 <= i < sys.rank:
            raise ConstructionError(f"node {i + 1} out of range for {sys.ctype}")
        out.add(i)
    return frozenset(out)


def format_simple_subset(J) -> list[str]:
    return [f"a{i + 1}" for i in sorted(J)]


# --- whole-group enumeration -----------------------------------------------

def group_order(sys: RootSystem) -> int:
    """|W| from the closed formulas, without enumerating."""
    fam, n = sys.ctype.family, sys.rank
    if fam == "A":
        return math.factorial(n + 1)
    if fam in "BC":
        return 2**n * math.factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[str(sys.ctype)]


def enumerate_group(sys: RootSystem, cap: int | None = None) -> list[WeylElement]:
    """All of W, breadth-first by length."""
    cap = config.LIMITS.interval_cap if cap is None else cap
    if group_order(sys) > cap:
        raise ResourceCapError(f"|W({sys.ctype})| = {group_order(sys)} exceeds cap {cap}")
    return list(_enumerate_group(sys, cap))


@lru_cache(maxsize=16)
def _enumerate_group(sys: RootSystem, cap: int) -> tuple:
    e = identity(sys)
    seen = {e}
    layer = [e]
    out = [e]
    while layer:
        nxt = []
        for w in layer:
            for i in range(sys.rank):
                if not w.rinv_mask >> i & 1:
                    x = w.right_mul(i)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
        if len(seen) > cap:
            raise ResourceCapError(f"|W({sys.ctype})| exceeds cap {cap}")
        out.extend(nxt)
        layer = nxt
    return tuple(out)


def parabolic_elements(sys: RootSystem, J) -> list[WeylElement]:
    """All elements of W_J, by length."""
    J = sorted(set(J))
    e = identity(sys)
    seen = {e}
    layer = [e]
    out = [e]
    while layer:
        nxt = []
        for w in layer:
            for i in J:
                if not w.rinv_mask >> i & 1:
                    x = w.right_mul(i)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
        out.extend(nxt)
        layer = nxt
    return out
