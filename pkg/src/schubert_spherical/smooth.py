"""Smoothness of Schubert varieties X_w.

Rational smoothness is decided by palindromicity of the Poincare polynomial
of [id, w].  In simply-laced types rational smoothness and smoothness agree,
so types A, D, E get a smoothness verdict; in type A the pattern criterion
(avoid 4231 and 3412) is computed as well and must agree.  For B, C, F, G
only rational smoothness is reported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConstructionError, InternalInconsistencyError, UnsupportedTypeError
from .order import covers_bruhat, poincare
from .weyl import WeylElement, element_to_perm

PATTERN = "pattern-avoidance"
PALINDROMIC = "palindromic"
PETERSON = "peterson-transfer"

UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class SmoothnessReport:
    rationally_smooth: bool
    smooth: bool | None  # None: no smoothness criterion for this type
    method: str

    def __post_init__(self):
        if self.smooth and not self.rationally_smooth:
            raise InternalInconsistencyError("smooth but not rationally smooth")

    def to_json(self) -> dict:
        return {
            "rationally_smooth": self.rationally_smooth,
            "smooth": UNSUPPORTED if self.smooth is None else self.smooth,
            "method": self.method,
        }


def avoids_pattern(p, q) -> bool:
    """True iff no subsequence of p is order-isomorphic to q."""
    p, q = tuple(p), tuple(q)
    k = len(q)
    if sorted(q) != list(range(1, k + 1)):
        raise ConstructionError(f"pattern {q} is not a permutation of 1..{k}")
    if k > len(p):
        raise ConstructionError(f"pattern of length {k} is longer than {p}")
    target = tuple(sorted(range(k), key=lambda i: q[i]))
    for idx in itertools.combinations(range(len(p)), k):
        vals = [p[i] for i in idx]
        if tuple(sorted(range(k), key=lambda i: vals[i])) == target:
            return False
    return True


def is_palindromic(coeffs) -> bool:
    return list(coeffs) == list(coeffs)[::-1]


@lru_cache(maxsize=65536)
def is_rationally_smooth(w: WeylElement) -> bool:
    return is_palindromic(poincare(w))


def pattern_smooth(w: WeylElement) -> bool:
    p = element_to_perm(w)
    if len(p) < 4:
        return True
    return avoids_pattern(p, (4, 2, 3, 1)) and avoids_pattern(p, (3, 4, 1, 2))


@lru_cache(maxsize=65536)
def is_smooth(w: WeylElement) -> SmoothnessReport:
    fam = w.system.ctype.family
    rs = is_rationally_smooth(w)
    if fam == "A":
        by_pattern = pattern_smooth(w)
        if by_pattern != rs:
            raise InternalInconsistencyError(
                f"pattern criterion ({by_pattern}) and palindromicity ({rs}) disagree on {w}"
            )
        return SmoothnessReport(rs, by_pattern, PATTERN)
    if fam in "DE":
        return SmoothnessReport(rs, rs, PETERSON)
    return SmoothnessReport(rs, None, PALINDROMIC)


def smooth_divisors(w: WeylElement) -> list[WeylElement]:
    """Bruhat covers x of w (codimension-one Schubert subvarieties) with X_x smooth."""
    if not w.system.ctype.simply_laced:
        raise UnsupportedTypeError(f"smoothness is not decided in type {w.system.ctype}")
    if not is_smooth(w).smooth:
        raise ValueError(f"X_w is not smooth for w = {w}")
    return [x for x in covers_bruhat(w) if is_smooth(x).smooth]
