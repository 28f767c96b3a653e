"""Parabolic and Billey-Postnikov (BP) decompositions.

Right decompositions write w = v u with v in W^J and u in W_J.  A left
decomposition w = u v (u in W_J, v in ^J W) is handled as the right
decomposition of w^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import ConstructionError, InternalInconsistencyError
from .order import bruhat_leq, is_chain_in_WJ, lower_interval_bruhat, poincare, poincare_coset, poly_mul
from .rootsys import RootSystem, leaves, sub_root_subset
from .weyl import (
    WeylElement,
    format_element,
    format_simple_subset,
    left_descents,
    longest_element,
    min_coset_rep,
    support,
)

RIGHT = "right"
LEFT = "left"


@dataclass(frozen=True)
class BPDecomposition:
    J: frozenset
    v: WeylElement
    u: WeylElement
    side: str = RIGHT
    is_bp: bool | None = None
    is_chain: bool | None = None
    is_grassmannian: bool | None = None

    @property
    def w(self) -> WeylElement:
        return self.v * self.u if self.side == RIGHT else self.u * self.v

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "J": format_simple_subset(self.J),
            "v": format_element(self.v),
            "u": format_element(self.u),
            "is_bp": self.is_bp,
            "is_chain": self.is_chain,
            "is_grassmannian": self.is_grassmannian,
        }


def _check_side(side):
    if side not in (RIGHT, LEFT):
        raise ConstructionError(f"side must be 'right' or 'left', got {side!r}")


def parabolic_decompose(w: WeylElement, J, side: str = RIGHT) -> BPDecomposition:
    _check_side(side)
    J = frozenset(J)
    if side == RIGHT:
        v = min_coset_rep(w, J)
        return BPDecomposition(J, v, v.inverse() * w, RIGHT)
    r = parabolic_decompose(w.inverse(), J, RIGHT)
    return BPDecomposition(J, r.v.inverse(), r.u.inverse(), LEFT)


def bp_conditions(w: WeylElement, J) -> tuple[bool, bool, bool]:
    """The three equivalent BP conditions for the right decomposition w = v u.

    (1) u is the Bruhat-maximum of [id, w] in W_J;
    (2) Poincare(w) = Poincare^J(v) * Poincare(u);
    (3) every generator of S(v) lying in J is a left descent of u.
    """
    J = frozenset(J)
    v = min_coset_rep(w, J)
    u = v.inverse() * w
    c3 = (support(v) & J) <= left_descents(u)
    phi_j = sub_root_subset(w.system, J).mask
    in_wj = [x for x in lower_interval_bruhat(w) if x.inv_mask & ~phi_j == 0]
    c1 = all(bruhat_leq(x, u) for x in in_wj)
    c2 = poincare(w) == poly_mul(poincare_coset(v, J), poincare(u))
    return c1, c2, c3


@lru_cache(maxsize=65536)
def _is_bp_right(w: WeylElement, J: frozenset, verify: bool) -> bool:
    if verify:
        c1, c2, c3 = bp_conditions(w, J)
        if not c1 == c2 == c3:
            raise InternalInconsistencyError(
                f"BP conditions disagree for w={format_element(w)}, J={sorted(J)}: "
                f"(1)={c1} (2)={c2} (3)={c3}"
            )
        return c3
    v = min_coset_rep(w, J)
    u = v.inverse() * w
    return (support(v) & J) <= left_descents(u)


def is_bp(w: WeylElement, J, side: str = RIGHT, verify: bool = False) -> bool:
    """BP test.  ``verify=True`` evaluates all three conditions and raises
    InternalInconsistencyError if they disagree; otherwise only condition (3)."""
    _check_side(side)
    target = w if side == RIGHT else w.inverse()
    return _is_bp_right(target, frozenset(J), verify)


def is_chain_bp(w: WeylElement, J, side: str = RIGHT, verify: bool = False) -> bool:
    if not is_bp(w, J, side, verify):
        return False
    target = w if side == RIGHT else w.inverse()
    v = min_coset_rep(target, frozenset(J))
    return is_chain_in_WJ(v, J)


def is_grassmannian_bp(w: WeylElement, J, verify: bool = False) -> bool:
    if not is_bp(w, J, RIGHT, verify):
        return False
    v = min_coset_rep(w, frozenset(J))
    return len(support(w)) == len(support(v)) + 1


def decompose(w: WeylElement, J, side: str = RIGHT, verify: bool = False) -> BPDecomposition:
    """Parabolic decomposition with all flags evaluated."""
    d = parabolic_decompose(w, J, side)
    bp = is_bp(w, d.J, side, verify)
    chain = bp and is_chain_bp(w, d.J, side)
    grass = bp and side == RIGHT and is_grassmannian_bp(w, d.J)
    return replace(d, is_bp=bp, is_chain=chain, is_grassmannian=grass)


def find_chain_bp(w: WeylElement, sides=(RIGHT, LEFT)) -> BPDecomposition | None:
    """First chain BP decomposition over J = S(w) minus a leaf; right side
    before left, leaves in index order."""
    S = support(w)
    for side in sides:
        for s in leaves(w.system, S):
            J = S - {s}
            if is_chain_bp(w, J, side):
                return decompose(w, J, side)
    return None


# --- the exceptional E-type elements ---------------------------------------


@dataclass(frozen=True)
class EKLIndex:
    """Index pair with 5 <= l < k <= 8.  S_k = {s_1..s_k}, J_k = S_k minus s_2."""

    k: int
    l: int

    def __post_init__(self):
        if not 5 <= self.l < self.k <= 8:
            raise ConstructionError(f"need 5 <= l < k <= 8, got k={self.k}, l={self.l}")

    @staticmethod
    def S(k: int) -> frozenset:
        return frozenset(range(k))

    @staticmethod
    def J(k: int) -> frozenset:
        return frozenset(range(k)) - {1}


@dataclass(frozen=True)
class EKLElement:
    index: EKLIndex
    v_l: WeylElement  # maximal element of W_{S_l}^{J_l}
    u_k: WeylElement  # maximal element of W_{J_k}
    w: WeylElement


def ekl_parts(sys: RootSystem, idx: EKLIndex) -> EKLElement:
    if sys.ctype.family != "E":
        raise ConstructionError(f"E-type catalogue needs type E, got {sys.ctype}")
    if idx.k > sys.rank:
        raise ConstructionError(f"k={idx.k} exceeds the rank of {sys.ctype}")
    u_k = longest_element(sys, EKLIndex.J(idx.k))
    v_l = min_coset_rep(longest_element(sys, EKLIndex.S(idx.l)), EKLIndex.J(idx.l))
    return EKLElement(idx, v_l, u_k, v_l * u_k)


def ekl_element(sys: RootSystem, idx: EKLIndex) -> WeylElement:
    """w_kl = v_l u_k."""
    return ekl_parts(sys, idx).w


@lru_cache(maxsize=None)
def ekl_catalogue(sys: RootSystem) -> dict:
    """(k, l) -> w_kl for every admissible pair inside this E-type system."""
    out = {}
    for k in range(6, sys.rank + 1):
        for l in range(5, k):
            out[(k, l)] = ekl_element(sys, EKLIndex(k, l))
    return out
