"""Sphericity of Schubert varieties X_w for the Levi factor L(w) of their stabilizer.

The decision procedure only ever certifies: every positive verdict carries a
certificate tree whose leaves are either homogeneity facts (maximal parabolic,
toral cell) or lookups in the classification tables of spherical Levi actions
on flag varieties.  The single negative verdict is the one for w0 s_i in
type A with i an interior node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar

from . import config
from .bp import EKLIndex, decompose, ekl_catalogue, is_chain_bp
from .errors import ConstructionError, InternalInconsistencyError, ResourceCapError, SystemMismatchError
from .parastab import LeviSupport, levi_support
from .rootsys import RootSystem, classify_component, components, leaves, sub_root_subset
from .smooth import is_smooth
from .weyl import (
    WeylElement,
    format_element,
    format_simple_subset,
    left_descents,
    longest_element,
    min_coset_rep,
    right_descents,
    support,
)

SPHERICAL = "spherical"
NOT_SPHERICAL = "not_spherical"
UNKNOWN = "unknown"


# --- classification tables --------------------------------------------------


@dataclass(frozen=True)
class PairTableQuery:
    """Is G/P_I x G/P_J spherical for G of the given simple type?

    ``Ic`` and ``Jc`` are the complements of I and J, as 0-based indices in
    the standard labeling of the type.  Equivalently: does the Levi of P_I act
    spherically on G/P_J.
    """

    family: str
    rank: int
    Ic: frozenset
    Jc: frozenset

    def __post_init__(self):
        object.__setattr__(self, "Ic", frozenset(self.Ic))
        object.__setattr__(self, "Jc", frozenset(self.Jc))
        nodes = set(range(self.rank))
        if not (self.Ic <= nodes and self.Jc <= nodes):
            raise ConstructionError(f"Ic={sorted(self.Ic)}, Jc={sorted(self.Jc)} not inside {self.family}{self.rank}")

    def swapped(self) -> "PairTableQuery":
        return PairTableQuery(self.family, self.rank, self.Jc, self.Ic)

    def to_json(self) -> dict:
        return {
            "type": f"{self.family}{self.rank}",
            "Ic": [f"s{i + 1}" for i in sorted(self.Ic)],
            "Jc": [f"s{i + 1}" for i in sorted(self.Jc)],
        }


def _one_based(s):
    return frozenset(i + 1 for i in s)


def _mwz_case_oriented(n, ic, jc):
    if ic in (frozenset(), {1}, {n}):
        return 1
    if ic in ({2}, {n - 1}) and len(jc) == 2:
        return 2
    if len(ic) == 1 and len(jc) == 1:
        return 3
    if len(ic) == 1 and len(jc) == 2:
        a, b = sorted(jc)
        if 1 < b < n and a == 1:
            return 4
        if 1 < a < n and b == a + 1:
            return 4
        if 1 < a < n and b == n:
            return 4
    return None


def mwz_typeA_case(n: int, q: PairTableQuery):
    """Matching case number (1-4) of the type A table, or None."""
    if q.family != "A" or q.rank != n:
        raise ConstructionError(f"type A table queried with {q.family}{q.rank}")
    ic, jc = _one_based(q.Ic), _one_based(q.Jc)
    return _mwz_case_oriented(n, ic, jc) or _mwz_case_oriented(n, jc, ic)


def mwz_typeA_pair(n: int, q: PairTableQuery) -> bool:
    return mwz_typeA_case(n, q) is not None


def _stembridge_case_oriented(n, ic, jc):
    if ic == {n}:
        if len(jc) == 1 or (len(jc) == 2 and (1 in jc or 2 in jc)):
            return 1
    if ic in ({1}, {2}):
        if jc < {1, 2, n} or jc <= {n - 1, n} or jc == {n - 2}:
            return 2
    if n == 4 and ((ic == {1} and jc == {2, 3}) or (ic == {2} and jc == {1, 3})):
        return 3
    return None


def stembridge_typeD_case(n: int, q: PairTableQuery):
    """Matching case number of the type D table, or None.

    Nodes 1 and 2 are the two fork nodes, both attached to node 3, and the
    chain 3-4-...-n ends in node n.  An empty complement means one factor is
    a point; that is reported as case 0.
    """
    if q.family != "D" or q.rank != n or n < 4:
        raise ConstructionError(f"type D table queried with {q.family}{q.rank}")
    ic, jc = _one_based(q.Ic), _one_based(q.Jc)
    if not ic or not jc:
        return 0
    return _stembridge_case_oriented(n, ic, jc) or _stembridge_case_oriented(n, jc, ic)


def stembridge_typeD_pair(n: int, q: PairTableQuery) -> bool:
    return stembridge_typeD_case(n, q) is not None


def pair_table_lookup(q: PairTableQuery):
    """(table name, case id) certifying sphericity, or None if no table applies
    or the table rejects."""
    if q.family == "A":
        case = mwz_typeA_case(q.rank, q)
        return None if case is None else ("mwz", case)
    if q.family == "D":
        case = stembridge_typeD_case(q.rank, q)
        return None if case is None else ("stembridge", case)
    if not q.Ic or not q.Jc:
        return ("trivial", 0)
    return None


def _brundan_removable(family: str, rank: int) -> frozenset:
    """0-based nodes whose removal gives a spherical Levi of the simple type."""
    if family == "A":
        return frozenset(range(rank))
    if family in "BC":
        return frozenset({0, rank - 1})
    if family == "D":
        return frozenset({0, 1, rank - 1})
    if family == "E":
        return {6: frozenset({1, 5}), 7: frozenset({6}), 8: frozenset()}[rank]
    return frozenset()


def brundan_spherical_levi(family: str, rank: int, I) -> bool:
    """Is the standard Levi with simple roots I spherical in the simple group
    of the given type?"""
    I = frozenset(I)
    if not I <= set(range(rank)):
        raise ConstructionError(f"I={sorted(I)} is not inside {family}{rank}")
    missing = frozenset(range(rank)) - I
    if not missing:
        return True
    if len(missing) > 1:
        return False
    (node,) = missing
    return node in _brundan_removable(family, rank)


def toral_cell_test(w: WeylElement) -> bool:
    """I(w) inside the root subsystem spanned by N_Delta(w)."""
    phi = sub_root_subset(w.system, left_descents(w)).mask
    return w.rinv_mask & ~phi == 0


# --- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class MaximalParabolic:
    kind: ClassVar[str] = "MaximalParabolic"
    J: frozenset

    def params(self):
        return {"J": format_simple_subset(self.J)}


@dataclass(frozen=True)
class ToralCell:
    kind: ClassVar[str] = "ToralCell"

    def params(self):
        return {}


@dataclass(frozen=True)
class ChainBPFibration:
    kind: ClassVar[str] = "ChainBPFibration"
    J: frozenset
    v: WeylElement
    u: WeylElement
    leaf: int
    query: PairTableQuery
    table: str
    case: int

    @property
    def case_id(self) -> str:
        return f"{self.table}:{self.case}"

    def params(self):
        return {
            "J": format_simple_subset(self.J),
            "leaf": f"s{self.leaf + 1}",
            "v": format_element(self.v),
            "u": format_element(self.u),
            "pair": self.query.to_json(),
            "table_case": self.case_id,
        }


@dataclass(frozen=True)
class EReduction:
    kind: ClassVar[str] = "EReduction"
    k: int
    l: int
    inverse: bool

    def params(self):
        return {"k": self.k, "l": self.l, "inverse": self.inverse}


@dataclass(frozen=True)
class KempfTransfer:
    """``variant`` is "descent" (inner certificate for w s_alpha, one shorter)
    or "quotient" (w s_alpha is a longest element and the image G/P_alpha is
    certified by a table lookup)."""

    kind: ClassVar[str] = "KempfTransfer"
    alpha: int
    variant: str
    query: PairTableQuery | None = None
    table: str | None = None
    case: int | None = None

    @property
    def case_id(self):
        return None if self.table is None else f"{self.table}:{self.case}"

    def params(self):
        out = {"alpha": f"a{self.alpha + 1}", "variant": self.variant}
        if self.query is not None:
            out["pair"] = self.query.to_json()
            out["table_case"] = self.case_id
        return out


@dataclass(frozen=True)
class NegativeClassification:
    kind: ClassVar[str] = "NegativeClassification"
    i: int
    query: PairTableQuery
    table_accepts: bool

    def params(self):
        return {
            "i": self.i + 1,
            "pair": self.query.to_json(),
            "Jc_size": len(self.query.Jc),
            "mwz_accepts": self.table_accepts,
        }


@dataclass(frozen=True)
class Unknown:
    kind: ClassVar[str] = "Unknown"

    def params(self):
        return {}


@dataclass(frozen=True)
class SphericalCertificate:
    element: WeylElement
    verdict: str
    reason: object
    levi: LeviSupport
    children: tuple = field(default=())

    def __post_init__(self):
        if self.verdict not in (SPHERICAL, NOT_SPHERICAL, UNKNOWN):
            raise ConstructionError(f"bad verdict {self.verdict!r}")
        if self.verdict == SPHERICAL and isinstance(self.reason, (Unknown, NegativeClassification)):
            raise InternalInconsistencyError(f"spherical verdict with reason {self.reason.kind}")

    @property
    def kind(self) -> str:
        return self.reason.kind

    def chain(self) -> list["SphericalCertificate"]:
        """This certificate followed by its descendants along first children."""
        out = [self]
        while out[-1].children:
            out.append(out[-1].children[0])
        return out

    def to_json(self) -> dict:
        return {
            "element": format_element(self.element),
            "verdict": self.verdict,
            "reason": {"kind": self.reason.kind, **self.reason.params()},
            "levi": self.levi.names(),
            "children": [c.to_json() for c in self.children],
        }


# --- the decision procedure -------------------------------------------------


def decide_spherical(sys: RootSystem, w: WeylElement) -> SphericalCertificate:
    """Certify (or refute, in the one known negative family) that X_w is
    spherical for L(w)."""
    if w.system != sys:
        raise SystemMismatchError(f"element of {w.system.ctype} given with system {sys.ctype}")
    return _decide(w, 0)


_CACHE: dict = {}


def clear_cache():
    _CACHE.clear()


def _decide(w: WeylElement, depth: int) -> SphericalCertificate:
    hit = _CACHE.get(w)
    if hit is not None:
        return hit
    if depth > config.LIMITS.max_transfer_depth:
        raise ResourceCapError(f"Kempf-transfer recursion deeper than {config.LIMITS.max_transfer_depth}")
    cert = _evaluate(w, depth)
    _CACHE[w] = cert
    return cert


def _evaluate(w: WeylElement, depth: int) -> SphericalCertificate:
    sys = w.system
    # (a) everything below only looks at the support S(w) and its diagram
    S = support(w)
    levi = levi_support(w)

    def make(verdict, reason, children=()):
        return SphericalCertificate(w, verdict, reason, levi, tuple(children))

    # (b)
    if w == longest_element(sys, S):
        return make(SPHERICAL, MaximalParabolic(S))
    # (c)
    if toral_cell_test(w):
        return make(SPHERICAL, ToralCell())
    # (d)
    neg = _negative_type_a(w, S)
    if neg is not None:
        return make(NOT_SPHERICAL, neg)
    # (e)
    if sys.ctype.simply_laced and is_smooth(w).smooth:
        found = _smooth_chain_certificate(w, S)
        if found is not None:
            return make(SPHERICAL, *found)
    # (f)
    found = _kempf(w, S, depth)
    if found is not None:
        return make(SPHERICAL, *found)
    return make(UNKNOWN, Unknown())


def _negative_type_a(w: WeylElement, S):
    sys = w.system
    if sys.ctype.family != "A" or len(components(sys, S)) != 1 or len(S) < 4:
        return None
    top = longest_element(sys, S)
    comp = classify_component(sys, S)
    for i in sorted(S):
        if top.right_mul(i) != w:
            continue
        label = comp.label_of(i)
        if not 1 < label < comp.rank:
            return None
        nd = left_descents(w)
        q = PairTableQuery(
            "A",
            comp.rank,
            {comp.label_of(j) - 1 for j in S - nd},
            {comp.label_of(j) - 1 for j in S - {i}},
        )
        accepts = mwz_typeA_pair(comp.rank, q)
        if accepts:
            raise InternalInconsistencyError(f"type A table accepts {q} for w0 s_{label}")
        return NegativeClassification(i, q, accepts)
    return None


def _catalogue_match(w: WeylElement):
    for (k, l), x in ekl_catalogue(w.system).items():
        if w == x:
            return k, l, False
        if w == x.inverse():
            return k, l, True
    return None


def _smooth_chain_certificate(w: WeylElement, S):
    """Chain BP fibration over a leaf of S(w) whose base is certified by a
    table; wrapped in an E-type reduction when that applies."""
    sys = w.system
    if sys.ctype.family == "E":
        hit = _catalogue_match(w)
        if hit is not None:
            k, l, inv = hit
            if S <= EKLIndex.J(k):
                inner = _chain_bp_certificate(w, S)
                if inner is not None:
                    child = SphericalCertificate(w, SPHERICAL, inner, levi_support(w))
                    return EReduction(k, l, inv), (child,)
    found = _chain_bp_certificate(w, S)
    return None if found is None else (found,)


def _chain_bp_certificate(w: WeylElement, S):
    sys = w.system
    nd = left_descents(w)
    for s in leaves(sys, S):
        J = S - {s}
        if not is_chain_bp(w, J):
            continue
        d = decompose(w, J)
        Sv = support(d.v)
        if not Sv <= nd:
            raise InternalInconsistencyError(
                f"S(v)={sorted(Sv)} not inside N_Delta(w)={sorted(nd)} for w={format_element(w)}"
            )
        if d.v != min_coset_rep(longest_element(sys, Sv), Sv & J):
            raise InternalInconsistencyError(f"v={format_element(d.v)} is not maximal in its quotient")
        if len(components(sys, Sv)) != 1:
            raise InternalInconsistencyError(f"support of v={format_element(d.v)} is disconnected")
        comp = classify_component(sys, Sv)
        lab = comp.label_of(s) - 1
        q = PairTableQuery(comp.family, comp.rank, {lab}, {lab})
        hit = pair_table_lookup(q)
        if hit is None:
            continue
        return ChainBPFibration(J, d.v, d.u, s, q, hit[0], hit[1])
    return None


def _kempf(w: WeylElement, S, depth: int):
    sys = w.system
    nd = left_descents(w)
    desc = right_descents(w)
    for a in range(sys.rank):
        if a in desc:
            continue
        x = w.right_mul(a)
        Sx = support(x)
        if x != longest_element(sys, Sx):
            continue
        comp_nodes = next(c for c in components(sys, Sx) if a in c)
        if not (Sx - comp_nodes) <= nd:
            raise InternalInconsistencyError(f"L(w) misses a factor of the flag variety for w={format_element(w)}")
        comp = classify_component(sys, comp_nodes)
        q = PairTableQuery(
            comp.family,
            comp.rank,
            {comp.label_of(j) - 1 for j in comp_nodes - nd},
            {comp.label_of(j) - 1 for j in comp_nodes - {a}},
        )
        hit = pair_table_lookup(q)
        if hit is not None:
            return KempfTransfer(a, "quotient", q, hit[0], hit[1]), ()
    for a in sorted(desc):
        v = w.right_mul(a)
        if left_descents(v) != nd:
            continue
        inner = _decide(v, depth + 1)
        if inner.verdict == SPHERICAL:
            return KempfTransfer(a, "descent"), (inner,)
    return None


# --- independent re-validation ----------------------------------------------


def check_certificate(cert: SphericalCertificate) -> list[str]:
    """Re-derive every step of a certificate tree; returns the problems found.

    Uses the three-way BP test and the cover-union description of N_Delta
    rather than the shortcuts taken by the decision procedure.
    """
    from .bp import bp_conditions
    from .inversion import simple_inversions_via_covers
    from .order import is_chain_in_WJ

    problems = []
    w = cert.element
    sys = w.system
    name = format_element(w)
    nd = simple_inversions_via_covers(w)
    if nd != cert.levi.simples:
        problems.append(f"{name}: Levi support {sorted(cert.levi.simples)} but cover union gives {sorted(nd)}")
    r = cert.reason
    if isinstance(r, MaximalParabolic):
        if r.J != support(w) or w != longest_element(sys, r.J):
            problems.append(f"{name}: not the longest element of {sorted(r.J)}")
    elif isinstance(r, ToralCell):
        phi = sub_root_subset(sys, nd).mask
        if w.rinv_mask & ~phi:
            problems.append(f"{name}: I(w) leaves the root subsystem of N_Delta(w)")
    elif isinstance(r, ChainBPFibration):
        if r.v * r.u != w:
            problems.append(f"{name}: v u != w")
        if not all(bp_conditions(w, r.J)):
            problems.append(f"{name}: not BP for J={sorted(r.J)}")
        if not is_chain_in_WJ(r.v, r.J):
            problems.append(f"{name}: quotient interval of v is not a chain")
        if not support(r.v) <= nd:
            problems.append(f"{name}: S(v) not inside N_Delta(w)")
        if pair_table_lookup(r.query) != (r.table, r.case):
            problems.append(f"{name}: table lookup changed for {r.query}")
    elif isinstance(r, KempfTransfer):
        x = w.right_mul(r.alpha)
        if r.variant == "descent":
            if x.length != w.length - 1:
                problems.append(f"{name}: a{r.alpha + 1} is not a right descent")
            if not cert.children or cert.children[0].element != x:
                problems.append(f"{name}: inner certificate is not for w s_a{r.alpha + 1}")
            elif simple_inversions_via_covers(x) != nd:
                problems.append(f"{name}: L(w s_a) differs from L(w)")
        else:
            if x.length != w.length + 1 or x != longest_element(sys, support(x)):
                problems.append(f"{name}: w s_a{r.alpha + 1} is not a longest element above w")
            if pair_table_lookup(r.query) != (r.table, r.case):
                problems.append(f"{name}: table lookup changed for {r.query}")
    elif isinstance(r, NegativeClassification):
        S = support(w)
        if longest_element(sys, S).right_mul(r.i) != w:
            problems.append(f"{name}: not w0 s_{r.i + 1}")
        if mwz_typeA_pair(r.query.rank, r.query) or len(r.query.Jc) < 3:
            problems.append(f"{name}: type A table does not reject {r.query}")
    elif isinstance(r, EReduction):
        x = ekl_catalogue(sys)[(r.k, r.l)]
        if w != (x.inverse() if r.inverse else x):
            problems.append(f"{name}: not the catalogue element ({r.k}, {r.l})")
    for child in cert.children:
        problems.extend(check_certificate(child))
    return problems
