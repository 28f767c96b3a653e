"""Finite crystallographic root systems in simple-root coordinates.

Roots are plain integer tuples of length ``rank``.  Positive roots are stored
in a fixed table (simple roots first, then by height, ties broken by
lexicographic coordinates) so that subsets of the positive roots can be
represented as Python ``int`` bit masks with stable bit positions.

Node labelings follow Bourbaki for B, C, F, G.  Type D uses the labeling in
which the two fork nodes are 1 and 2, both attached to node 3, and the chain
3-4-...-n runs to the far end.  Type E uses the labeling where 2-3-4-5-6-7-8
is a chain and node 1 hangs off node 4, so E6 and E7 are the parabolic
subsystems on nodes 1..6 and 1..7.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import ConstructionError, NotARootError

Root = tuple

FAMILIES = "ABCDEFG"

_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in FAMILIES or len(fam) != 1:
            raise ConstructionError(f"unknown Cartan family {fam!r}; expected one of {FAMILIES}")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ConstructionError(f"rank must be an integer, got {n!r}")
        ok = {
            "A": (n >= 1, "A_n requires n >= 1"),
            "B": (n >= 2, "B_n requires n >= 2"),
            "C": (n >= 2, "C_n requires n >= 2"),
            "D": (n >= 4, "D_n requires n >= 4"),
            "E": (n in (6, 7, 8), "E_n requires n in {6, 7, 8}"),
            "F": (n == 4, "F_n requires n = 4"),
            "G": (n == 2, "G_n requires n = 2"),
        }[fam]
        if not ok[0]:
            raise ConstructionError(f"invalid rank {n} for family {fam}: {ok[1]}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip().upper().replace("_", "")
        if len(text) < 2 or not text[1:].isdigit():
            raise ConstructionError(f"cannot parse Cartan type {text!r}")
        return cls(text[0], int(text[1:]))


def dynkin_edges(ctype: CartanType) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram as pairs of 0-based node indices."""
    fam, n = ctype.family, ctype.rank
    if fam in "ABCFG":
        return [(i, i + 1) for i in range(n - 1)]
    if fam == "D":
        # fork nodes 1 and 2 both attach to 3; chain 3-4-...-n
        return [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    # E: chain 2-3-...-n, node 1 attached to node 4
    return [(0, 3)] + [(i, i + 1) for i in range(1, n - 1)]


def gram_matrix(ctype: CartanType) -> tuple[tuple[int, ...], ...]:
    """Symmetric invariant form on simple roots, scaled to be integral."""
    fam, n = ctype.family, ctype.rank
    # squared lengths
    if fam == "B":
        sq = [4] * (n - 1) + [2]
    elif fam == "C":
        sq = [2] * (n - 1) + [4]
    elif fam == "F":
        sq = [4, 4, 2, 2]
    elif fam == "G":
        sq = [2, 6]
    else:
        sq = [2] * n
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = sq[i]
    for i, j in dynkin_edges(ctype):
        # C[i][j] * C[j][i] = 4 g_ij^2 / (g_ii g_jj) is the bond multiplicity
        if sq[i] == sq[j]:
            val = -sq[i] // 2
        elif fam == "G":
            val = -3
        else:
            val = -min(sq[i], sq[j])
        g[i][j] = g[j][i] = val
    return tuple(tuple(r) for r in g)


def cartan_matrix(ctype: CartanType) -> tuple[tuple[int, ...], ...]:
    """C[i][j] = <alpha_j, alpha_i^vee>, so that s_i(a_j) = a_j - C[i][j] a_i."""
    g = gram_matrix(ctype)
    n = ctype.rank
    return tuple(tuple(2 * g[i][j] // g[i][i] for j in range(n)) for i in range(n))


def is_positive(r: Root) -> bool:
    return any(r) and all(c >= 0 for c in r)


def is_negative(r: Root) -> bool:
    return any(r) and all(c <= 0 for c in r)


def height(r: Root) -> int:
    return sum(r)


def neg(r: Root) -> Root:
    return tuple(-c for c in r)


def format_root(r: Root, names=None) -> str:
    """Additive notation, e.g. ``a1+a2+a3`` or ``-2a1-a2``."""
    names = names or [f"a{i + 1}" for i in range(len(r))]
    parts = []
    for c, name in zip(r, names):
        if c == 0:
            continue
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{coef}{name}")
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Cartan datum with its positive-root table.

    Root indices ``0 .. m-1`` address the positive roots; index ``k + m``
    addresses ``-positive_roots[k]``.  ``reflection_table[k][i]`` is the
    positive index of ``s_i(positive_roots[k])``, or ``-1`` when the image is
    negative (which happens exactly for ``k == i``).
    """

    ctype: CartanType
    cartan: tuple
    positive_roots: tuple
    reflection_table: tuple
    gram: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.ctype.rank

    @property
    def n_pos(self) -> int:
        return len(self.positive_roots)

    @property
    def full_mask(self) -> int:
        return (1 << self.n_pos) - 1

    def __eq__(self, other):
        return self is other or (isinstance(other, RootSystem) and self.ctype == other.ctype)

    def __hash__(self):
        return hash(self.ctype)

    def __repr__(self):
        return f"RootSystem({self.ctype})"

    @cached_property
    def root_index(self) -> dict:
        """coords -> full index (negative roots offset by ``n_pos``)."""
        m = self.n_pos
        idx = {}
        for k, r in enumerate(self.positive_roots):
            idx[r] = k
            idx[neg(r)] = k + m
        return idx

    def index_of(self, r: Root) -> int:
        try:
            return self.root_index[tuple(r)]
        except KeyError:
            raise NotARootError(f"{tuple(r)} is not a root of {self.ctype}") from None

    def root(self, full_index: int) -> Root:
        m = self.n_pos
        if full_index < m:
            return self.positive_roots[full_index]
        return neg(self.positive_roots[full_index - m])

    @cached_property
    def simple_perms(self) -> tuple:
        """For each simple reflection, its permutation of the 2m full root indices."""
        m = self.n_pos
        perms = []
        for i in range(self.rank):
            p = [0] * (2 * m)
            for k in range(m):
                t = self.reflection_table[k][i]
                img = i + m if t < 0 else t
                p[k] = img
                p[k + m] = img - m if img >= m else img + m
            perms.append(tuple(p))
        return tuple(perms)

    @cached_property
    def root_support(self) -> tuple:
        """Bit mask over simple indices of each positive root's support."""
        return tuple(sum(1 << i for i, c in enumerate(r) if c) for r in self.positive_roots)

    @cached_property
    def adjacency(self) -> tuple:
        nbrs = [set() for _ in range(self.rank)]
        for i, j in dynkin_edges(self.ctype):
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def pair_cone_masks(self) -> tuple:
        """``[a][b]`` is the mask of positive roots in cone({beta_a, beta_b})."""
        m = self.n_pos
        roots = self.positive_roots
        table = [[0] * m for _ in range(m)]
        for a in range(m):
            table[a][a] = 1 << a
            for b in range(a + 1, m):
                mask = (1 << a) | (1 << b)
                for g in range(m):
                    if g != a and g != b and _in_cone2(roots[g], roots[a], roots[b]):
                        mask |= 1 << g
                table[a][b] = table[b][a] = mask
        return tuple(tuple(r) for r in table)

    def simple_name(self, i: int) -> str:
        return f"a{i + 1}"

    def generator_name(self, i: int) -> str:
        return f"s{i + 1}"


def _in_cone2(g: Root, a: Root, b: Root) -> bool:
    """Exact test for g = x a + y b with rational x, y >= 0."""
    n = len(g)
    for p, q in itertools.combinations(range(n), 2):
        det = a[p] * b[q] - a[q] * b[p]
        if det:
            x = Fraction(g[p] * b[q] - g[q] * b[p], det)
            y = Fraction(a[p] * g[q] - a[q] * g[p], det)
            if x < 0 or y < 0:
                return False
            return all(x * a[k] + y * b[k] == g[k] for k in range(n))
    # a and b proportional; only happens for a == b among positive roots
    return False


def in_cone(g: Root, gens) -> bool:
    """Exact rational test whether g lies in the closed cone spanned by gens.

    Uses Caratheodory: g is in the cone iff it is a nonnegative combination
    of some linearly independent subset of the generators.
    """
    gens = [tuple(v) for v in gens]
    if not any(g):
        return True
    n = len(g)
    for size in range(1, min(n, len(gens)) + 1):
        for sub in itertools.combinations(gens, size):
            coeffs = _solve_independent(sub, g)
            if coeffs is not None and all(c >= 0 for c in coeffs):
                return True
    return False


def _solve_independent(vectors, target):
    """Solve sum c_i v_i = target exactly; None unless vectors are independent
    and the system is consistent."""
    k = len(vectors)
    n = len(target)
    rows = [[Fraction(vectors[j][r]) for j in range(k)] + [Fraction(target[r])] for r in range(n)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            return None
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    return [rows[i][k] for i in range(k)]


@lru_cache(maxsize=None)
def build_root_system(ctype: CartanType) -> RootSystem:
    """Generate the positive roots by closure of the simple roots under
    simple reflections, and tabulate how each simple reflection acts."""
    n = ctype.rank
    C = cartan_matrix(ctype)
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def refl(i, r):
        pair = sum(r[j] * C[i][j] for j in range(n))
        out = list(r)
        out[i] -= pair
        return tuple(out)

    found = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                img = refl(i, r)
                if is_positive(img) and img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt

    rest = sorted((r for r in found if height(r) > 1), key=lambda r: (height(r), r))
    roots = tuple(simples + rest)
    expected = _POSITIVE_COUNT[ctype.family](n)
    if len(roots) != expected:
        raise ConstructionError(f"{ctype}: generated {len(roots)} positive roots, expected {expected}")

    index = {r: k for k, r in enumerate(roots)}
    table = []
    for k, r in enumerate(roots):
        row = []
        for i in range(n):
            img = refl(i, r)
            if k == i:
                row.append(-1)
            else:
                row.append(index[img])
        table.append(tuple(row))
    return RootSystem(ctype, C, roots, tuple(table), gram_matrix(ctype))


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(CartanType(family, rank))


def reflect(sys: RootSystem, i: int, r: Root) -> Root:
    """Apply the simple reflection s_i to the root r."""
    if not 0 <= i < sys.rank:
        raise ConstructionError(f"simple index {i} out of range for {sys.ctype}")
    r = tuple(r)
    if r not in sys.root_index:
        raise NotARootError(f"{r} is not a root of {sys.ctype}")
    pair = sum(r[j] * sys.cartan[i][j] for j in range(sys.rank))
    out = list(r)
    out[i] -= pair
    return tuple(out)


@dataclass(frozen=True)
class RootSubset:
    """A subset of the positive roots, stored as a bit mask."""

    mask: int
    system: RootSystem

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.system.n_pos:
            raise ConstructionError("mask wider than the positive-root table")

    @classmethod
    def from_roots(cls, sys: RootSystem, roots) -> "RootSubset":
        mask = 0
        for r in roots:
            k = sys.index_of(r)
            if k >= sys.n_pos:
                raise NotARootError(f"{tuple(r)} is not a positive root")
            mask |= 1 << k
        return cls(mask, sys)

    @classmethod
    def from_indices(cls, sys: RootSystem, indices) -> "RootSubset":
        return cls(sum(1 << k for k in set(indices)), sys)

    def indices(self) -> list[int]:
        return [k for k in range(self.system.n_pos) if self.mask >> k & 1]

    def roots(self) -> list[Root]:
        return [self.system.positive_roots[k] for k in self.indices()]

    def complement(self) -> "RootSubset":
        return RootSubset(self.system.full_mask & ~self.mask, self.system)

    def __contains__(self, r) -> bool:
        k = self.system.root_index.get(tuple(r))
        return k is not None and k < self.system.n_pos and bool(self.mask >> k & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.roots())

    def issubset(self, other: "RootSubset") -> bool:
        return self.mask & ~other.mask == 0

    def to_json(self) -> list[int]:
        return self.indices()

    def pretty(self) -> list[str]:
        return [format_root(r) for r in self.roots()]


def sub_root_subset(sys: RootSystem, simples) -> RootSubset:
    """Positive roots of the parabolic subsystem spanned by the given simple indices."""
    smask = sum(1 << i for i in set(simples))
    mask = 0
    for k, sup in enumerate(sys.root_support):
        if sup & ~smask == 0:
            mask |= 1 << k
    return RootSubset(mask, sys)


def closure_violation(sys: RootSystem, mask: int):
    """First pair (a, b) inside mask whose cone leaves mask, else None."""
    cones = sys.pair_cone_masks
    idx = [k for k in range(sys.n_pos) if mask >> k & 1]
    for x, a in enumerate(idx):
        row = cones[a]
        for b in idx[x + 1:]:
            if row[b] & ~mask:
                return a, b
    return None


def is_closed(A: RootSubset) -> bool:
    return closure_violation(A.system, A.mask) is None


def is_coclosed(A: RootSubset) -> bool:
    return is_closed(A.complement())


def is_biclosed(A: RootSubset) -> bool:
    return is_closed(A) and is_coclosed(A)


def is_convex(A: RootSubset) -> bool:
    """cone(A) meets the root system exactly in A."""
    gens = A.roots()
    outside = A.complement().roots()
    return not any(in_cone(g, gens) for g in outside)


def is_coconvex(A: RootSubset) -> bool:
    return is_convex(A.complement())


def is_biconvex(A: RootSubset) -> bool:
    return is_convex(A) and is_coconvex(A)


def count_biclosed_masks(sys: RootSystem) -> int:
    """Brute-force count of biclosed subsets over all 2^m masks (numpy-vectorised)."""
    import numpy as np

    m = sys.n_pos
    if m > 24:
        raise ValueError(f"{sys.ctype}: 2^{m} masks is beyond brute force")
    masks = np.arange(1 << m, dtype=np.int64)
    comp = (1 << m) - 1 - masks
    ok = np.ones(1 << m, dtype=bool)
    cones = sys.pair_cone_masks
    for a in range(m):
        has_a = (masks >> a) & 1
        lacks_a = 1 - has_a
        for b in range(a + 1, m):
            cm = cones[a][b]
            if cm == (1 << a) | (1 << b):
                continue
            has_b = (masks >> b) & 1
            inner = np.int64(cm & ~((1 << a) | (1 << b)))
            # closed: both in A forces the cone into A
            bad = (has_a & has_b).astype(bool) & ((masks & inner) != inner)
            # coclosed: both outside A forces the cone outside A
            bad |= (lacks_a & (1 - has_b)).astype(bool) & ((comp & inner) != inner)
            ok &= ~bad
    return int(ok.sum())


# --- sub-diagram classification -------------------------------------------


@dataclass(frozen=True)
class DiagramComponent:
    """A connected piece of a Dynkin sub-diagram with its standard labeling.

    ``labels[k]`` is the ambient node carrying standard label ``k + 1``.
    """

    family: str
    rank: int
    labels: tuple

    def label_of(self, node: int) -> int:
        return self.labels.index(node) + 1

    def nodes(self) -> frozenset:
        return frozenset(self.labels)


def components(sys: RootSystem, nodes) -> list[frozenset]:
    nodes = set(nodes)
    out = []
    while nodes:
        start = min(nodes)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in sys.adjacency[x]:
                if y in nodes and y not in comp:
                    comp.add(y)
                    stack.append(y)
        nodes -= comp
        out.append(frozenset(comp))
    return sorted(out, key=min)


def leaves(sys: RootSystem, nodes) -> list[int]:
    """Nodes of degree <= 1 in the diagram restricted to ``nodes``."""
    nodes = set(nodes)
    return sorted(x for x in nodes if len(sys.adjacency[x] & nodes) <= 1)


def _path_from(sys, comp, start):
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [y for y in sys.adjacency[cur] & comp if y != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def classify_component(sys: RootSystem, comp) -> DiagramComponent:
    """Identify the Cartan type of a connected sub-diagram and label it."""
    comp = frozenset(comp)
    n = len(comp)
    sq = {x: sys.gram[x][x] for x in comp}
    deg = {x: len(sys.adjacency[x] & comp) for x in comp}
    ends = sorted(x for x in comp if deg[x] <= 1)
    if n == 1:
        return DiagramComponent("A", 1, (ends[0],))
    branch = [x for x in comp if deg[x] == 3]
    if not branch:
        if len(set(sq.values())) == 1:
            return DiagramComponent("A", n, tuple(_path_from(sys, comp, ends[0])))
        if max(sq.values()) == 3 * min(sq.values()):
            short = min(comp, key=lambda x: sq[x])
            other = next(x for x in comp if x != short)
            return DiagramComponent("G", 2, (short, other))
        for e in ends:
            path = _path_from(sys, comp, e)
            tail_bond = (path[-2], path[-1])
            if sq[tail_bond[0]] != sq[tail_bond[1]]:
                # multiple bond at the far end: B or C
                if n == 2:
                    # B2 = C2; label the long root first (Bourbaki B2)
                    path = sorted(path, key=lambda x: -sq[x])
                    return DiagramComponent("B", 2, tuple(path))
                fam = "B" if sq[path[-1]] < sq[path[-2]] else "C"
                return DiagramComponent(fam, n, tuple(path))
        # multiple bond in the middle: F4, long roots first
        path = _path_from(sys, comp, ends[0])
        if sq[path[0]] < sq[path[-1]]:
            path = path[::-1]
        return DiagramComponent("F", 4, tuple(path))
    (b,) = branch
    arms = []
    for y in sorted(sys.adjacency[b] & comp):
        arm = [y]
        prev, cur = b, y
        while True:
            nxt = [z for z in sys.adjacency[cur] & comp if z != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), a))
    lens = [len(a) for a in arms]
    if lens[0] == 1 and lens[1] == 1:
        # D_n: fork nodes get labels 1, 2; branch is 3; long arm continues
        labels = (arms[0][0], arms[1][0], b) + tuple(arms[2])
        return DiagramComponent("D", n, labels)
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        # E_n: node 1 is the short arm, 2-3 the middle arm (2 at its end)
        labels = (arms[0][0], arms[1][1], arms[1][0], b) + tuple(arms[2])
        return DiagramComponent("E", n, labels)
    raise ConstructionError(f"sub-diagram {sorted(comp)} is not of finite type")


def classify_diagram(sys: RootSystem, nodes) -> list[DiagramComponent]:
    return [classify_component(sys, c) for c in components(sys, nodes)]
