import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubert_spherical.errors import ConstructionError, NotARootError
from schubert_spherical.rootsys import (
    CartanType,
    RootSubset,
    cartan_matrix,
    classify_diagram,
    count_biclosed_masks,
    format_root,
    height,
    is_biclosed,
    is_biconvex,
    is_closed,
    is_coclosed,
    reflect,
    root_system,
    sub_root_subset,
)
from schubert_spherical.weyl import group_order

POS_COUNTS = {
    ("A", 1): 1, ("A", 3): 6, ("A", 5): 15, ("B", 2): 4, ("B", 3): 9, ("C", 3): 9,
    ("D", 4): 12, ("D", 5): 20, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
    ("F", 4): 24, ("G", 2): 6,
}  # fmt: skip

HIGHEST = {
    ("A", 3): (1, 1, 1),
    ("B", 3): (1, 2, 2),
    ("C", 3): (2, 2, 1),
    ("D", 5): (1, 1, 2, 2, 1),
    ("F", 4): (2, 3, 4, 2),
    ("G", 2): (3, 2),
    ("E", 8): (3, 2, 4, 6, 5, 4, 3, 2),
}

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]


@pytest.mark.parametrize("fam,n", sorted(POS_COUNTS))
def test_positive_root_counts(fam, n):
    assert root_system(fam, n).n_pos == POS_COUNTS[(fam, n)]


@pytest.mark.parametrize("fam,n", sorted(HIGHEST))
def test_highest_root(fam, n):
    S = root_system(fam, n)
    top = max(S.positive_roots, key=height)
    assert top == HIGHEST[(fam, n)]


@pytest.mark.parametrize("fam,n,bad", [("A", 0, "n >= 1"), ("D", 3, "n >= 4"), ("E", 5, "6, 7, 8"), ("G", 3, "= 2")])
def test_rank_constraints(fam, n, bad):
    with pytest.raises(ConstructionError, match=bad):
        CartanType(fam, n)


def test_unknown_family():
    with pytest.raises(ConstructionError):
        CartanType("H", 3)
    assert CartanType.parse("e_6") == CartanType("E", 6)


def test_cartan_conventions():
    # C[i][j] = <a_j, a_i^vee>; in B3 the last root is short
    assert cartan_matrix(CartanType("B", 3)) == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    assert cartan_matrix(CartanType("C", 3)) == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    # G2: alpha_1 short
    assert cartan_matrix(CartanType("G", 2)) == ((2, -3), (-1, 2))


def test_table_order():
    S = root_system("A", 3)
    assert S.positive_roots[:3] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert [height(r) for r in S.positive_roots] == sorted(height(r) for r in S.positive_roots)
    assert (1, 1, 1) in S.positive_roots


def test_reflect_examples():
    A3 = root_system("A", 3)
    assert reflect(A3, 0, (1, 0, 0)) == (-1, 0, 0)
    assert reflect(A3, 1, (1, 0, 0)) == (1, 1, 0)
    G2 = root_system("G", 2)
    top = max(G2.positive_roots, key=height)
    assert all(c >= 0 for c in reflect(G2, 0, top))
    with pytest.raises(NotARootError):
        reflect(A3, 0, (1, -1, 0))


@pytest.mark.parametrize("fam,n", SMALL + [("F", 4), ("E", 6)])
def test_reflections_permute_positive_roots(fam, n):
    S = root_system(fam, n)
    pos = set(S.positive_roots)
    for i in range(n):
        alpha = tuple(int(j == i) for j in range(n))
        images = {reflect(S, i, r) for r in pos - {alpha}}
        assert images == pos - {alpha}
        assert reflect(S, i, alpha) == tuple(-c for c in alpha)
        for r in pos:
            assert reflect(S, i, reflect(S, i, r)) == r


def test_sub_root_subset_examples():
    S = root_system("A", 3)
    assert sub_root_subset(S, []).mask == 0
    assert set(sub_root_subset(S, {0, 1}).roots()) == {(1, 0, 0), (0, 1, 0), (1, 1, 0)}
    assert set(sub_root_subset(S, {0, 2}).roots()) == {(1, 0, 0), (0, 0, 1)}


@given(st.sets(st.integers(0, 3)), st.sets(st.integers(0, 3)))
def test_sub_root_subset_monotone(I, J):
    S = root_system("D", 4)
    if I <= J:
        assert sub_root_subset(S, I).issubset(sub_root_subset(S, J))
    # brute-force oracle: support inside I
    expected = {r for r in S.positive_roots if all(c == 0 or k in I for k, c in enumerate(r))}
    assert set(sub_root_subset(S, I).roots()) == expected


def test_closure_examples():
    S = root_system("A", 3)
    N = RootSubset.from_roots(S, [(1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)])
    assert is_biclosed(N)
    assert is_biclosed(RootSubset(0, S)) and is_biclosed(RootSubset(S.full_mask, S))
    A2 = root_system("A", 2)
    top = RootSubset.from_roots(A2, [(1, 1)])
    assert is_closed(top) and not is_coclosed(top)


@pytest.mark.parametrize("fam,n", [("A", 2), ("A", 3), ("B", 2), ("G", 2), ("B", 3), ("C", 3), ("D", 4), ("A", 4)])
def test_biclosed_count_equals_group_order(fam, n):
    S = root_system(fam, n)
    assert count_biclosed_masks(S) == group_order(S)


@pytest.mark.parametrize("fam,n", [("A", 2), ("A", 3), ("B", 2), ("G", 2)])
def test_biclosed_iff_biconvex(fam, n):
    S = root_system(fam, n)
    for mask in range(1 << S.n_pos):
        A = RootSubset(mask, S)
        assert is_biclosed(A) == is_biconvex(A), A.pretty()


def test_biclosed_count_matches_slow_predicate():
    S = root_system("B", 2)
    slow = sum(is_biclosed(RootSubset(m, S)) for m in range(1 << S.n_pos))
    assert slow == count_biclosed_masks(S) == 8


def test_root_subset_serialization():
    S = root_system("A", 3)
    A = RootSubset.from_indices(S, [5, 0, 3])
    assert A.to_json() == [0, 3, 5]
    assert A.pretty() == ["a1", "a2+a3", "a1+a2+a3"]
    assert format_root((2, 1)) == "2a1+a2"
    with pytest.raises(ConstructionError):
        RootSubset(1 << S.n_pos, S)


@pytest.mark.parametrize(
    "fam,n,nodes,expected",
    [
        ("A", 5, {0, 1, 3, 4}, [("A", 2), ("A", 2)]),
        ("D", 5, {0, 1, 2, 3}, [("D", 4)]),
        ("D", 5, {0, 2, 3, 4}, [("A", 4)]),
        ("E", 8, {0, 2, 3, 4, 5, 6, 7}, [("D", 7)]),
        ("E", 8, {0, 1, 2, 3, 4, 5}, [("E", 6)]),
        ("E", 7, {1, 2, 3, 4, 5, 6}, [("A", 6)]),
        ("B", 4, {1, 2, 3}, [("B", 3)]),
        ("C", 4, {2, 3}, [("B", 2)]),
        ("F", 4, {0, 1, 2, 3}, [("F", 4)]),
    ],
)
def test_classify_subdiagrams(fam, n, nodes, expected):
    S = root_system(fam, n)
    assert [(c.family, c.rank) for c in classify_diagram(S, nodes)] == expected


def test_d_labels_follow_fork_convention():
    S = root_system("D", 6)
    (c,) = classify_diagram(S, set(range(6)))
    assert c.labels == tuple(range(6))
    S = root_system("E", 6)
    (c,) = classify_diagram(S, set(range(6)))
    assert c.labels == tuple(range(6))


@given(st.sampled_from(SMALL), st.data())
def test_root_index_round_trip(ft, data):
    S = root_system(*ft)
    k = data.draw(st.integers(0, 2 * S.n_pos - 1))
    assert S.index_of(S.root(k)) == k


def sum_closed(S, roots):
    """Closed under sums of two members that are roots."""
    pos = set(S.positive_roots)
    return all(tuple(x + y for x, y in zip(a, b)) not in pos - roots for a, b in itertools.product(roots, roots))


def test_cone_closure_is_stricter_than_pairwise_sums():
    # in B2, {a1, a1+2a2} has no root as a pairwise sum, but its cone holds a1+a2
    S = root_system("B", 2)
    A = {(1, 0), (1, 2)}
    assert sum_closed(S, A)
    assert not is_closed(RootSubset.from_roots(S, A))


@pytest.mark.parametrize("ft", [("B", 2), ("G", 2), ("A", 3)])
def test_both_closure_notions_give_the_same_biclosed_sets(ft):
    S = root_system(*ft)
    full = set(S.positive_roots)
    for mask in range(1 << S.n_pos):
        A = RootSubset(mask, S)
        roots = set(A.roots())
        assert is_biclosed(A) == (sum_closed(S, roots) and sum_closed(S, full - roots))
