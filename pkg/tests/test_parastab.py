import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubert_spherical.errors import NotInQuotientError, NotWeakBelowError
from schubert_spherical.order import weak_leq_right
from schubert_spherical.parastab import (
    check_stab_monotone,
    coset_stabilizer_support,
    levi_support,
    stab_strictness_witness,
)
from schubert_spherical.rootsys import root_system
from schubert_spherical.weyl import (
    enumerate_group,
    identity,
    left_descents,
    longest_element,
    min_coset_rep,
    parse_element,
    perm_to_element,
)

A3 = root_system("A", 3)


def el(text):
    return parse_element(A3, text)


def test_levi_support_is_left_descent_set():
    assert levi_support(el("4231")).simples == {0, 2}
    assert levi_support(el("3412")).names() == ["a2"]
    assert len(levi_support(identity(A3))) == 0


def test_coset_stabilizer_examples():
    assert coset_stabilizer_support(identity(A3), {0, 1, 2}) == {0, 1, 2}
    v = min_coset_rep(el("4231"), {1})
    assert {0, 2} <= coset_stabilizer_support(v, {1})
    with pytest.raises(NotInQuotientError):
        coset_stabilizer_support(el("2134"), {0})


@pytest.mark.parametrize("ft", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_coset_stabilizer_is_levi_of_top_of_coset(ft):
    S = root_system(*ft)
    subsets = [frozenset(), frozenset({0}), frozenset({1}), frozenset(range(S.rank - 1))]
    for K in subsets:
        top_K = longest_element(S, K)
        for w in enumerate_group(S):
            v = min_coset_rep(w, K)
            assert coset_stabilizer_support(v, K) == levi_support(v * top_K).simples
        if not K:
            for w in enumerate_group(S):
                assert coset_stabilizer_support(w, K) == left_descents(w)


def test_strictness_examples():
    assert stab_strictness_witness(el("2143"), el("2413")) is None
    assert stab_strictness_witness(el("1324"), el("3412")) is None
    assert stab_strictness_witness(el("1243"), el("2143")) is not None
    assert stab_strictness_witness(el("4231"), el("4231")) is None
    with pytest.raises(NotWeakBelowError):
        stab_strictness_witness(el("4231"), el("1243"))


@given(st.permutations([1, 2, 3, 4, 5]), st.permutations([1, 2, 3, 4, 5]))
def test_stabilizers_grow_along_weak_order(p, q):
    S = root_system("A", 4)
    v, u = perm_to_element(S, p), perm_to_element(S, q)
    w = v * u
    if w.length != v.length + u.length:
        w = v
    assert weak_leq_right(v, w)
    assert check_stab_monotone(v, w)


def test_monotone_exhaustive_a3():
    W = enumerate_group(A3)
    for v in W:
        for w in W:
            if weak_leq_right(v, w):
                assert check_stab_monotone(v, w)
