import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_spherical.errors import ConstructionError, InternalInconsistencyError, SystemMismatchError
from schubert_spherical.rootsys import root_system
from schubert_spherical.smooth import is_smooth
from schubert_spherical.spherical import (
    NOT_SPHERICAL,
    SPHERICAL,
    UNKNOWN,
    KempfTransfer,
    MaximalParabolic,
    NegativeClassification,
    PairTableQuery,
    SphericalCertificate,
    ToralCell,
    Unknown,
    brundan_spherical_levi,
    check_certificate,
    decide_spherical,
    mwz_typeA_pair,
    pair_table_lookup,
    stembridge_typeD_case,
    stembridge_typeD_pair,
    toral_cell_test,
)
from schubert_spherical.parastab import levi_support
from schubert_spherical.weyl import enumerate_group, format_element, identity, longest_element, parse_element


def q(fam, n, ic, jc):
    """Query from 1-based node lists."""
    return PairTableQuery(fam, n, {i - 1 for i in ic}, {j - 1 for j in jc})


# --- tables -----------------------------------------------------------------


def test_mwz_examples():
    assert mwz_typeA_pair(5, q("A", 5, [], [1, 2, 3]))
    assert mwz_typeA_pair(5, q("A", 5, [2], [4]))
    assert not mwz_typeA_pair(5, q("A", 5, [3], [1, 2, 3]))
    assert not mwz_typeA_pair(5, q("A", 5, [2, 3], [2, 3]))


@given(st.integers(2, 8), st.data())
def test_mwz_is_symmetric(n, data):
    nodes = st.sets(st.integers(1, n), max_size=3)
    ic, jc = data.draw(nodes), data.draw(nodes)
    query = q("A", n, ic, jc)
    assert mwz_typeA_pair(n, query) == mwz_typeA_pair(n, query.swapped())
    if len(ic) == 1 and len(jc) == 1:
        assert mwz_typeA_pair(n, query)


def test_stembridge_examples():
    n = 5
    assert stembridge_typeD_pair(n, q("D", n, [5], [3]))
    assert stembridge_typeD_pair(n, q("D", n, [1], [3]))
    assert not stembridge_typeD_pair(n, q("D", n, [3], [3]))
    assert stembridge_typeD_case(n, q("D", n, [], [3, 4])) == 0


def test_stembridge_d4_triality():
    # D4 automorphisms permute the outer nodes 1, 2, 4 and fix node 3
    for perm in itertools.permutations([1, 2, 4]):
        sigma = dict(zip([1, 2, 4], perm)) | {3: 3}
        for ic in [[1], [2], [4], [3]]:
            for jc in [[1], [2], [3], [4], [1, 2], [2, 4], [1, 3]]:
                a = stembridge_typeD_pair(4, q("D", 4, ic, jc))
                b = stembridge_typeD_pair(4, q("D", 4, [sigma[i] for i in ic], [sigma[j] for j in jc]))
                assert a == b, (ic, jc, perm)


def test_brundan_examples():
    assert brundan_spherical_levi("G", 2, {0, 1})
    assert not brundan_spherical_levi("G", 2, {0})
    for p in range(5):
        assert brundan_spherical_levi("A", 5, set(range(5)) - {p})
    assert not brundan_spherical_levi("A", 5, {0, 1, 2})
    assert brundan_spherical_levi("D", 5, {0, 1, 2, 3})
    assert not brundan_spherical_levi("E", 8, set(range(7)))
    with pytest.raises(ConstructionError):
        brundan_spherical_levi("A", 2, {5})


def test_pair_lookup_dispatch():
    assert pair_table_lookup(q("A", 3, [2], [1, 3])) == ("mwz", 2)
    assert pair_table_lookup(q("B", 3, [], [1])) == ("trivial", 0)
    assert pair_table_lookup(q("B", 3, [1], [1])) is None
    with pytest.raises(ConstructionError):
        q("A", 3, [5], [])


# --- decision procedure -----------------------------------------------------


def test_toral_cells_of_s4():
    S = root_system("A", 3)
    got = {format_element(w) for w in enumerate_group(S) if toral_cell_test(w)}
    assert got == {"1234", "2134", "1324", "1243", "1432", "2143", "3214", "4321"}
    assert not toral_cell_test(parse_element(S, "3412"))


def test_decision_examples():
    S = root_system("A", 3)
    c = decide_spherical(S, identity(S))
    assert c.verdict == SPHERICAL and c.reason == MaximalParabolic(frozenset())
    c = decide_spherical(S, parse_element(S, "4231"))
    assert c.verdict == SPHERICAL and isinstance(c.reason, KempfTransfer)
    assert c.reason.variant == "quotient" and c.reason.table == "mwz"
    c = decide_spherical(S, parse_element(S, "3412"))
    assert [format_element(x.element) for x in c.chain()] == ["3412", "3142", "1342"]
    A4 = root_system("A", 4)
    c = decide_spherical(A4, longest_element(A4).right_mul(1))
    assert c.verdict == NOT_SPHERICAL and isinstance(c.reason, NegativeClassification)
    assert not c.reason.table_accepts and len(c.reason.query.Jc) >= 3


@pytest.mark.parametrize("ft", [("A", 3), ("G", 2), ("B", 2), ("B", 3), ("C", 3), ("D", 4)])
def test_small_types_are_all_spherical(ft):
    S = root_system(*ft)
    for w in enumerate_group(S):
        assert decide_spherical(S, w).verdict == SPHERICAL, format_element(w)


@pytest.mark.parametrize("ft", [("A", 4), ("D", 4), ("G", 2), ("B", 3)])
def test_certificates_recheck(ft):
    S = root_system(*ft)
    for w in enumerate_group(S):
        c = decide_spherical(S, w)
        assert check_certificate(c) == [], format_element(w)


def test_a4_negative_family_is_exactly_interior_w0_si():
    A4 = root_system("A", 4)
    w0 = longest_element(A4)
    bad = {w for w in enumerate_group(A4) if decide_spherical(A4, w).verdict != SPHERICAL}
    assert bad == {w0.right_mul(1), w0.right_mul(2)}
    for i in (0, 3):
        assert decide_spherical(A4, w0.right_mul(i)).verdict == SPHERICAL


@pytest.mark.parametrize("ft", [("A", 4), ("D", 4)])
def test_certificate_invariants(ft):
    S = root_system(*ft)
    for w in enumerate_group(S):
        c = decide_spherical(S, w)
        assert c.verdict != UNKNOWN
        assert c.levi == levi_support(w)
        if isinstance(c.reason, MaximalParabolic):
            assert toral_cell_test(w)
        if is_smooth(w).smooth:
            assert decide_spherical(S, w.inverse()).verdict == c.verdict == SPHERICAL
        # each Kempf descent drops the length by one
        lengths = [x.element.length for x in c.chain()]
        assert all(a == b + 1 for a, b in zip(lengths, lengths[1:]))


@settings(max_examples=30)
@given(st.permutations(range(1, 6)))
def test_json_is_tree_of_reasons(p):
    S = root_system("A", 4)
    c = decide_spherical(S, parse_element(S, "".join(map(str, p))))
    js = c.to_json()
    assert set(js) == {"element", "verdict", "reason", "levi", "children"}
    assert js["reason"]["kind"] == c.kind
    assert len(js["children"]) == len(c.children)


def test_certificate_rejects_inconsistent_verdict():
    S = root_system("A", 2)
    e = identity(S)
    with pytest.raises(InternalInconsistencyError):
        SphericalCertificate(e, SPHERICAL, Unknown(), levi_support(e))
    with pytest.raises(ConstructionError):
        SphericalCertificate(e, "maybe", ToralCell(), levi_support(e))


def test_system_mismatch():
    with pytest.raises(SystemMismatchError):
        decide_spherical(root_system("A", 3), identity(root_system("A", 2)))
