import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambda_local.errors import GroupTooLarge, InvalidGroup
from lambda_local.groups import (
    CATALOG_NAMES,
    METACYCLIC_NOT_CYCLIC,
    NONTRIVIAL_CYCLIC,
    NOT_METACYCLIC,
    TRIVIAL,
    FiniteGroup,
    abelian_invariants,
    abelianization,
    catalog_group,
    classify_sylow2,
    commutator_subgroup,
    contains_klein,
    cyclic,
    delta_consistency_check,
    delta_sign_character,
    direct_product,
    group_from_json,
    rk2,
    signature,
    small_groups,
    sylow2,
    transfer_map,
)

# every group of order <= 16 plus Z32; D8, Q16, Z4xZ4, Z2^3 are among them
CORPUS = small_groups()
ABELIAN = [G for G in CORPUS if G.is_abelian()]


def ids(groups):
    return [G.name for G in groups]


def test_catalog_is_distinct_and_valid():
    sigs = [signature(G) for G in small_groups()]
    assert len(set(sigs)) == len(sigs)
    for G in small_groups():
        FiniteGroup(G.table)  # revalidates the table
    assert [G.n for G in small_groups()].count(16) == 14
    assert [G.n for G in small_groups()].count(8) == 5


def test_invalid_tables():
    with pytest.raises(InvalidGroup):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroup):
        group_from_json({"order": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(InvalidGroup):
        catalog_group("nonsense")


def test_group_from_json():
    G = group_from_json({"order": 2, "table": [[0, 1], [1, 0]]})
    assert G.n == 2
    assert group_from_json({"catalog": "Q8"}).n == 8


def test_too_large():
    with pytest.raises(GroupTooLarge):
        sylow2(cyclic(66))


def test_sylow2_examples():
    Z12 = cyclic(12)
    assert sylow2(Z12).elements == (0, 3, 6, 9)
    assert sylow2(catalog_group("S3")).order == 2
    Q8 = catalog_group("Q8")
    assert sylow2(Q8).order == 8


def test_classification_examples():
    assert classify_sylow2(sylow2(cyclic(8))).case == NONTRIVIAL_CYCLIC
    q8 = classify_sylow2(sylow2(catalog_group("Q8")))
    assert q8.case == METACYCLIC_NOT_CYCLIC and not q8.contains_klein
    assert str(q8) == "MetacyclicNotCyclic{contains_klein: false}"
    assert classify_sylow2(sylow2(catalog_group("Z2^3"))).case == NOT_METACYCLIC
    assert classify_sylow2(sylow2(cyclic(9))).case == TRIVIAL
    assert classify_sylow2(sylow2(catalog_group("D8"))).contains_klein
    assert not classify_sylow2(sylow2(catalog_group("Q16"))).contains_klein
    assert classify_sylow2(sylow2(catalog_group("Pauli"))).case == NOT_METACYCLIC


def test_commutator_examples():
    S3 = catalog_group("S3")
    assert commutator_subgroup(S3).order == 3
    assert abelian_invariants(abelianization(S3)) == (2,)
    assert rk2(abelian_invariants(abelianization(S3))) == 1
    Q8 = catalog_group("Q8")
    Gp = commutator_subgroup(Q8)
    assert Gp.order == 2 and Gp == Q8.center
    assert abelian_invariants(abelianization(Q8)) == (2, 2)
    Z6 = cyclic(6)
    assert commutator_subgroup(Z6).order == 1
    assert abelian_invariants(Z6) == (6,)
    assert rk2((6,)) == 1


def test_delta_examples():
    assert delta_sign_character(cyclic(2), [0]) == (1, -1)
    assert set(delta_sign_character(cyclic(3), [0])) == {1}
    Q8 = catalog_group("Q8")
    assert set(delta_sign_character(Q8, [0])) == {1}


def test_transfer_examples():
    Z4 = cyclic(4)
    H = Z4.subgroup([0, 2])
    for g in range(4):
        assert transfer_map(Z4, H, g) == Z4.power(g, 2)
    S3 = catalog_group("S3")
    A3 = commutator_subgroup(S3)
    # the transfer into A3 is trivial: each 3-cycle maps to the identity
    for g in range(S3.n):
        assert transfer_map(S3, A3, g) == 0
    assert transfer_map(S3, A3, 0) == 0


def test_delta_consistency_examples():
    for name, nontrivial in [("Z2", True), ("Q8", False), ("S3", True)]:
        out = delta_consistency_check(catalog_group(name))
        assert out["ok"] and out["delta_nontrivial"] == nontrivial


@pytest.mark.parametrize("G", CORPUS, ids=ids(CORPUS))
def test_delta_is_homomorphism(G):
    for H in G.normal_subgroups:
        d = delta_sign_character(G, H)
        for a, b in itertools.product(range(G.n), repeat=2):
            assert d[G.mul(a, b)] == d[a] * d[b]
    d = delta_sign_character(G, G.trivial_subgroup())
    for a, b in itertools.product(range(G.n), repeat=2):
        assert d[G.mul(a, b)] == d[a] * d[b]


@pytest.mark.parametrize("G", CORPUS, ids=ids(CORPUS))
def test_dichotomy(G):
    assert delta_consistency_check(G)["ok"]


@pytest.mark.parametrize("G", CORPUS, ids=ids(CORPUS))
def test_gallagher(G):
    for H in G.normal_subgroups:
        d = delta_sign_character(G, H)
        Q, _ = G.quotient(H)
        cyclic_sylow = classify_sylow2(sylow2(Q)).case == NONTRIVIAL_CYCLIC
        assert (-1 in d) == cyclic_sylow


@pytest.mark.parametrize("G", ABELIAN, ids=ids(ABELIAN))
def test_abelian_delta_by_rank(G):
    d = delta_sign_character(G, G.trivial_subgroup())
    assert (-1 in d) == (rk2(abelian_invariants(G)) == 1)


@pytest.mark.parametrize("G", CORPUS, ids=ids(CORPUS))
def test_transfer_to_derived_is_trivial(G):
    # values are least representatives modulo [G', G'], so trivial means 0
    Gp = commutator_subgroup(G)
    assert all(transfer_map(G, Gp, g) == 0 for g in range(G.n))


def _two_torsion(G):
    return sum(1 for g in range(G.n) if G.mul(g, g) == 0)


@given(st.lists(st.sampled_from([1, 2, 3, 4, 6, 8]), min_size=1, max_size=3))
def test_two_torsion_multiplicative(orders):
    total = 1
    for n in orders:
        total *= n
    if total > 64:
        return
    G = cyclic(orders[0])
    for n in orders[1:]:
        G = direct_product(G, cyclic(n))
    expected = 1
    for n in orders:
        expected *= _two_torsion(cyclic(n))
    assert _two_torsion(G) == expected


def test_contains_klein():
    assert contains_klein(catalog_group("V"))
    assert not contains_klein(catalog_group("Q8"))
    assert not contains_klein(cyclic(8))


def test_catalog_names_cover_small_orders():
    assert len(CATALOG_NAMES) == 42
