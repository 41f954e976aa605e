import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambda_local.cyclo import Mu4
from lambda_local.epsilon import local_constant
from lambda_local.errors import (
    EvenDegree,
    EvenRamification,
    EvenResidueCharacteristic,
    GroupTooLarge,
    IncomposableSymbolic,
    NotUnramified,
    OddDegree,
    TameImpossible,
)
from lambda_local.groups import catalog_group, cyclic
from lambda_local.lambdas import (
    EXACT,
    NON_SQUARE,
    OPEN_WILD,
    SQUARE,
    SYMBOLIC_W_ALPHA,
    SYMBOLIC_WITH_DELIGNE,
    DispatchContext,
    LambdaValue,
    henniart_odd_formula,
    lambda_dispatch,
    lambda_even_odd_ramification,
    lambda_klein_four,
    lambda_odd_galois,
    lambda_psi_minus_one,
    lambda_square_class_extension,
    lambda_tame_quadratic,
    lambda_tower,
    lambda_twist,
    lambda_unramified,
    q2_quadratic_catalog,
    tame_quadratic_crosscheck,
    trace_class_qp,
)
from lambda_local.padic import AddChar, ExtensionDescriptor, LocalField, quadratic_characters

MU4 = [Mu4(k) for k in range(4)]
Q2 = LocalField.qp(2)


def exact(s):
    return LambdaValue.exact(Mu4.parse(s), "test")


def test_odd_galois():
    Q7 = LocalField.qp(7)
    assert lambda_odd_galois(ExtensionDescriptor(Q7, (("tame", 3),), "galois")) == 1
    assert lambda_odd_galois(ExtensionDescriptor(Q7, (("unramified", 3), ("tame", 3)), "galois")) == 1
    assert lambda_odd_galois(3).provenance == ("odd-degree-galois",)
    with pytest.raises(EvenDegree):
        lambda_odd_galois(2)


def test_unramified():
    assert lambda_unramified(ExtensionDescriptor.unramified(Q2, 2), AddChar(Q2)) == 1
    assert lambda_unramified(ExtensionDescriptor.unramified(Q2, 4), 1) == -1
    assert lambda_unramified(ExtensionDescriptor.unramified(Q2, 2), AddChar(Q2, 2)) == -1
    with pytest.raises(OddDegree):
        lambda_unramified(ExtensionDescriptor.unramified(Q2, 3), 0)
    with pytest.raises(NotUnramified):
        lambda_unramified(ExtensionDescriptor.tame(LocalField.qp(3), 2), 0)


def test_unramified_matches_epsilon():
    # the unramified quadratic character of Q_p: W = (-1)^{n(psi)}
    for p in (2, 3, 5, 7):
        eta = quadratic_characters(p)[0]
        for n in range(-2, 3):
            psi = AddChar(LocalField.qp(p), Fraction(p) ** n)
            lam = lambda_unramified(ExtensionDescriptor.unramified(LocalField.qp(p), 2), psi)
            assert local_constant(eta, psi).mu4() == lam.value


def test_even_odd_ramification():
    Q5 = LocalField.qp(5)
    ext = ExtensionDescriptor(Q5, (("unramified", 2), ("tame", 3)), "galois")
    assert lambda_even_odd_ramification(ext, 0) == 1
    assert lambda_even_odd_ramification(ext, 1) == -1
    with pytest.raises(EvenRamification):
        lambda_even_odd_ramification(ExtensionDescriptor.tame(Q5, 2), 0)


def test_tame_quadratic_examples():
    assert lambda_tame_quadratic(5, SQUARE) == 1
    assert lambda_tame_quadratic(5, SQUARE, "conductor-minus-one") == 1
    assert lambda_tame_quadratic(3, SQUARE) == exact("i")
    assert lambda_tame_quadratic(9, SQUARE) == 1
    assert lambda_tame_quadratic(7, NON_SQUARE) == exact("-i")
    with pytest.raises(EvenResidueCharacteristic):
        lambda_tame_quadratic(4)
    with pytest.raises(ValueError):
        lambda_tame_quadratic(5, "maybe")


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_tame_quadratic_against_epsilon(p):
    psi = AddChar(LocalField.qp(p))
    for chi in quadratic_characters(p)[1:]:
        closed = lambda_tame_quadratic(p, trace_class_qp(chi)).value
        assert local_constant(chi, psi).mu4() == closed


def test_klein_four():
    assert lambda_klein_four(5) == -1
    assert lambda_klein_four(7) == 1
    assert lambda_klein_four(9) == -1
    with pytest.raises(EvenResidueCharacteristic):
        lambda_klein_four(8)


def test_square_class():
    assert lambda_square_class_extension(Q2) == 1
    assert lambda_square_class_extension(LocalField(2, (("unramified", 2),))) == 1
    assert lambda_square_class_extension(LocalField.qp(5)) == -1


def test_tower_and_twist():
    assert lambda_tower(exact("1"), exact("i"), 3) == exact("-i")
    for s in ("1", "i", "-1", "-i"):
        assert lambda_tower(exact(s), exact("1"), 5) == exact(s)
    # an odd |H| = 3 mod 4 inverts
    assert lambda_tower(exact("1"), exact("i"), 7) == exact("i") ** -1
    assert lambda_twist(exact("i"), -1) == exact("-i")
    assert lambda_twist(exact("1"), 1) == exact("1")
    base = lambda_unramified(ExtensionDescriptor.unramified(Q2, 2), 0)
    assert lambda_twist(base, -1) == lambda_unramified(ExtensionDescriptor.unramified(Q2, 2), 1)


def test_henniart():
    assert henniart_odd_formula(1, Mu4(0), 0, 5) == 1
    assert henniart_odd_formula(3, Mu4.sign(-1), 1, 3) == 1
    assert henniart_odd_formula(3, Mu4(1), 1, 2) == exact("-i")
    assert henniart_odd_formula(3, Mu4(1), 1, 4, p=2) == exact("-i")


def test_psi_minus_one_values():
    assert lambda_psi_minus_one(5) == Mu4(0)
    assert lambda_psi_minus_one(3) == Mu4(1)
    assert lambda_psi_minus_one(9) == Mu4(2) * Mu4(2)
    assert lambda_psi_minus_one(27) == Mu4(3)


def test_symbolic_values():
    w = LambdaValue(w_alpha_exp=1, provenance=("x",))
    assert w.kind == SYMBOLIC_W_ALPHA and str(w) == "W(alpha)"
    assert str(w ** -1) == "W(alpha)^-1"
    b = LambdaValue(w_alpha_exp=1, unknown_signs={"beta(-1)"})
    assert b.kind == SYMBOLIC_WITH_DELIGNE and str(b) == "beta(-1)*W(alpha)"
    assert str(LambdaValue(Mu4.sign(-1), unknown_signs={"beta(-1)"})) == "-beta(-1)"
    assert (b * b.resolve_w_alpha(Mu4(0), "r")).unknown_signs == frozenset()
    with pytest.raises(IncomposableSymbolic):
        w * w
    o = LambdaValue.open("wild")
    assert o.kind == OPEN_WILD and str(o) == "open" and (o * w).kind == OPEN_WILD
    assert w.resolve_w_alpha(Mu4(1), "r") == exact("i")
    with pytest.raises(ValueError):
        w.value
    assert exact("-i").to_json() == {"value": "-i", "kind": EXACT, "provenance": ["test"]}


@given(st.sampled_from(MU4), st.sampled_from(MU4), st.sampled_from(MU4), st.integers(1, 12), st.integers(1, 12))
def test_tower_associative(a, b, c, d1, d2):
    A, B, C = (LambdaValue.exact(x, "t") for x in (a, b, c))
    left = lambda_tower(lambda_tower(A, B, d1), C, d1 * d2)
    right = lambda_tower(A, lambda_tower(B, C, d2), d1)
    assert left == right


@given(st.sampled_from(MU4))
def test_exact_values_square_to_sign(a):
    lam = LambdaValue.exact(a, "t")
    assert (lam * lam).value in (Mu4(0), Mu4(2))


def ctx(p, q=None, **kw):
    return DispatchContext(p, q or p, **kw)


def test_dispatch_examples():
    assert lambda_dispatch(cyclic(3), ctx(5)) == 1
    assert lambda_dispatch(cyclic(15), ctx(2)) == 1
    assert lambda_dispatch(catalog_group("Q8"), ctx(5)) == 1
    assert lambda_dispatch(catalog_group("V"), ctx(5)) == -1
    assert lambda_dispatch(catalog_group("V"), ctx(3, 9)) == -1
    assert lambda_dispatch(catalog_group("V"), ctx(7)) == 1
    assert lambda_dispatch(catalog_group("Z2^3"), ctx(2)) == 1
    assert lambda_dispatch(cyclic(8), ctx(3)).kind == SYMBOLIC_W_ALPHA
    assert lambda_dispatch(catalog_group("D8"), ctx(2)).kind == OPEN_WILD
    with pytest.raises(TameImpossible):
        lambda_dispatch(catalog_group("Z2^3"), ctx(3))
    with pytest.raises(GroupTooLarge):
        lambda_dispatch(cyclic(70), ctx(3))


def test_dispatch_cyclic_details():
    assert str(lambda_dispatch(cyclic(6), ctx(7))) == "W(alpha)^-1"
    assert str(lambda_dispatch(cyclic(6), ctx(5))) == "W(alpha)"
    assert str(lambda_dispatch(cyclic(4), ctx(7))) == "beta(-1)*W(alpha)"
    # i in F resolves beta(-1) through alpha(i)
    assert lambda_dispatch(cyclic(4), ctx(5, alpha="tame", trace_class=SQUARE)) == -1
    assert lambda_dispatch(cyclic(4), ctx(13, alpha="tame", trace_class=SQUARE)) == -1
    assert lambda_dispatch(cyclic(4), ctx(17, alpha="tame", trace_class=SQUARE)) == 1
    assert lambda_dispatch(cyclic(2), ctx(5, alpha="unramified", n_psi=1)) == -1
    assert lambda_dispatch(cyclic(2), ctx(7, alpha="tame", trace_class=NON_SQUARE)) == exact("-i")
    assert str(lambda_dispatch(cyclic(4), ctx(2))) == "c1G*W(alpha)"
    assert str(lambda_dispatch(cyclic(8), ctx(2))) == "W(alpha)"


def test_dispatch_context_validation():
    with pytest.raises(ValueError):
        DispatchContext(3, 25)
    with pytest.raises(ValueError):
        DispatchContext(5, 5, i_in_F=False)
    with pytest.raises(ValueError):
        DispatchContext(2, 2, alpha="tame")
    assert DispatchContext.from_json({"p": 3, "q": 9}).i_in_F


ABELIAN = ["Z2", "Z4", "V", "Z4xZ2", "Z8", "Z3", "Z6"]


@pytest.mark.parametrize("name", ABELIAN)
@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_dispatch_by_two_rank(name, q):
    from lambda_local.groups import abelian_invariants, rk2

    G = catalog_group(name)
    p = 3 if q in (3, 9) else q
    lam = lambda_dispatch(G, ctx(p, q))
    r = rk2(abelian_invariants(G))
    if r == 0:
        assert lam == 1
    elif r == 1:
        assert lam.w_alpha_exp in (1, 3)
    else:
        assert lam == lambda_klein_four(q)


def test_q2_catalog():
    rows = q2_quadratic_catalog()
    assert [str(r["lambda"]) for r in rows] == ["1", "i", "i", "1", "-1", "i", "-i"]
    assert [r["a"] for r in rows] == [0, 2, 2, 3, 3, 3, 3]
    product = Mu4()
    for r in rows:
        product = product * r["lambda"]
        assert r["lambda"] == r["expected"]
    assert product == Mu4()


@pytest.mark.parametrize("b", [2, 3, 5, Fraction(1, 2)])
def test_q2_catalog_under_shift(b):
    for r in q2_quadratic_catalog(b):
        assert r["lambda"] == r["expected"]


def test_crosscheck_rows():
    five = tame_quadratic_crosscheck(5)
    assert five["lambda_KF"] == "-1" and five["lambda1"] == "1"
    assert {five["lambda2"], five["lambda3"]} == {"1", "-1"}
    three = tame_quadratic_crosscheck(3)
    assert three["lambda_KF"] == "1" and {three["lambda2"], three["lambda3"]} == {"i", "-i"}
    seven = tame_quadratic_crosscheck(7)
    assert Mu4.parse(seven["lambda2"]) ** 2 == Mu4.sign(-1)


@pytest.mark.parametrize("p,n", list(itertools.product([3, 5, 7, 11, 13], [-1, 0, 1, 2])))
def test_crosscheck_all_relations(p, n):
    assert tame_quadratic_crosscheck(p, n)["ok"]
