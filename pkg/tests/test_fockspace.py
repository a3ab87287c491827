import pytest

from fockcanon.combinat import Charge, empty, multipartitions_up_to, parse_multipartition
from fockcanon.fockspace import (
    FockVector,
    apply_e,
    apply_f,
    apply_f_divided,
    h_pairing,
    weight_of,
)
from fockcanon.laurentq import ONE, LaurentPoly, q, quantum_int

from golden import A_4_EMPTY, G_21_1, S00, vec


def basis(text, s=S00):
    return FockVector.basis(parse_multipartition(text), s)


def test_f_on_vacuum():
    assert apply_f(basis("-|-"), 0) == vec(S00, {"1|-": {0: 1}, "-|1": {1: 1}})
    assert len(apply_f(basis("-|-"), 1)) == 0


def test_e_examples():
    assert len(apply_e(basis("-|-"), 0)) == 0
    # one addable 0-node below the removable one, at (1,1,2)
    assert apply_e(basis("1|-"), 0) == basis("-|-").scale(q**-1)
    # the addable 1-node (2,1,1) lies below the removable one
    assert apply_e(basis("2|-"), 1) == basis("1|-").scale(q**-1)


def test_divided_powers():
    v = basis("-|1")
    assert apply_f_divided(apply_f(v, 0), 1, 2) == vec(S00, G_21_1)
    assert apply_f_divided(v, 0, 1) == apply_f(v, 0)
    # f_0^2 gives (q + q^-1) s_((1),(1)) before dividing by [2]
    assert apply_f(apply_f(basis("-|-"), 0), 0) == basis("1|1").scale(q + q**-1)
    assert apply_f_divided(basis("-|-"), 0, 2) == basis("1|1")
    with pytest.raises(ValueError):
        apply_f_divided(v, 0, 0)


def test_ladder_product_for_four():
    v = basis("-|-")
    for i in (0, 1, 0, 1):
        v = apply_f(v, i)
    assert v == vec(S00, A_4_EMPTY)


def test_weight_of():
    assert weight_of(parse_multipartition("-|-"), S00).content == (0, 0)
    w = weight_of(parse_multipartition("2,1|1"), S00)
    assert w.content == (2, 2) and w.size == 4
    assert w.charge_counts == (2, 0)
    assert weight_of(parse_multipartition("1|-"), S00) == weight_of(parse_multipartition("-|1"), S00)


def test_h_pairing_examples():
    assert h_pairing(parse_multipartition("-|-"), 0, S00) == 2
    assert h_pairing(parse_multipartition("1|-"), 0, S00) == 0
    assert h_pairing(parse_multipartition("1|-"), 1, S00) == 2


def test_vector_arithmetic():
    a = basis("1|-") + basis("-|1").scale(q)
    b = a - basis("1|-")
    assert b == basis("-|1").scale(q)
    assert len(a - a) == 0
    assert a["2|-"] == LaurentPoly()
    with pytest.raises(ValueError):
        a + basis("1|-", Charge((0, 1), 2))
    with pytest.raises(ValueError):
        FockVector(S00, {((1,),): ONE})


CONTEXTS = [Charge(s, e) for e in (2, 3) for s in [(0,), (1,), (0, 0), (0, 1)]]


@pytest.mark.parametrize("s", CONTEXTS, ids=str)
def test_commutation_relation(s):
    for la in multipartitions_up_to(8, s.r):
        v = FockVector.basis(la, s)
        for i in range(s.e):
            lhs = apply_e(apply_f(v, i), i) - apply_f(apply_e(v, i), i)
            assert lhs == v.scale(quantum_int(h_pairing(la, i, s))), (la, i)


@pytest.mark.parametrize("s", CONTEXTS, ids=str)
def test_f_shifts_weight(s):
    for la in multipartitions_up_to(6, s.r):
        w = weight_of(la, s)
        for i in range(s.e):
            for mu in apply_f(FockVector.basis(la, s), i):
                c = list(w.content)
                c[i] += 1
                assert weight_of(mu, s).content == tuple(c)


@pytest.mark.parametrize("s", [Charge(x, e) for e in (2, 3, 4) for x in [(0,), (0, 0), (0, 1)]], ids=str)
def test_divided_powers_are_exact(s):
    for la in multipartitions_up_to(6, s.r):
        v = FockVector.basis(la, s)
        for i in range(s.e):
            for m in range(1, 5):
                apply_f_divided(v, i, m)


@pytest.mark.parametrize("e,i,j", [(4, 0, 2), (4, 1, 3), (5, 0, 2), (5, 1, 4), (6, 0, 3)])
def test_distant_f_commute(e, i, j):
    for res in [(0,), (0, 2)]:
        s = Charge(res, e)
        for la in multipartitions_up_to(4, s.r):
            v = FockVector.basis(la, s)
            assert apply_f(apply_f(v, i), j) == apply_f(apply_f(v, j), i)


def test_vacuum_is_killed_by_e():
    s = Charge((0, 1, 2), 3)
    v = FockVector.basis(empty(3), s)
    assert all(len(apply_e(v, i)) == 0 for i in range(3))
