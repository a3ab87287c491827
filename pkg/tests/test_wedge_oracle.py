import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockcanon.combinat import Charge, empty, multipartitions, multipartitions_up_to, parse_multipartition, size
from fockcanon.fockspace import FockVector
from fockcanon.laurentq import ONE, LaurentPoly, q
from fockcanon.llt_level1 import llt_canonical
from fockcanon.wedge_oracle import (
    Multicharge,
    WedgeError,
    WedgeWord,
    X_c,
    Y_c,
    abc,
    bar_coefficients,
    canonical_basis_twisted,
    decode,
    default_length,
    default_spacing,
    encode,
    indicator_one,
    nontail_length,
    oracle_canonical,
    oracle_multicharge,
    psi,
    twisted_space,
    wedge_algebra,
)

from golden import G_21_1, S00, vec

E, R = 2, 2
N = E * R
ALG = wedge_algebra(E, R)


def window_words(c, max_len=4, width=3 * N):
    pool = range(c, c + width)
    for l in range(1, max_len + 1):
        yield from itertools.permutations(pool, l)


def ones(word):
    return sum(1 for t in word if indicator_one(t, E, R))


# -- the a/b/m decomposition ---------------------------------------------------


@given(st.integers(-500, 500), st.integers(2, 5), st.integers(1, 4))
def test_abc_identity(t, e, r):
    d = abc(t, e, r)
    assert 1 <= d.a <= e and 1 <= d.b <= r
    assert t == d.a + e * (d.b - 1) - e * r * d.m


def test_first_block():
    assert indicator_one(5, 2, 2)
    assert [t for t in range(1, 9) if indicator_one(t, 2, 2)] == [1, 2, 5, 6]
    assert X_c(5, 5, 2, 2) == 1 and X_c(3, 3, 2, 2) == 0
    assert X_c(-3, 6, 2, 2) == 6
    assert Y_c(1, 6, 2, 2) == 2  # 2 and 6


@pytest.mark.parametrize("e,r", [(2, 2), (3, 2), (2, 3)])
def test_psi_is_order_preserving_bijection(e, r):
    outside = [t for t in range(-20, 21) if not indicator_one(t, e, r)]
    images = [psi(t, e, r) for t in outside]
    assert images == sorted(images)
    assert images == list(range(images[0], images[0] + len(images)))
    with pytest.raises(ValueError):
        psi(1, e, r)


# -- straightening ---------------------------------------------------------------


def test_relation_examples():
    assert ALG.relation(3, 3) == []
    assert ALG.straighten((3, 3)) == {}
    assert ALG.straighten((7, 4, 1)) == {(7, 4, 1): ONE}
    # t = 1, u = 7: a(t) = a(u) = 1, b(t) = 1, b(u) = 2, so beta = 2 > alpha = 0
    got = dict(((x, y), c) for c, x, y in ALG.relation(1, 7))
    assert got == {(7, 1): -q, (5, 3): q**2 - 1}


def test_relation_outputs_ordered_pairs():
    for t, u in itertools.combinations_with_replacement(range(-6, 10), 2):
        for c, x, y in ALG.relation(t, u):
            assert x > y and x + y == t + u and c


@pytest.mark.parametrize("c", [-5, 0, 3])
def test_window_lemmas(c):
    d = c + 3 * N - 1
    for w in window_words(c, 3):
        res = ALG.straighten(w, "leftmost")
        for u, coeff in res.items():
            assert coeff
            assert all(c <= x <= d for x in u)
            assert ones(u) == ones(w)
        if all(not indicator_one(t, E, R) for t in w):
            sx = sum(X_c(c, t, E, R) for t in w)
            sy = sum(Y_c(c, t, E, R) for t in w)
            for u in res:
                assert sum(X_c(c, t, E, R) for t in u) == sx
                assert sum(Y_c(c, t, E, R) for t in u) == sy


def test_window_lemmas_length_four():
    c = 0
    d = c + 3 * N - 1
    rng = random.Random(7)
    words = list(itertools.permutations(range(c, d + 1), 4))
    for w in rng.sample(words, 1500):
        for u in ALG.straighten(w):
            assert all(c <= x <= d for x in u) and ones(u) == ones(w)


def test_too_many_first_block_entries_vanish():
    # [3, 6] meets the first block in {5, 6}; three such entries must vanish
    for w in itertools.product([5, 6], repeat=3):
        assert ALG.straighten(w) == {}
    for w in itertools.permutations([1, 2, 5, 6, 3], 5):
        if ones(w) > 4:
            assert ALG.straighten(w) == {}


@pytest.mark.parametrize("c,d", [(1, 8), (-3, 10), (2, 13)])
def test_moving_first_block_to_front(c, d):
    us = [t for t in range(d, c - 1, -1) if indicator_one(t, E, R)]
    others = [t for t in range(d, c - 1, -1) if not indicator_one(t, E, R)]
    for m in range(1, 4):
        for vs in itertools.combinations(others, m):
            w = tuple(us) + vs
            scalar = LaurentPoly.const(1)
            for v in vs:
                scalar = scalar * LaurentPoly.monomial(Y_c(c, v, E, R), (-1) ** X_c(c, v, E, R))
            assert ALG.straighten(w) == {tuple(sorted(w, reverse=True)): scalar}


def test_psi_transports_straightening():
    lower = wedge_algebra(E, R - 1)
    outside = [t for t in range(-4, 10) if not indicator_one(t, E, R)]
    for w in itertools.permutations(outside, 3):
        up = {tuple(psi(t, E, R) for t in u): c for u, c in ALG.straighten(w).items()}
        assert up == lower.straighten(tuple(psi(t, E, R) for t in w))


@pytest.mark.parametrize("e,r", [(2, 2), (3, 2)])
def test_schedule_independence(e, r):
    alg = wedge_algebra(e, r)
    rng = random.Random(1)
    n = e * r
    words = list(window_words(-2, 3, 3 * n))
    words += rng.sample(list(itertools.permutations(range(-2, 3 * n - 2), 4)), 400)
    for w in words:
        ref = alg.straighten(w, "leftmost")
        assert alg.straighten(w, "rightmost") == ref
        assert alg.straighten(w, "random", random.Random(hash(w))) == ref
        assert alg.straighten(w, lambda word, ps: ps[len(ps) // 2]) == ref
        assert alg.straighten_by_insertion(w) == ref


def test_unknown_schedule():
    with pytest.raises(ValueError):
        ALG.straighten((1, 2), "sideways")


# -- encoding ------------------------------------------------------------------


def test_encode_vacuum_and_single_box():
    sc = Multicharge((0,), 2)
    assert encode(((),), sc, 4).entries == (0, -1, -2, -3)
    w = encode(((1,),), sc, 4).entries
    assert w == (1, -1, -2, -3)
    assert sum(x != y for x, y in zip(w, (0, -1, -2, -3))) == 1


def test_encode_rejects_short_length():
    sc = Multicharge((3, 0), 2)
    la = parse_multipartition("3,1|2")
    l0 = nontail_length(la, sc)
    encode(la, sc, l0)
    with pytest.raises(WedgeError):
        encode(la, sc, l0 - 1)


def test_decode_rejects_unordered():
    with pytest.raises(WedgeError):
        decode(WedgeWord((1, 3), 0), 2, 2)


@settings(max_examples=150)
@given(st.integers(1, 3), st.integers(2, 4), st.integers(0, 5), st.data())
def test_encode_decode_roundtrip(r, e, n, data):
    la = data.draw(st.sampled_from(multipartitions(n, r)))
    lifts = data.draw(st.lists(st.integers(-6, 6), min_size=r, max_size=r))
    sc = Multicharge(lifts, e)
    l = nontail_length(la, sc) + data.draw(st.integers(0, 6))
    w = encode(la, sc, l)
    assert all(x > y for x, y in zip(w.entries, w.entries[1:]))
    assert decode(w, e, r) == (la, sc)


def test_well_spaced_multicharge():
    s = Charge((1, 0, 1), 3)
    sc = Multicharge.well_spaced(s, 7)
    assert sc.residues() == s
    assert all(a - b >= 7 for a, b in zip(sc.lifts, sc.lifts[1:]))
    assert default_spacing(4, 2, 2) == 9


# -- the bar involution ---------------------------------------------------------


def test_bar_small_cases():
    sc = Multicharge((7, 0), 2)
    assert bar_coefficients(empty(2), sc) == {empty(2): ONE}
    assert bar_coefficients(((1,),), Multicharge((0,), 2)) == {((1,),): ONE}
    assert bar_coefficients(((1,),), Multicharge((5,), 3)) == {((1,),): ONE}


@pytest.mark.parametrize("mu", ["2,1|1", "4|-", "1|2", "-|3,1", "3|1"])
def test_bar_independent_of_length(mu):
    mu = parse_multipartition(mu)
    sc = oracle_multicharge(S00, size(mu))
    l = default_length(mu, sc)
    ref = bar_coefficients(mu, sc, l)
    for extra in (2, 5):
        assert bar_coefficients(mu, sc, l + extra) == ref
    assert bar_coefficients(mu, sc, check_length=True) == ref


def test_bar_is_an_involution():
    sp = twisted_space(oracle_multicharge(S00, 4))
    for n in range(5):
        for mu in multipartitions(n, 2):
            v = FockVector.basis(mu, S00)
            assert sp.bar(sp.bar(v)) == v


@pytest.mark.parametrize("s", [Charge((0, 1, 1), 2), Charge((2, 0, 1), 3)], ids=str)
def test_empty_first_component_truncates(s):
    n = 3
    sc = oracle_multicharge(s, n)
    lower = Multicharge(sc.lifts[1:], sc.e)
    for nu in multipartitions_up_to(n, s.r - 1):
        mu = ((),) + nu
        b = bar_coefficients(mu, sc)
        assert all(not la[0] for la in b)
        assert {la[1:]: c for la, c in b.items()} == bar_coefficients(nu, lower)


@pytest.mark.parametrize("s", [S00, Charge((0, 1), 2), Charge((0, 1), 3)], ids=str)
def test_bar_stable_under_wider_spacing(s):
    for n in range(5):
        d = default_spacing(n, s.e, s.r)
        near, far = oracle_multicharge(s, n, d), oracle_multicharge(s, n, 2 * d)
        for mu in multipartitions(n, s.r):
            assert bar_coefficients(mu, near) == bar_coefficients(mu, far), mu


# -- canonical bases ------------------------------------------------------------


def test_twisted_canonical_small_cases():
    sc = Multicharge((8, 0), 2)
    assert canonical_basis_twisted(empty(2), sc) == FockVector.basis(empty(2), S00)
    assert canonical_basis_twisted(((2, 1),), Multicharge((0,), 2)) == llt_canonical((2, 1), 2, 0)
    # any even gap lifts (0, 0)
    assert canonical_basis_twisted(parse_multipartition("2,1|1"), Multicharge((14, 0), 2)) == vec(S00, G_21_1)


def test_oracle_spacing_check():
    mu = parse_multipartition("3|1")
    assert oracle_canonical(mu, S00, check_spacing=True) == oracle_canonical(mu, S00)


def test_odd_modulus_signs():
    # moving a bead across a full block of e entries costs (-1)^e, which the
    # oracle must undo for odd e
    s = Charge((0, 0), 3)
    assert oracle_canonical(parse_multipartition("1|-"), s) == vec(s, {"1|-": {0: 1}, "-|1": {1: 1}})
