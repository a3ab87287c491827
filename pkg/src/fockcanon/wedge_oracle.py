"""Brute-force oracle: the bar involution on twisted Fock spaces via wedge straightening.

Multipartitions are encoded as ordered semi-infinite wedges.  The bar
involution reverses a long finite prefix of the wedge and straightens it
back into ordered wedges using the length-two relations modulo ``e*r``.
Only finite prefixes are ever materialized; the tail ``t_i = s + 1 - i``
is implicit.

Everything here is deliberately independent of :mod:`fockcanon.canonical`
so the two routes can be compared.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .combinat import (
    Charge,
    Multipartition,
    multipartitions,
    residue_content,
    size,
    sort_key,
)
from .fockspace import FockVector
from .laurentq import ONE, ZERO, LaurentPoly

Word = tuple[int, ...]
WedgeVector = dict[Word, LaurentPoly]


class WedgeError(RuntimeError):
    pass


# -- the a/b/m decomposition and the auxiliary maps -------------------------


@dataclass(frozen=True)
class AbcDecomposition:
    a: int
    b: int
    m: int


def abc(t: int, e: int, r: int) -> AbcDecomposition:
    """Write ``t = a + e(b-1) - e*r*m`` with ``a`` in 1..e and ``b`` in 1..r."""
    x = (t - 1) % (e * r)
    return AbcDecomposition(x % e + 1, x // e + 1, -((t - 1 - x) // (e * r)))


def indicator_one(t: int, e: int, r: int) -> bool:
    """Whether ``t`` lies in the first block, i.e. ``t mod er`` is in 1..e."""
    return abc(t, e, r).b == 1


def psi(t: int, e: int, r: int) -> int:
    """Order-preserving bijection from the integers outside the first block onto Z."""
    d = abc(t, e, r)
    if d.b == 1:
        raise ValueError(f"psi is undefined on {t}, which lies in the first block")
    return d.a + e * (d.b - 2) - e * (r - 1) * d.m


def X_c(c: int, v: int, e: int, r: int) -> int:
    return sum(1 for t in range(c, v + 1) if indicator_one(t, e, r))


def Y_c(c: int, v: int, e: int, r: int) -> int:
    return sum(1 for t in range(c, v + 1) if indicator_one(t, e, r) and (t - v) % e == 0)


# -- straightening -----------------------------------------------------------


def _laurent(*pairs: tuple[int, int]) -> LaurentPoly:
    return LaurentPoly(pairs)


@lru_cache(maxsize=None)
def _odd_ratio(m: int) -> LaurentPoly:
    # (q^{2m+1} + q^{-2m-1}) / (q + q^-1)
    return _laurent((2 * m + 1, 1), (-2 * m - 1, 1)).exact_div(_laurent((1, 1), (-1, 1)))


@lru_cache(maxsize=None)
def _even_ratio(k: int) -> LaurentPoly:
    # (q^k - q^-k) / (q + q^-1), k even
    return _laurent((k, 1), (-k, -1)).exact_div(_laurent((1, 1), (-1, 1)))


_Q_MINUS_QINV = _laurent((1, 1), (-1, -1))
_QINV_MINUS_Q = -_Q_MINUS_QINV
_QM2_MINUS_1 = _laurent((-2, 1), (0, -1))
_Q2_MINUS_1 = _laurent((2, 1), (0, -1))


class WedgeAlgebra:
    """Straightening of finite wedges for fixed ``(e, r)``."""

    def __init__(self, e: int, r: int):
        if e < 2 or r < 1:
            raise ValueError(f"need e >= 2 and r >= 1, got e={e}, r={r}")
        self.e, self.r, self.n = e, r, e * r
        self._insert_memo: dict[tuple[int, Word], WedgeVector] = {}
        self._rel_memo: dict[tuple[int, int], list[tuple[LaurentPoly, int, int]]] = {}

    def abc(self, t: int) -> AbcDecomposition:
        return abc(t, self.e, self.r)

    def relation(self, t: int, u: int) -> list[tuple[LaurentPoly, int, int]]:
        """Rewrite ``[t] ^ [u]`` with ``t <= u`` as ``sum(c * [x] ^ [y])`` with ``x > y``."""
        if t > u:
            raise ValueError("relation applies to pairs with t <= u")
        key = (t, u)
        out = self._rel_memo.get(key)
        if out is None:
            out = self._rel_memo[key] = self._relation(t, u)
        return out

    def _relation(self, t: int, u: int) -> list[tuple[LaurentPoly, int, int]]:
        n = self.n
        at, bt = self.abc(t).a, self.abc(t).b
        au, bu = self.abc(u).a, self.abc(u).b
        alpha = (au - at) % n
        beta = (self.e * (bu - bt)) % n
        if t == u:
            return []
        terms: list[tuple[LaurentPoly, int, int]] = []

        def series(shift: int, start: int, coeff: Callable[[int], LaurentPoly]) -> None:
            m = start
            while u - shift - n * m > t + shift + n * m:
                c = coeff(m)
                if c:
                    terms.append((c, u - shift - n * m, t + shift + n * m))
                m += 1

        if alpha == 0 and beta == 0:
            terms.append((LaurentPoly.const(-1), u, t))
        elif beta == 0:
            terms.append((LaurentPoly.monomial(-1, -1), u, t))
            series(alpha, 0, lambda m: _QM2_MINUS_1.shift(-2 * m))
            series(0, 1, lambda m: -_QM2_MINUS_1.shift(1 - 2 * m))
        elif alpha == 0:
            terms.append((LaurentPoly.monomial(1, -1), u, t))
            series(beta, 0, lambda m: _Q2_MINUS_1.shift(2 * m))
            series(0, 1, lambda m: -_Q2_MINUS_1.shift(2 * m - 1))
        else:
            terms.append((LaurentPoly.const(-1), u, t))
            series(beta, 0, lambda m: _Q_MINUS_QINV * _odd_ratio(m))
            series(alpha, 0, lambda m: _QINV_MINUS_Q * _odd_ratio(m))
            series(alpha + beta, 0, lambda m: _Q_MINUS_QINV * _even_ratio(2 * m + 2))
            series(0, 1, lambda m: _QINV_MINUS_Q * _even_ratio(2 * m))
        return _merge_pairs(terms)

    # Generic straightening by adjacent transpositions.

    def straighten(
        self,
        word: Sequence[int],
        schedule: str | Callable[[Word, list[int]], int] = "leftmost",
        rng: random.Random | None = None,
    ) -> WedgeVector:
        """Express ``word`` in the ordered-wedge basis.

        ``schedule`` chooses which ascending adjacent pair to rewrite next:
        ``"leftmost"``, ``"rightmost"``, ``"random"`` or a callable
        ``(word, positions) -> position``.
        """
        if schedule == "leftmost":
            pick = lambda w, ps: ps[0]  # noqa: E731
        elif schedule == "rightmost":
            pick = lambda w, ps: ps[-1]  # noqa: E731
        elif schedule == "random":
            rng = rng or random.Random()
            pick = lambda w, ps: rng.choice(ps)  # noqa: E731
        elif callable(schedule):
            pick = schedule
        else:
            raise ValueError(f"unknown schedule {schedule!r}")

        memo: dict[Word, WedgeVector] = {}

        def go(w: Word) -> WedgeVector:
            positions = [p for p in range(len(w) - 1) if w[p] <= w[p + 1]]
            if not positions:
                return {w: ONE}
            res = memo.get(w)
            if res is not None:
                return res
            p = pick(w, positions)
            res = {}
            for c, x, y in self.relation(w[p], w[p + 1]):
                for z, c2 in go(w[:p] + (x, y) + w[p + 2:]).items():
                    _acc(res, z, c * c2)
            memo[w] = res
            return res

        return dict(go(tuple(word)))

    # Fast path: push one entry into an already ordered word.

    def insert(self, x: int, w: Word) -> WedgeVector:
        """Straighten ``[x] ^ w`` where ``w`` is ordered."""
        if not w or x > w[0]:
            return {(x,) + w: ONE}
        key = (x, w)
        res = self._insert_memo.get(key)
        if res is not None:
            return res
        res = {}
        rest = w[1:]
        for c, hi, lo in self.relation(x, w[0]):
            for v, c2 in self.insert(lo, rest).items():
                cc = c * c2
                for z, c3 in self.insert(hi, v).items():
                    _acc(res, z, cc * c3)
        self._insert_memo[key] = res
        return res

    def straighten_by_insertion(self, word: Sequence[int]) -> WedgeVector:
        word = tuple(word)
        if not word:
            return {(): ONE}
        acc: WedgeVector = {(word[-1],): ONE}
        for x in reversed(word[:-1]):
            nxt: WedgeVector = {}
            for v, c in acc.items():
                for z, c2 in self.insert(x, v).items():
                    _acc(nxt, z, c * c2)
            acc = nxt
        return acc

    def clear(self) -> None:
        self._insert_memo.clear()


def _acc(d: dict, key, c: LaurentPoly) -> None:
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def _merge_pairs(terms):
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for c, x, y in terms:
        _acc(acc, (x, y), c)
    return [(c, x, y) for (x, y), c in acc.items()]


@lru_cache(maxsize=None)
def wedge_algebra(e: int, r: int) -> WedgeAlgebra:
    return WedgeAlgebra(e, r)


# -- encoding multipartitions as wedges --------------------------------------


@dataclass(frozen=True)
class Multicharge:
    lifts: tuple[int, ...]
    e: int

    def __init__(self, lifts: Sequence[int], e: int):
        object.__setattr__(self, "lifts", tuple(int(x) for x in lifts))
        object.__setattr__(self, "e", int(e))

    @property
    def r(self) -> int:
        return len(self.lifts)

    @property
    def charge(self) -> int:
        return sum(self.lifts)

    def residues(self) -> Charge:
        return Charge(self.lifts, self.e)

    @classmethod
    def well_spaced(cls, s: Charge, spacing: int) -> Multicharge:
        """A lift of ``s`` with consecutive gaps ``s~_k - s~_{k+1} >= spacing``."""
        lifts = [s.residues[-1]]
        for k in range(s.r - 2, -1, -1):
            gap = spacing + (s.residues[k] - lifts[0] - spacing) % s.e
            lifts.insert(0, lifts[0] + gap)
        return cls(lifts, s.e)


def default_spacing(n: int, e: int, r: int) -> int:
    return n + e * r + 1


@dataclass(frozen=True)
class WedgeWord:
    """The first ``len(entries)`` entries of a semi-infinite wedge of the given charge."""

    entries: Word
    charge: int

    @property
    def tail_start(self) -> int:
        return len(self.entries)


def _full_prefix(la: Multipartition, sc: Multicharge) -> Word:
    """All wedge entries down to safely inside the tail region."""
    e, r = sc.e, sc.r
    if len(la) != r:
        raise ValueError(f"{la} does not have {r} components")

    def check(beta: int, k: int) -> int:
        a = (beta - 1) % e + 1
        m = (a - beta) // e
        return a + e * (k - 1) - e * r * m

    low = min(check(sc.lifts[k] - len(la[k]), k + 1) for k in range(r)) - e * r
    out = []
    for k in range(r):
        comp = la[k]
        i = 1
        while True:
            part = comp[i - 1] if i <= len(comp) else 0
            t = check(part + sc.lifts[k] + 1 - i, k + 1)
            if t < low:
                break
            out.append(t)
            i += 1
    out.sort(reverse=True)
    return tuple(out)


def nontail_length(la: Multipartition, sc: Multicharge) -> int:
    s = sc.charge
    full = _full_prefix(la, sc)
    l0 = 0
    for i, t in enumerate(full, 1):
        if t != s + 1 - i:
            l0 = i
    return l0


def encode(la: Multipartition, sc: Multicharge, l: int) -> WedgeWord:
    s = sc.charge
    full = _full_prefix(la, sc)
    l0 = nontail_length(la, sc)
    if l < l0:
        raise WedgeError(f"truncation length {l} is below the non-tail length {l0}")
    entries = list(full[:l])
    while len(entries) < l:
        entries.append(s - len(entries))
    return WedgeWord(tuple(entries), s)


def decode(w: WedgeWord, e: int, r: int) -> tuple[Multipartition, Multicharge]:
    t, s, l = w.entries, w.charge, len(w.entries)
    if any(x <= y for x, y in zip(t, t[1:])) or (t and t[-1] <= s - l):
        raise WedgeError(f"wedge {t} of charge {s} is not ordered")
    window = list(t) + [s - l - j for j in range(e * r)]
    betas: list[list[int]] = [[] for _ in range(r)]
    for x in window:
        d = abc(x, e, r)
        betas[d.b - 1].append(d.a - e * d.m)
    lifts, comps = [], []
    for bs in betas:
        bs.sort(reverse=True)
        lift = bs[-1] - 1 + len(bs)
        parts = [b - lift - 1 + i for i, b in enumerate(bs, 1)]
        while parts and parts[-1] == 0:
            parts.pop()
        lifts.append(lift)
        comps.append(tuple(parts))
    return tuple(comps), Multicharge(lifts, e)


# -- the bar involution -------------------------------------------------------


def component_parity(la: Multipartition, sc: Multicharge, depth: int) -> int:
    """Parity of the permutation sorting the wedge entries listed component by component.

    Each component contributes its first ``depth`` entries.  Standard basis
    vectors correspond to ordered wedges only up to this sign: moving a bead
    across a full block of another component costs ``(-1)^e``.
    """
    from bisect import bisect_right

    e, r = sc.e, sc.r
    rows = []
    for k in range(r):
        comp = la[k]
        col = []
        for i in range(1, depth + 1):
            beta = (comp[i - 1] if i <= len(comp) else 0) + sc.lifts[k] + 1 - i
            a = (beta - 1) % e + 1
            col.append(a + e * k - e * r * ((a - beta) // e))
        rows.append(sorted(col))
    inv = 0
    for j in range(r):
        for k in range(j + 1, r):
            # entries of an earlier component that are smaller than a later one
            inv += sum(bisect_right(rows[j], y - 1) for y in rows[k])
    return inv % 2


def default_length(mu: Multipartition, sc: Multicharge) -> int:
    """Prefix length covering every label of size ``|mu|``, plus ``e*r`` slack.

    A single column ``(1^n)`` pushes beads furthest into the tail.
    """
    n, r = size(mu), sc.r
    columns = [tuple((1,) * n if j == k else () for j in range(r)) for k in range(r)]
    return max(nontail_length(la, sc) for la in [mu, *columns]) + sc.e * r


def bar_coefficients(
    mu: Multipartition, sc: Multicharge, l: int | None = None, check_length: bool = False
) -> dict[Multipartition, LaurentPoly]:
    """Coefficients ``b[la]`` of ``bar(s_mu)`` in the twisted Fock space.

    With ``check_length`` the computation is repeated at ``l + e*r`` and a
    mismatch raises :class:`WedgeError`.
    """
    if l is None:
        l = default_length(mu, sc)
    if check_length:
        first = bar_coefficients(mu, sc, l)
        if bar_coefficients(mu, sc, l + sc.e * sc.r) != first:
            raise WedgeError(f"bar({mu}) changes between truncation lengths {l} and {l + sc.e * sc.r}")
        return first
    word = encode(mu, sc, l)
    alg = wedge_algebra(sc.e, sc.r)
    reversed_prefix = word.entries[::-1]
    raw = alg.straighten_by_insertion(reversed_prefix)
    coeffs: dict[Multipartition, LaurentPoly] = {}
    for z, c in raw.items():
        la, sc2 = decode(WedgeWord(z, word.charge), sc.e, sc.r)
        if sc2 != sc:
            raise WedgeError(f"straightening {mu} produced a wedge of multicharge {sc2.lifts}")
        coeffs[la] = c
    depth = l + max(len(c) for c in mu) + 1
    base = component_parity(mu, sc, depth)
    coeffs = {la: (-c if component_parity(la, sc, depth) != base else c) for la, c in coeffs.items()}
    lead = coeffs.get(mu)
    if not lead:
        raise WedgeError(f"bar({mu}) has zero diagonal coefficient")
    try:
        return {la: c.exact_div(lead) for la, c in coeffs.items()}
    except ArithmeticError as exc:
        raise WedgeError(f"normalizing bar({mu}) failed: {exc}") from exc


class TwistedFockSpace:
    """Bar involution and canonical basis of the twisted Fock space of a multicharge."""

    def __init__(self, sc: Multicharge):
        self.sc = sc
        self.s = sc.residues()
        self._bar: dict[Multipartition, dict[Multipartition, LaurentPoly]] = {}
        self._canon: dict[Multipartition, FockVector] = {}

    def bar_column(self, mu: Multipartition) -> dict[Multipartition, LaurentPoly]:
        col = self._bar.get(mu)
        if col is None:
            col = self._bar[mu] = bar_coefficients(mu, self.sc)
        return col

    def weight_space(self, mu: Multipartition) -> list[Multipartition]:
        """Labels of the weight space of ``mu``, most dominant first."""
        content = residue_content(mu, self.s)
        labels = [la for la in multipartitions(size(mu), self.s.r) if residue_content(la, self.s) == content]
        return sorted(labels, key=sort_key, reverse=True)

    def bar(self, v: FockVector) -> FockVector:
        if v.s != self.s:
            raise ValueError("vector lives in a different Fock space")
        out: dict[Multipartition, LaurentPoly] = {}
        for nu, c in v.items():
            cb = c.bar()
            for la, b in self.bar_column(nu).items():
                _acc(out, la, cb * b)
        return FockVector(self.s, out)

    def canonical(self, mu: Multipartition) -> FockVector:
        mu = tuple(tuple(c) for c in mu)
        v = self._canon.get(mu)
        if v is None:
            v = self._canon[mu] = self._canonical(mu)
        return v

    def _canonical(self, mu: Multipartition) -> FockVector:
        space = self.weight_space(mu)
        pos = {la: i for i, la in enumerate(space)}
        cols = {nu: self.bar_column(nu) for nu in space}
        for nu, col in cols.items():
            for la in col:
                if la not in pos:
                    raise WedgeError(f"bar({nu}) involves {la} outside the weight space")
                if la != nu and pos[la] < pos[nu]:
                    raise WedgeError(f"bar matrix not triangular: b[{la},{nu}] = {col[la]}")
        d: dict[Multipartition, LaurentPoly] = {mu: ONE}
        for la in space[pos[mu] + 1:]:
            rhs = ZERO
            for nu, dn in d.items():
                b = cols[nu].get(la)
                if b:
                    rhs = rhs + b * dn.bar()
            if not rhs:
                continue
            dl = LaurentPoly((k, v) for k, v in rhs.items() if k > 0)
            if dl - dl.bar() != rhs:
                raise WedgeError(f"triangular system inconsistent at {la}: {rhs} is not antisymmetric")
            if dl:
                d[la] = dl
        return FockVector(self.s, d)


_spaces: dict[Multicharge, TwistedFockSpace] = {}


def twisted_space(sc: Multicharge) -> TwistedFockSpace:
    sp = _spaces.get(sc)
    if sp is None:
        sp = _spaces[sc] = TwistedFockSpace(sc)
    return sp


def canonical_basis_twisted(mu: Multipartition, sc: Multicharge) -> FockVector:
    return twisted_space(sc).canonical(mu)


def oracle_multicharge(s: Charge, n: int, spacing: int | None = None) -> Multicharge:
    if spacing is None:
        spacing = default_spacing(n, s.e, s.r)
    return Multicharge.well_spaced(s, spacing)


def oracle_canonical(
    mu: Multipartition, s: Charge, spacing: int | None = None, check_spacing: bool = False
) -> FockVector:
    """Canonical basis vector of the untwisted Fock space via a well-spaced multicharge.

    ``check_spacing`` recomputes with twice the spacing and raises
    :class:`WedgeError` if anything changes.
    """
    mu = tuple(tuple(c) for c in mu)
    if spacing is None:
        spacing = default_spacing(size(mu), s.e, s.r)
    v = canonical_basis_twisted(mu, oracle_multicharge(s, size(mu), spacing))
    if check_spacing and s.r > 1:
        w = canonical_basis_twisted(mu, oracle_multicharge(s, size(mu), 2 * spacing))
        if w != v:
            raise WedgeError(f"oracle vector for {mu} changes between spacings {spacing} and {2 * spacing}")
    return v


def oracle_bar(v: FockVector, spacing: int | None = None) -> FockVector:
    sizes = {size(la) for la in v}
    if len(sizes) > 1:
        raise ValueError("oracle_bar expects a vector supported in one size")
    n = sizes.pop() if sizes else 0
    return twisted_space(oracle_multicharge(v.s, n, spacing)).bar(v)


def wedge_to_multipartitions(vec: WedgeVector, charge: int, e: int, r: int) -> Iterable:
    for z, c in vec.items():
        yield decode(WedgeWord(z, charge), e, r), c
