"""Canonical basis of the tensor product module inside a higher-level Fock space.

The recursion runs on the number of components (empty first component) and
on the size of the first component (otherwise): the candidate vector is built
by applying ladder divided powers to the canonical vector of ``mu_0`` and then
lower canonical vectors are stripped off.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .combinat import (
    Charge,
    Multipartition,
    dominates,
    empty,
    extend,
    is_multiregular,
    ladder_decomposition,
    multipartitions_up_to,
    refine_order_gt,
    refine_order_gte,
    size,
    sort_key,
    sorted_labels,
    truncate,
    zero_first,
)
from .fockspace import FockVector, WeightData, apply_f_divided, weight_of
from .laurentq import ONE, LaurentPoly

Chooser = Callable[[list[Multipartition]], Multipartition]


class CanonicalBasisError(RuntimeError):
    """An invariant guaranteed by the theory failed: this indicates a bug."""


def default_choice(candidates: list[Multipartition]) -> Multipartition:
    return max(candidates, key=sort_key)


def strip(
    vec: FockVector,
    mu: Multipartition,
    lower: Callable[[Multipartition], FockVector],
    choose: Chooser = default_choice,
    on_select: Callable[[Multipartition], None] | None = None,
) -> FockVector:
    """Subtract bar-symmetric multiples of lower canonical vectors from ``vec``.

    ``vec`` must be bar-invariant with coefficient 1 at ``mu``.  Repeatedly
    pick a dominance-maximal label ``nu != mu`` whose coefficient is not in
    qZ[q] and subtract ``alpha * lower(nu)``, where ``alpha`` is the
    bar-symmetric part that brings that coefficient into qZ[q].
    """
    while True:
        bad = [nu for nu, c in vec.items() if nu != mu and not c.in_qZq()]
        if not bad:
            return vec
        maximal = [nu for nu in bad if not any(x != nu and dominates(x, nu) for x in bad)]
        nu = choose(maximal)
        if on_select is not None:
            on_select(nu)
        alpha = vec[nu].alpha_extract()
        vec = vec - lower(nu).scale(alpha)


@dataclass(frozen=True)
class CanonicalBasisEntry:
    """A canonical basis vector G(label) with its context.

    ``e`` is ``None`` for vectors computed in the e = infinity mode, in which
    case ``charge`` holds the integer charge rather than residues.
    """

    label: Multipartition
    vector: FockVector
    e: int | None
    charge: tuple[int, ...]

    def __getitem__(self, la: Multipartition) -> LaurentPoly:
        return self.vector[la]

    @property
    def weight(self) -> WeightData:
        return weight_of(self.label, self.vector.s)

    def check(self) -> None:
        """Unitriangularity, qZ[q] below the diagonal, dominance support, weight homogeneity."""
        mu, v = self.label, self.vector
        if v[mu] != ONE:
            raise CanonicalBasisError(f"coefficient of {mu} in G({mu}) is {v[mu]}, not 1")
        wt = weight_of(mu, v.s)
        for la, c in v.items():
            if la == mu:
                continue
            if not c.in_qZq():
                raise CanonicalBasisError(f"d[{la},{mu}] = {c} is not in qZ[q]")
            if not dominates(mu, la):
                raise CanonicalBasisError(f"{la} in support of G({mu}) but not dominated by it")
            if weight_of(la, v.s) != wt:
                raise CanonicalBasisError(f"{la} has a different weight from {mu}")


@dataclass
class CanonicalBasis:
    """Memoized canonical basis vectors for one charge.

    ``choose`` picks among dominance-maximal offending labels during
    stripping; any choice gives the same result.
    """

    s: Charge
    choose: Chooser = default_choice
    check_invariants: bool = True
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, repr=False)
    _lower: CanonicalBasis | None = field(default=None, repr=False)

    @property
    def e(self) -> int:
        return self.s.e

    def _truncated(self) -> CanonicalBasis:
        if self._lower is None:
            self._lower = CanonicalBasis(self.s.truncate(), self.choose, self.check_invariants)
        return self._lower

    def vector(self, mu: Multipartition) -> FockVector:
        mu = tuple(tuple(c) for c in mu)
        if len(mu) != self.s.r:
            raise ValueError(f"{mu} does not have {self.s.r} components")
        if not is_multiregular(mu, self.e):
            raise ValueError(f"{mu} is not {self.e}-multiregular")
        with self._lock:
            v = self._cache.get(mu)
            if v is None:
                v = self._compute(mu)
                self._cache[mu] = v
            return v

    def entry(self, mu: Multipartition) -> CanonicalBasisEntry:
        return CanonicalBasisEntry(tuple(tuple(c) for c in mu), self.vector(mu), self.e, self.s.residues)

    def _compute(self, mu: Multipartition) -> FockVector:
        s = self.s
        if mu == empty(s.r):
            return FockVector.basis(mu, s)
        if not mu[0]:
            lower = self._truncated().vector(truncate(mu))
            return lower.map_labels(extend, s)

        A = self.vector(zero_first(mu))
        for lad in ladder_decomposition(mu[0], s.e, s[1]):
            A = apply_f_divided(A, lad.residue, lad.size)

        if A[mu] != ONE:
            raise CanonicalBasisError(f"candidate for {mu} has leading coefficient {A[mu]}")
        for la in A:
            if not refine_order_gte(mu, la):
                raise CanonicalBasisError(f"candidate for {mu} has term {la} outside the recursion order")

        def selected(nu: Multipartition) -> None:
            # the ladder product is A(mu^(1)), not G(mu^(1)), so nu may keep |mu^(1)|
            if not is_multiregular(nu, s.e) or not refine_order_gt(mu, nu):
                raise CanonicalBasisError(f"stripping {mu} selected inadmissible label {nu}")

        G = strip(A, mu, self.vector, self.choose, selected)
        if self.check_invariants:
            CanonicalBasisEntry(mu, G, s.e, s.residues).check()
        return G

    def labels_up_to(self, n: int) -> list[Multipartition]:
        """Multiregular labels of size at most ``n`` in a dependency-safe order."""
        labels = [mu for mu in multipartitions_up_to(n, self.s.r) if is_multiregular(mu, self.e)]
        return sorted(labels, key=lambda mu: (size(mu), size(mu[0]), tuple(-x for x in sort_key(mu))))

    def up_to(self, n: int) -> list[CanonicalBasisEntry]:
        if n < 0:
            raise ValueError("size bound must be non-negative")
        return [self.entry(mu) for mu in self.labels_up_to(n)]


_registry: dict[Charge, CanonicalBasis] = {}
_registry_lock = threading.Lock()


def basis_for(s: Charge) -> CanonicalBasis:
    with _registry_lock:
        b = _registry.get(s)
        if b is None:
            b = _registry[s] = CanonicalBasis(s)
        return b


def _charge(e: int, s: Charge | Sequence[int]) -> Charge:
    if isinstance(s, Charge):
        if s.e != e:
            raise ValueError(f"charge has modulus {s.e}, expected {e}")
        return s
    return Charge(s, e)


def canonical_vector(mu: Multipartition, e: int, s: Charge | Sequence[int]) -> CanonicalBasisEntry:
    return basis_for(_charge(e, s)).entry(mu)


def canonical_basis_up_to(n: int, e: int, s: Charge | Sequence[int]) -> list[CanonicalBasisEntry]:
    return basis_for(_charge(e, s)).up_to(n)


# -- e = infinity -------------------------------------------------------------


class UnstableError(CanonicalBasisError):
    pass


def einf_modulus(s_int: Sequence[int], n_cap: int) -> int:
    return n_cap + (max(s_int) - min(s_int)) + 2


def canonical_vector_einf(
    mu: Multipartition, s_int: Sequence[int], n_cap: int | None = None
) -> CanonicalBasisEntry:
    """G(mu) for e = infinity, via a large finite e confirmed at e + 1."""
    s_int = tuple(int(x) for x in s_int)
    if n_cap is None:
        n_cap = size(mu)
    if size(mu) > n_cap:
        raise ValueError(f"|mu| = {size(mu)} exceeds the size cap {n_cap}")
    e = einf_modulus(s_int, n_cap)
    first = basis_for(Charge(s_int, e)).vector(mu)
    second = basis_for(Charge(s_int, e + 1)).vector(mu)
    if first.terms != second.terms:
        raise UnstableError(f"G({mu}) differs between e={e} and e={e + 1}; raise n_cap")
    return CanonicalBasisEntry(tuple(tuple(c) for c in mu), first, None, s_int)


def canonical_basis_up_to_einf(n: int, s_int: Sequence[int]) -> list[CanonicalBasisEntry]:
    e = einf_modulus(s_int, n)
    labels = CanonicalBasis(Charge(s_int, e)).labels_up_to(n)
    return [canonical_vector_einf(mu, s_int, n) for mu in labels]


# -- decomposition matrices ---------------------------------------------------


@dataclass
class DecompositionMatrix:
    """Rows are support labels, columns are canonical basis labels."""

    rows: list[Multipartition]
    columns: list[Multipartition]
    cells: dict[tuple[Multipartition, Multipartition], LaurentPoly]

    def __getitem__(self, key: tuple[Multipartition, Multipartition]) -> LaurentPoly:
        return self.cells.get(key, LaurentPoly())

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def to_lists(self) -> list[list[LaurentPoly]]:
        return [[self[la, mu] for mu in self.columns] for la in self.rows]


def decomposition_matrix(
    entries: Iterable[CanonicalBasisEntry], weight_block: WeightData | None = None
) -> DecompositionMatrix:
    entries = list(entries)
    contexts = {(en.e, en.charge) for en in entries}
    if len(contexts) > 1:
        raise ValueError(f"entries come from different contexts: {sorted(contexts, key=str)}")
    if weight_block is not None:
        entries = [en for en in entries if en.weight == weight_block]
    columns = sorted_labels(en.label for en in entries)
    by_label = {en.label: en for en in entries}
    cells = {}
    for mu in columns:
        for la, c in by_label[mu].vector.items():
            cells[la, mu] = c
    rows = sorted_labels({la for la, _ in cells})
    return DecompositionMatrix(rows, columns, cells)
