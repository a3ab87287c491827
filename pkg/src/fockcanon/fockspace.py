"""The Fock space as a sparse Z[q, q^-1]-module with the actions of e_i and f_i."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .combinat import (
    Charge,
    Multipartition,
    Node,
    all_addable,
    all_removable,
    residue,
    residue_content,
    sorted_labels,
)
from .laurentq import ONE, LaurentPoly, quantum_factorial


@dataclass(frozen=True)
class WeightData:
    """Weight of a standard basis vector: the charge multiset and residue content."""

    charge_counts: tuple[int, ...]
    content: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.content)


def weight_of(la: Multipartition, s: Charge) -> WeightData:
    counts = [0] * s.e
    for x in s.residues:
        counts[x] += 1
    return WeightData(tuple(counts), residue_content(la, s))


class FockVector:
    """Finitely supported combination of standard basis vectors ``s_la``."""

    __slots__ = ("s", "terms")

    def __init__(self, s: Charge, terms: Mapping[Multipartition, LaurentPoly] | Iterable = ()):
        self.s = s
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Multipartition, LaurentPoly] = {}
        for la, c in items:
            if len(la) != s.r:
                raise ValueError(f"label {la} does not have {s.r} components")
            _accumulate(acc, la, LaurentPoly._coerce(c))
        self.terms = acc

    @classmethod
    def basis(cls, la: Multipartition, s: Charge) -> FockVector:
        return cls(s, {la: ONE})

    def __getitem__(self, la: Multipartition) -> LaurentPoly:
        return self.terms.get(la, LaurentPoly())

    def __iter__(self) -> Iterator[Multipartition]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def support(self) -> list[Multipartition]:
        return sorted_labels(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.s == other.s and self.terms == other.terms

    def _same_space(self, other: FockVector) -> None:
        if self.s != other.s:
            raise ValueError(f"vectors live in different Fock spaces: {self.s} vs {other.s}")

    def __add__(self, other: FockVector) -> FockVector:
        self._same_space(other)
        acc = dict(self.terms)
        for la, c in other.terms.items():
            _accumulate(acc, la, c)
        return _from_terms(self.s, acc)

    def __sub__(self, other: FockVector) -> FockVector:
        return self + other.scale(-1)

    def scale(self, c: LaurentPoly | int) -> FockVector:
        c = LaurentPoly._coerce(c)
        if not c:
            return _from_terms(self.s, {})
        return _from_terms(self.s, {la: v * c for la, v in self.terms.items()})

    def map_labels(self, f, s: Charge) -> FockVector:
        """Relabel every term by ``f`` into the Fock space of charge ``s``."""
        return FockVector(s, ((f(la), c) for la, c in self.terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*s{la}" for la, c in ((la, self.terms[la]) for la in self.support()))
        return f"FockVector({body or '0'})"


def _accumulate(acc: dict, la, c: LaurentPoly) -> None:
    v = acc.get(la)
    v = c if v is None else v + c
    if v:
        acc[la] = v
    else:
        acc.pop(la, None)


def _from_terms(s: Charge, terms: dict) -> FockVector:
    v = object.__new__(FockVector)
    v.s = s
    v.terms = terms
    return v


# -- the action -------------------------------------------------------------


def _signed_nodes(la: Multipartition, i: int, s: Charge) -> list[tuple[Node, bool]]:
    """Addable (True) and removable (False) i-nodes, highest first."""
    i %= s.e
    out = [(n, True) for n in all_addable(la) if residue(n, s) == i]
    out += [(n, False) for n in all_removable(la) if residue(n, s) == i]
    out.sort(key=lambda t: t[0].order_key())
    return out


def _add(la: Multipartition, n: Node) -> Multipartition:
    comp = la[n.comp - 1]
    comp = comp + (1,) if n.row > len(comp) else comp[: n.row - 1] + (comp[n.row - 1] + 1,) + comp[n.row:]
    return la[: n.comp - 1] + (comp,) + la[n.comp:]


def _remove(la: Multipartition, n: Node) -> Multipartition:
    comp = la[n.comp - 1]
    if comp[n.row - 1] == 1:
        comp = comp[: n.row - 1]
    else:
        comp = comp[: n.row - 1] + (comp[n.row - 1] - 1,) + comp[n.row:]
    return la[: n.comp - 1] + (comp,) + la[n.comp:]


def f_on_basis(la: Multipartition, i: int, s: Charge) -> list[tuple[Multipartition, int]]:
    """``f_i s_la`` as ``(label, exponent of q)`` pairs."""
    out = []
    above = 0  # addable minus removable i-nodes seen so far
    for n, addable in _signed_nodes(la, i, s):
        if addable:
            out.append((_add(la, n), above))
            above += 1
        else:
            above -= 1
    return out


def e_on_basis(la: Multipartition, i: int, s: Charge) -> list[tuple[Multipartition, int]]:
    """``e_i s_la`` as ``(label, exponent of q)`` pairs."""
    out = []
    below = 0  # removable minus addable i-nodes seen so far, sweeping upwards
    for n, addable in reversed(_signed_nodes(la, i, s)):
        if addable:
            below -= 1
        else:
            out.append((_remove(la, n), below))
            below += 1
    return out


def _apply(v: FockVector, op, i: int) -> FockVector:
    acc: dict[Multipartition, LaurentPoly] = {}
    for la, c in v.terms.items():
        for mu, k in op(la, i, v.s):
            _accumulate(acc, mu, c.shift(k))
    return _from_terms(v.s, acc)


def apply_f(v: FockVector, i: int) -> FockVector:
    return _apply(v, f_on_basis, i)


def apply_e(v: FockVector, i: int) -> FockVector:
    return _apply(v, e_on_basis, i)


def apply_f_divided(v: FockVector, i: int, m: int) -> FockVector:
    """The divided power ``f_i^m / [m]!``."""
    if m < 1:
        raise ValueError("divided power exponent must be positive")
    for _ in range(m):
        v = apply_f(v, i)
    if m == 1:
        return v
    d = quantum_factorial(m)
    return _from_terms(v.s, {la: c.exact_div(d) for la, c in v.terms.items()})


def h_pairing(la: Multipartition, i: int, s: Charge) -> int:
    """Addable minus removable i-nodes of ``la``."""
    return sum(1 if addable else -1 for _, addable in _signed_nodes(la, i, s))
