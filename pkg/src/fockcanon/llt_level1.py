"""The level-one LLT algorithm for e-regular partitions."""

from __future__ import annotations

import threading

from .canonical import CanonicalBasisError, strip
from .combinat import Charge, Partition, dominates, is_regular, ladder_decomposition
from .fockspace import FockVector, apply_f_divided
from .laurentq import ONE

_cache: dict[tuple[int, int, Partition], FockVector] = {}
_lock = threading.RLock()


def auxiliary_vector(mu: Partition, e: int, s1: int) -> FockVector:
    """Product of ladder divided powers applied to the empty partition."""
    mu = tuple(mu)
    if not is_regular(mu, e):
        raise ValueError(f"{mu} is not {e}-regular")
    A = FockVector.basis(((),), Charge((s1,), e))
    for lad in ladder_decomposition(mu, e, s1):
        A = apply_f_divided(A, lad.residue, lad.size)
    return A


def llt_canonical(mu: Partition, e: int, s1: int) -> FockVector:
    mu = tuple(mu)
    key = (e, s1 % e, mu)
    with _lock:
        v = _cache.get(key)
        if v is None:
            v = _cache[key] = _compute(mu, e, s1)
        return v


def _compute(mu: Partition, e: int, s1: int) -> FockVector:
    A = auxiliary_vector(mu, e, s1)
    label = (mu,)
    if A[label] != ONE:
        raise CanonicalBasisError(f"A({mu}) has leading coefficient {A[label]}")
    if any(not dominates(label, la) for la in A):
        raise CanonicalBasisError(f"A({mu}) has a term not dominated by {mu}")

    def lower(nu):
        if not is_regular(nu[0], e):
            raise CanonicalBasisError(f"stripping {mu} selected {e}-singular {nu[0]}")
        return llt_canonical(nu[0], e, s1)

    return strip(A, label, lower)
