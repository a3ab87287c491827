"""Exact arithmetic in Z[q, q^-1].

Polynomials are stored sparsely as ``{exponent: coefficient}`` with no zero
coefficients, so equality and hashing are canonical.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class NonExactDivision(ArithmeticError):
    pass


class LaurentPoly:
    """An element of Z[q, q^-1]."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for k, v in items:
            v = c.get(k, 0) + v
            if v:
                c[k] = v
            else:
                c.pop(k, None)
        self._c = dict(sorted(c.items()))
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPoly:
        # caller guarantees no zero values
        p = object.__new__(cls)
        p._c = dict(sorted(c.items()))
        p._hash = None
        return p

    @classmethod
    def const(cls, n: int) -> LaurentPoly:
        return cls._raw({0: n} if n else {})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._c))

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._c))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def __add__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            v += c.get(k, 0)
            if v:
                c[k] = v
            else:
                del c[k]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._c) == 1:
                (k, v), = self._c.items()
                if v in (1, -1):
                    return LaurentPoly.monomial(k * n, v ** (-n))
            raise ValueError("negative powers only for units")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def bar(self) -> LaurentPoly:
        """The involution q -> q^-1."""
        return LaurentPoly._raw({-k: v for k, v in self._c.items()})

    def evaluate(self, x):
        return sum(v * x**k for k, v in self._c.items())

    # -- division ---------------------------------------------------------

    def exact_div(self, d: LaurentPoly | int) -> LaurentPoly:
        """Return ``c`` with ``c * d == self``; raise NonExactDivision otherwise."""
        d = self._coerce(d)
        if not d:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._c:
            return ZERO
        dlo, dhi = d.min_degree(), d.max_degree()
        lead = d._c[dhi]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem:
            hi = max(rem)
            if hi - dhi < self.min_degree() - dlo:
                raise NonExactDivision(f"{self} is not divisible by {d}")
            qv, r = divmod(rem[hi], lead)
            if r:
                raise NonExactDivision(f"{self} is not divisible by {d}")
            k = hi - dhi
            quot[k] = qv
            for e, v in d._c.items():
                nv = rem.get(e + k, 0) - qv * v
                if nv:
                    rem[e + k] = nv
                else:
                    rem.pop(e + k, None)
        return LaurentPoly._raw(quot)

    # -- predicates used by the canonical-basis machinery -----------------

    def in_qZq(self) -> bool:
        """True iff every exponent is at least 1 (the zero polynomial qualifies)."""
        return not self._c or self.min_degree() >= 1

    def is_bar_symmetric(self) -> bool:
        return self == self.bar()

    def alpha_extract(self) -> LaurentPoly:
        """The bar-symmetric ``a`` with ``self - a`` supported on exponents >= 1."""
        c: dict[int, int] = {}
        for k, v in self._c.items():
            if k > 0:
                break
            c[k] = v
            if k < 0:
                c[-k] = v
        return LaurentPoly._raw(c)

    # -- display / serialization -----------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(k): v for k, v in self._c.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> LaurentPoly:
        return cls((int(k), int(v)) for k, v in obj.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, v in self._c.items():
            if k == 0:
                mono = str(abs(v))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                if abs(v) != 1:
                    mono = f"{abs(v)}{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
q = LaurentPoly._raw({1: 1})


def quantum_int(m: int) -> LaurentPoly:
    """[m] = (q^m - q^-m)/(q - q^-1); negative m gives -[|m|]."""
    if m < 0:
        return -quantum_int(-m)
    return LaurentPoly._raw({m - 1 - 2 * j: 1 for j in range(m)})


def quantum_factorial(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = ONE
    for k in range(2, m + 1):
        out = out * quantum_int(k)
    return out


def exact_div(p: LaurentPoly, d: LaurentPoly | int) -> LaurentPoly:
    return p.exact_div(d)


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def in_qZq(p: LaurentPoly) -> bool:
    return p.in_qZq()


def alpha_extract(p: LaurentPoly) -> LaurentPoly:
    return p.alpha_extract()
