"""Exact rational numbers and the extended real line.

``Rational`` is gmpy2's ``mpq``: canonical (reduced, positive denominator),
immutable and exact.  Every coefficient, start value and solver output in the
package is a ``Rational``; floats only appear in the explicitly approximate
backend in :mod:`comporder.floatback`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational as _AbstractRational
from typing import Union

import gmpy2

from .errors import ParseError, ZeroDenominator

Rational = type(gmpy2.mpq(0))

RationalLike = Union[int, str, Fraction, "Rational"]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")

ZERO = gmpy2.mpq(0)
ONE = gmpy2.mpq(1)


def normalize(n: int, d: int) -> Rational:
    """Canonical rational ``n/d``; the sign is carried on the numerator."""
    if d == 0:
        raise ZeroDenominator(f"zero denominator in {n}/{d}")
    return gmpy2.mpq(int(n), int(d))


def to_rational(x) -> Rational:
    """Convert ints, Fractions, mpq values and ``"p/q"`` strings exactly.

    Floats are rejected: an exact solver must never silently accept a rounded
    coefficient.
    """
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return gmpy2.mpq(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _AbstractRational):
        return normalize(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass a Fraction or 'p/q' string")
    raise TypeError(f"cannot convert {type(x).__name__} to Rational")


def parse_rational(text: str) -> Rational:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    return normalize(int(num), int(den) if den is not None else 1)


def format_rational(q) -> str:
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@total_ordering
class ExtReal:
    """A rational, or one of the two infinities.

    Infinities only ever take part in comparisons.  Ordering against plain
    rationals is supported so that fixpoints can be compared with evaluation
    results directly.
    """

    __slots__ = ("_kind", "_value")

    def __init__(self, kind: int, value: Rational | None = None):
        if kind not in (-1, 0, 1):
            raise ValueError("kind must be -1, 0 or +1")
        if kind == 0:
            if value is None:
                raise ValueError("finite ExtReal needs a value")
            value = to_rational(value)
        else:
            value = None
        self._kind = kind
        self._value = value

    @classmethod
    def finite(cls, value) -> ExtReal:
        return cls(0, value)

    @property
    def is_finite(self) -> bool:
        return self._kind == 0

    @property
    def value(self) -> Rational:
        if self._kind != 0:
            raise ValueError(f"{self} has no finite value")
        return self._value

    def _key(self):
        return (self._kind, self._value if self._kind == 0 else ZERO)

    @staticmethod
    def _coerce(other) -> ExtReal | None:
        if isinstance(other, ExtReal):
            return other
        try:
            return ExtReal.finite(to_rational(other))
        except TypeError:
            return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._key() == o._key()

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._key() < o._key()

    def __hash__(self):
        return hash(self._key())

    def __neg__(self) -> ExtReal:
        if self._kind == 0:
            return ExtReal.finite(-self._value)
        return ExtReal(-self._kind)

    def _no_arithmetic(self, *_):
        raise TypeError("ExtReal does not support arithmetic; compare only")

    __add__ = __radd__ = __sub__ = __rsub__ = _no_arithmetic
    __mul__ = __rmul__ = __truediv__ = __rtruediv__ = _no_arithmetic

    def __str__(self):
        if self._kind == 1:
            return "inf"
        if self._kind == -1:
            return "-inf"
        return format_rational(self._value)

    def __repr__(self):
        return f"ExtReal({self})"

    @classmethod
    def parse(cls, text: str) -> ExtReal:
        t = text.strip()
        if t in ("inf", "+inf"):
            return POS_INF
        if t == "-inf":
            return NEG_INF
        return cls.finite(parse_rational(t))


POS_INF = ExtReal(1)
NEG_INF = ExtReal(-1)
