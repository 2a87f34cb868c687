"""Exact scalars: rationals and real quadratic extensions Q(sqrt(d)).

A Scalar is a + b*sqrt(d) with a, b exact rationals (gmpy2.mpq) and d a
square-free positive integer; d == 0 marks a plain rational (then b == 0).
All arithmetic is exact and closed in the field; equality is exact.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

MPQ0 = mpq(0)
MPQ1 = mpq(1)


class FieldError(ValueError):
    """Raised when scalars from incompatible quadratic fields are mixed."""


def _check_squarefree(d: int) -> None:
    if d < 2:
        raise FieldError(f"adjoined root discriminant must be >= 2, got {d}")
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            raise FieldError(f"discriminant {d} is not square-free")
        k += 1


class Scalar:
    """Immutable exact field element a + b*sqrt(d)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=MPQ0, d: int = 0):
        a = a if isinstance(a, type(MPQ0)) else mpq(a)
        b = b if isinstance(b, type(MPQ0)) else mpq(b)
        if b:
            if d == 0:
                raise FieldError("nonzero root part needs a discriminant")
        else:
            d = 0  # rational values carry no field marker
        self.a = a
        self.b = b
        self.d = d

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def rational(x) -> "Scalar":
        return Scalar(mpq(x))

    @staticmethod
    def root(d: int) -> "Scalar":
        """sqrt(d) itself."""
        _check_squarefree(d)
        return Scalar(MPQ0, MPQ1, d)

    @staticmethod
    def zero() -> "Scalar":
        return _ZERO

    @staticmethod
    def one() -> "Scalar":
        return _ONE

    # -- field bookkeeping ---------------------------------------------------

    @property
    def rational_part(self):
        return self.a

    @property
    def root_part(self):
        return self.b

    @property
    def field_tag(self) -> str:
        return "rational" if self.d == 0 else f"quadratic({self.d})"

    def _join(self, other: "Scalar") -> int:
        if self.d and other.d and self.d != other.d:
            raise FieldError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
        return self.d or other.d

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        d = self._join(other)
        return Scalar(self.a + other.a, self.b + other.b, d)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        d = self._join(other)
        return Scalar(self.a - other.a, self.b - other.b, d)

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        d = self._join(other)
        if self.b and other.b:
            return Scalar(self.a * other.a + self.b * other.b * d,
                          self.a * other.b + self.b * other.a, d)
        if self.b:
            return Scalar(self.a * other.a, self.b * other.a, d)
        return Scalar(self.a * other.a, self.a * other.b, d)

    def inverse(self) -> "Scalar":
        if not (self.a or self.b):
            raise ZeroDivisionError("scalar inverse of zero")
        if not self.b:
            return Scalar(MPQ1 / self.a)
        # (a + b r)^-1 = (a - b r) / (a^2 - b^2 d); the norm is nonzero because
        # d is not a rational square.
        n = self.a * self.a - self.b * self.b * self.d
        return Scalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def conjugate(self) -> "Scalar":
        """Galois conjugate a - b*sqrt(d)."""
        return Scalar(self.a, -self.b, self.d)

    # -- predicates, ordering, hashing ----------------------------------------

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def sort_key(self):
        """Deterministic total order key (lexicographic, not real order)."""
        return (self.a, self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * (self.d ** 0.5)

    # -- text ------------------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({self})" if self.d == 0 else f"Scalar({self}; d={self.d})"


def _mk(a, b, d) -> Scalar:
    """Internal fast constructor: a, b must already be mpq in lowest terms."""
    s = Scalar.__new__(Scalar)
    s.a = a
    if b:
        s.b = b
        s.d = d
    else:
        s.b = MPQ0
        s.d = 0
    return s


_ZERO = Scalar(MPQ0)
_ONE = Scalar(MPQ1)

_RAT = r"[+-]?\d+(?:/\d+)?"
_RE_RAT = re.compile(rf"({_RAT})\Z")
_RE_FULL = re.compile(rf"({_RAT})([+-])(\d+(?:/\d+)?)\*r\Z")
_RE_ROOT = re.compile(rf"({_RAT})\*r\Z")


def parse_scalar(text: str, d: int = 0) -> Scalar:
    """Parse `a/b`, `a/b+c/d*r` or `c/d*r`; r is sqrt(d) of the ambient field."""
    t = text.strip().replace(" ", "")
    m = _RE_RAT.match(t)
    if m:
        return Scalar(mpq(m.group(1)))
    m = _RE_FULL.match(t)
    if m:
        if d == 0:
            raise FieldError(f"root term {text!r} in a rational-field context")
        b = mpq(m.group(3))
        return Scalar(mpq(m.group(1)), -b if m.group(2) == "-" else b, d)
    m = _RE_ROOT.match(t)
    if m:
        if d == 0:
            raise FieldError(f"root term {text!r} in a rational-field context")
        return Scalar(MPQ0, mpq(m.group(1)), d)
    raise ValueError(f"cannot parse scalar token {text!r}")


def format_scalar(s: Scalar) -> str:
    if not s.b:
        return str(s.a)
    root = f"{abs(s.b)}*r"
    if not s.a:
        return root if s.b > 0 else f"-{root}"
    return f"{s.a}+{root}" if s.b > 0 else f"{s.a}-{root}"


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(mpq(x))
