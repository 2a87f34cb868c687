"""Homogeneous multivariate polynomials over exact scalars.

Monomials of a fixed degree are kept in graded-lexicographic order (within one
degree: exponent tuples descending), fixed once so that every downstream
certificate is byte-reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .scalars import Scalar, as_scalar


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> tuple:
    """All exponent tuples of the given weight, graded-lex order."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        return ()

    def gen(rest, total):
        if rest == 1:
            yield (total,)
            return
        for head in range(total, -1, -1):
            for tail in gen(rest - 1, total - head):
                yield (head,) + tail

    return tuple(gen(nvars, degree))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(nvars, degree))}


def dim_homogeneous(nvars: int, degree: int) -> int:
    """dim of the degree-d piece of a polynomial ring in nvars variables."""
    if degree < 0:
        return 0
    return comb(degree + nvars - 1, nvars - 1)


class HomPoly:
    """Homogeneous polynomial: sparse map exponent tuple -> nonzero Scalar."""

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: dict | None = None):
        self.nvars = nvars
        self.degree = degree
        cleaned = {}
        if coeffs:
            for exps, c in coeffs.items():
                if not c:
                    continue
                if len(exps) != nvars or sum(exps) != degree:
                    raise ValueError(f"monomial {exps} not of degree {degree} in {nvars} vars")
                cleaned[exps] = c
        self.coeffs = cleaned

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(nvars: int, degree: int) -> "HomPoly":
        return HomPoly(nvars, degree, None)

    @staticmethod
    def constant(nvars: int, value) -> "HomPoly":
        v = as_scalar(value)
        return HomPoly(nvars, 0, {(0,) * nvars: v})

    @staticmethod
    def variable(nvars: int, i: int) -> "HomPoly":
        e = [0] * nvars
        e[i] = 1
        return HomPoly(nvars, 1, {tuple(e): Scalar.one()})

    @staticmethod
    def linear(coeffs) -> "HomPoly":
        coeffs = list(coeffs)
        n = len(coeffs)
        data = {}
        for i, c in enumerate(coeffs):
            c = as_scalar(c)
            if c:
                e = [0] * n
                e[i] = 1
                data[tuple(e)] = c
        return HomPoly(n, 1, data)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def is_constant(self) -> bool:
        return self.degree == 0

    def constant_value(self) -> Scalar:
        if self.degree != 0:
            raise ValueError("not a constant")
        return self.coeffs.get((0,) * self.nvars, Scalar.zero())

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.coeffs)
        return e, self.coeffs[e]

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        self._compat(other)
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = data.get(e)
            data[e] = c if s is None else s + c
        return HomPoly(self.nvars, self.degree, data)

    def __sub__(self, other):
        self._compat(other)
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = data.get(e)
            data[e] = -c if s is None else s - c
        return HomPoly(self.nvars, self.degree, data)

    def __neg__(self):
        return HomPoly(self.nvars, self.degree, {e: -c for e, c in self.coeffs.items()})

    def scale(self, k: Scalar) -> "HomPoly":
        if not k:
            return HomPoly.zero(self.nvars, self.degree)
        return HomPoly(self.nvars, self.degree, {e: c * k for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        data = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = data.get(e)
                data[e] = p if s is None else s + p
        return HomPoly(self.nvars, self.degree + other.degree, data)

    def mul_monomial(self, exps: tuple) -> "HomPoly":
        k = sum(exps)
        return HomPoly(self.nvars, self.degree + k,
                       {tuple(a + b for a, b in zip(e, exps)): c
                        for e, c in self.coeffs.items()})

    def _compat(self, other):
        if not isinstance(other, HomPoly):
            raise TypeError("expected HomPoly")
        if self.nvars != other.nvars or self.degree != other.degree:
            raise ValueError("degree/variable mismatch in graded sum")

    # -- substitution and evaluation ---------------------------------------------

    def eliminate(self, var: int, replacement: list) -> "HomPoly":
        """Substitute x_var by a linear form in the other variables, drop x_var.

        `replacement` holds nvars-1 scalars: coefficients of the remaining
        variables in their original order.
        """
        n = self.nvars
        rest = [i for i in range(n) if i != var]
        out = {}
        for e, c in self.coeffs.items():
            base = tuple(e[i] for i in rest)
            for mono, k in _linear_power(tuple(replacement), e[var]).items():
                ee = tuple(a + b for a, b in zip(base, mono))
                v = c * k
                s = out.get(ee)
                out[ee] = v if s is None else s + v
        return HomPoly(n - 1, self.degree, out)

    def embed(self, nvars: int, positions: tuple) -> "HomPoly":
        """Lift into a larger ring: variable i goes to slot positions[i]."""
        out = {}
        for e, c in self.coeffs.items():
            ee = [0] * nvars
            for i, p in enumerate(positions):
                ee[p] = e[i]
            out[tuple(ee)] = c
        return HomPoly(nvars, self.degree, out)

    def evaluate(self, point: list) -> Scalar:
        total = Scalar.zero()
        for e, c in self.coeffs.items():
            v = c
            for x, k in zip(point, e):
                for _ in range(k):
                    v = v * x
            total = total + v
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "*".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}"
                            for i, k in enumerate(e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__


@lru_cache(maxsize=None)
def _linear_power(coeffs: tuple, k: int) -> dict:
    """Expansion of (sum coeffs[i] * y_i)^k as {exponent tuple: Scalar}."""
    n = len(coeffs)
    if k == 0:
        return {(0,) * n: Scalar.one()}
    prev = _linear_power(coeffs, k - 1)
    out = {}
    for e, c in prev.items():
        for i, a in enumerate(coeffs):
            if not a:
                continue
            ee = list(e)
            ee[i] += 1
            ee = tuple(ee)
            v = c * a
            s = out.get(ee)
            out[ee] = v if s is None else s + v
    return out


def exact_divide(p: HomPoly, q: HomPoly):
    """Return r with p == q*r, or None when q does not divide p exactly.

    Long division by the single divisor q in graded-lex order; the result is
    re-multiplied as a final guard.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return HomPoly.zero(p.nvars, p.degree - q.degree) if p.degree >= q.degree \
            else HomPoly.zero(p.nvars, 0)
    if p.degree < q.degree or p.nvars != q.nvars:
        return None
    lt_e, lt_c = q.leading()
    lt_c_inv = lt_c.inverse()
    rem = p
    quo = {}
    while rem.coeffs:
        re, rc = rem.leading()
        diff = tuple(a - b for a, b in zip(re, lt_e))
        if any(x < 0 for x in diff):
            return None  # leading term not divisible: a nonzero remainder exists
        c = rc * lt_c_inv
        quo[diff] = c
        rem = rem - q.mul_monomial(diff).scale(c)
    r = HomPoly(p.nvars, p.degree - q.degree, quo)
    if (q * r).coeffs != p.coeffs:  # paranoia; the division above is exact
        return None
    return r


def det_poly(rows: list) -> HomPoly:
    """Exact determinant of a square matrix of homogeneous polynomials.

    Cofactor expansion for size <= 4, fraction-free Bareiss elimination (exact
    divisions stay in the ring) beyond that.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    nv = rows[0][0].nvars
    if n <= 4:
        return _det_cofactor(rows, nv)
    return _det_bareiss(rows, nv)


def _det_cofactor(rows, nv):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if a.is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = a * _det_cofactor(minor, nv)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        deg = sum(rows[i][i].degree for i in range(n))
        return HomPoly.zero(nv, deg)
    return total


def _det_bareiss(rows, nv):
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = HomPoly.constant(nv, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return HomPoly.zero(nv, sum(rows[i][i].degree for i in range(n)))
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = exact_divide(num, prev)
                assert q is not None, "Bareiss division must be exact"
                m[i][j] = q
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
