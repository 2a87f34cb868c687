"""Concrete arrangement families: rank-2 Weyl root systems, their Catalan and
Shi deformations (coned, in K^3), and the pentagon pair over Q(sqrt 5).

The pentagon model is affine-regular with exact golden-ratio coordinates:
vertex k sits at (cos(2 pi k/5), sin(2 pi k/5)/sin(2 pi/5)), which lies in
Q(sqrt 5)^2, so every incidence and parallelism of the metrically regular
pentagon survives and every downstream verdict is a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .arrangement import AffineArrangement, Arrangement, Hyperplane, cone
from .scalars import Scalar

LONG = "long"
SHORT = "short"


@dataclass(frozen=True)
class RootSystem:
    type_tag: str
    positive_roots: tuple  # ((coeff pair, LONG|SHORT), ...)

    @property
    def long_roots(self):
        return tuple(r for r, tag in self.positive_roots if tag == LONG)

    @property
    def short_roots(self):
        return tuple(r for r, tag in self.positive_roots if tag == SHORT)


_WEYL = {
    "A2": ((( 1, 0), LONG), ((0, 1), LONG), ((1, -1), LONG)),
    "B2": (((1, -1), LONG), ((1, 1), LONG), ((1, 0), SHORT), ((0, 1), SHORT)),
    # planar image of the standard orthogonal G2 model (integer 3d roots
    # pushed through y = (v1-v2, v2-v3), signs fixed to a positive system)
    "G2": (((2, 1), LONG), ((1, -1), LONG), ((1, 2), LONG),
           ((1, 0), SHORT), ((0, 1), SHORT), ((1, 1), SHORT)),
}


def weyl(type_tag: str) -> RootSystem:
    if type_tag not in _WEYL:
        raise ValueError(f"unknown rank-2 Weyl type {type_tag!r} (want A2, B2 or G2)")
    return RootSystem(type_tag, _WEYL[type_tag])


def _deformation(rs: RootSystem, long_interval, short_interval) -> Arrangement:
    """Coned deformation: alpha = j*z for j in the per-length interval, plus z = 0."""
    forms = []
    for (a1, a2), tag in rs.positive_roots:
        lo, hi = long_interval if tag == LONG else short_interval
        for j in range(lo, hi + 1):
            forms.append(Hyperplane([a1, a2, -j]))
    forms.append(Hyperplane([0, 0, 1]))
    return Arrangement(3, forms)


def _cat_interval(k: int):
    if k < 0:
        raise ValueError("Catalan parameter must be >= 0")
    return (-k, k)


def _shi_interval(k: int):
    if k < 1:
        raise ValueError("Shi parameter must be >= 1")
    return (-k + 1, k)


def _split(k):
    if isinstance(k, tuple):
        return k
    return (k, k)


def catalan(rs: RootSystem, k) -> Arrangement:
    """Cat^k (single parameter) or Cat^{k1,k2} (long/short split)."""
    k1, k2 = _split(k)
    return _deformation(rs, _cat_interval(k1), _cat_interval(k2))


def shi(rs: RootSystem, k) -> Arrangement:
    """Shi^k or Shi^{k1,k2}; Shi parameters start at 1."""
    k1, k2 = _split(k)
    return _deformation(rs, _shi_interval(k1), _shi_interval(k2))


def cat_shi(rs: RootSystem, k1: int, k2: int) -> Arrangement:
    """Catalan interval on long roots, Shi interval on short roots."""
    return _deformation(rs, _cat_interval(k1), _shi_interval(k2))


def shi_cat(rs: RootSystem, k1: int, k2: int) -> Arrangement:
    """Shi interval on long roots, Catalan interval on short roots."""
    return _deformation(rs, _shi_interval(k1), _cat_interval(k2))


# -- pentagon -------------------------------------------------------------------


def _q5(a, b) -> Scalar:
    """a + b*sqrt(5) with rational a, b."""
    return Scalar(mpq(a), mpq(b), 5) if b else Scalar(mpq(a))


def pentagon_vertices():
    """Affine-regular pentagon vertices over Q(sqrt 5), counterclockwise."""
    c1 = _q5(mpq(-1, 4), mpq(1, 4))    # cos(2 pi/5)
    c2 = _q5(mpq(-1, 4), mpq(-1, 4))   # cos(4 pi/5)
    s2 = _q5(mpq(-1, 2), mpq(1, 2))    # sin(4 pi/5)/sin(2 pi/5)
    one = Scalar.one()
    return (
        (one, Scalar.zero()),
        (c1, one),
        (c2, s2),
        (c2, -s2),
        (c1, -one),
    )


def _line_through(p, q):
    """(a, b, e) with a*x + b*y + e == 0 through both points."""
    (x1, y1), (x2, y2) = p, q
    a = y2 - y1
    b = x1 - x2
    e = -(a * x1 + b * y1)
    return ((a, b), e)


def pentagon():
    """The pentagon pair (A, B) over Q(sqrt 5): cones of 10 and 6 lines.

    A cones every edge and diagonal (11 planes); B cones the four lines
    through the first vertex plus one neighbouring edge and the diagonal
    parallel to the first edge (7 planes). B is a subset of A.
    """
    v = pentagon_vertices()
    pairs_all = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    lines_a = [_line_through(v[i], v[j]) for i, j in pairs_all]
    sub_pairs = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 4)]
    lines_b = [_line_through(v[i], v[j]) for i, j in sub_pairs]
    a = cone(AffineArrangement(2, lines_a, disc=5))
    b = cone(AffineArrangement(2, lines_b, disc=5))
    return a, b
