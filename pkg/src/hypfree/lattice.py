"""Intersection lattice, Moebius function and characteristic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangement import Arrangement
from .linalg import ExactMatrix, rref
from .scalars import Scalar


@dataclass(frozen=True)
class Flat:
    """A lattice element: intersection of some hyperplanes.

    equations: canonical RREF rows cutting the flat out; codim == len(equations).
    containing: indices of every hyperplane containing the flat.
    moebius: Moebius value of the interval from the ambient space.
    """

    equations: tuple
    containing: frozenset
    codim: int
    moebius: int

    def dim(self, ambient: int) -> int:
        return ambient - self.codim


def _canonical_key(rows):
    return tuple(tuple(c.sort_key() for c in row) for row in rows)


def _row_space(vectors, ncols):
    m = ExactMatrix([list(v) for v in vectors], ncols=ncols)
    rows, pivots = rref(m)
    return [tuple(r) for r in rows], len(pivots)


def _reduces_to_zero(eq_rows, vec, ncols):
    v = list(vec)
    for row in eq_rows:
        pc = next(i for i, c in enumerate(row) if c)
        if v[pc]:
            f = v[pc]
            v = [v[j] - f * row[j] if row[j] else v[j] for j in range(ncols)]
    return not any(v)


@lru_cache(maxsize=4096)
def intersection_lattice(arr: Arrangement):
    """All flats with Moebius values, ordered by (codim, canonical key)."""
    n = arr.dim
    forms = [list(h.coeffs) for h in arr]

    flats = {}  # key -> (equations, containing set, codim)
    top_key = ()
    flats[top_key] = ((), frozenset(), 0)
    frontier = [top_key]
    while frontier:
        next_frontier = []
        for key in frontier:
            eqs, containing, codim = flats[key]
            for i, f in enumerate(forms):
                if i in containing:
                    continue
                if _reduces_to_zero(eqs, f, n):
                    continue  # hyperplane already contains the flat
                rows, rank = _row_space(list(eqs) + [f], n)
                new_key = _canonical_key(rows)
                if new_key in flats:
                    continue
                cont = frozenset(j for j in range(len(forms))
                                 if _reduces_to_zero(rows, forms[j], n))
                flats[new_key] = (tuple(rows), cont, rank)
                next_frontier.append(new_key)
        frontier = next_frontier

    ordered = sorted(flats.items(), key=lambda kv: (kv[1][2], kv[0]))
    moebius = {}
    out = []
    for key, (eqs, cont, codim) in ordered:
        if codim == 0:
            mu = 1
        else:
            # strict predecessors are exactly the flats whose hyperplane set is
            # strictly contained in ours (they have strictly smaller codim)
            mu = -sum(moebius[k2] for k2, (e2, c2, cd2) in ordered
                      if cd2 < codim and c2 <= cont)
        moebius[key] = mu
        out.append(Flat(equations=eqs, containing=cont, codim=codim, moebius=mu))
    return tuple(out)


def char_poly(arr: Arrangement) -> tuple:
    """Characteristic polynomial coefficients, highest degree first.

    chi(t) = sum over flats of moebius * t^dim(flat); length dim+1.
    """
    coeffs = [0] * (arr.dim + 1)
    for flat in intersection_lattice(arr):
        coeffs[arr.dim - flat.dim(arr.dim)] += flat.moebius
    return tuple(coeffs)


def char_poly_eval(coeffs: tuple, t: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def integer_roots(coeffs: tuple):
    """Non-negative integer roots with multiplicity when chi factors completely.

    Returns the sorted multiset, or None when some factor has no such root.
    """
    cs = list(coeffs)
    roots = []
    for _ in range(len(cs) - 1):
        const = cs[-1]
        if const == 0:
            r = 0
        else:
            r = None
            for cand in sorted({d for d in range(1, abs(const) + 1) if const % d == 0}):
                if char_poly_eval(tuple(cs), cand) == 0:
                    r = cand
                    break
            if r is None:
                return None
        roots.append(r)
        # synthetic division by (t - r)
        out = [cs[0]]
        for c in cs[1:-1]:
            out.append(c + out[-1] * r)
        if cs[-1] + out[-1] * r != 0:
            return None
        cs = out
    return tuple(sorted(roots))


def char_poly_str(coeffs: tuple) -> str:
    deg = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        p = deg - i
        mono = "1" if p == 0 else ("t" if p == 1 else f"t^{p}")
        if p == 0:
            parts.append(f"{c:+d}")
        elif abs(c) == 1:
            parts.append(("+" if c > 0 else "-") + mono)
        else:
            parts.append(f"{c:+d}*{mono}")
    s = " ".join(parts) if parts else "0"
    return s[1:] if s.startswith("+") else s


def rank2_multiplicities(arr: Arrangement) -> dict:
    """Multiset {multiplicity: count} of codimension-2 flats."""
    out = {}
    for flat in intersection_lattice(arr):
        if flat.codim == 2:
            m = len(flat.containing)
            out[m] = out.get(m, 0) + 1
    return out


# -- finite-field point-count heuristic (spot-check only, never a certificate) --


class BadPrime(ValueError):
    """The arrangement degenerates modulo this prime."""


def _forms_mod_p(arr: Arrangement, p: int):
    if arr.disc != 0:
        raise BadPrime("point counts need a rational arrangement")
    rows = []
    for h in arr:
        nums, dens = [], []
        for c in h.coeffs:
            nums.append(int(c.a.numerator))
            dens.append(int(c.a.denominator))
        lcm = 1
        for d in dens:
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        row = [(n * (lcm // d)) % p for n, d in zip(nums, dens)]
        if not any(row):
            raise BadPrime(f"form {h} vanishes mod {p}")
        rows.append(tuple(row))
    # pairwise proportionality check via leading-normalization
    seen = set()
    for row in rows:
        lead = next(x for x in row if x)
        inv = pow(lead, -1, p)
        norm = tuple(x * inv % p for x in row)
        if norm in seen:
            raise BadPrime(f"two forms collapse mod {p}")
        seen.add(norm)
    return rows


def fp_point_count(arr: Arrangement, p: int) -> int:
    """Number of points of F_p^dim avoiding every hyperplane (mod-p count)."""
    rows = _forms_mod_p(arr, p)
    n = arr.dim
    count = 0
    point = [0] * n
    total = p ** n
    for idx in range(total):
        v = idx
        for i in range(n):
            point[i] = v % p
            v //= p
        ok = True
        for row in rows:
            s = 0
            for a, x in zip(row, point):
                s += a * x
            if s % p == 0:
                ok = False
                break
        if ok:
            count += 1
    return count


def lattice_preserved_mod_p(arr: Arrangement, p: int) -> bool:
    """True when the codim-2 incidence pattern survives reduction mod p.

    Only supports dim <= 3, where this pins the characteristic polynomial.
    """
    if arr.dim > 3:
        raise ValueError("mod-p lattice comparison implemented for dim <= 3 only")
    try:
        rows = _forms_mod_p(arr, p)
    except BadPrime:
        return False
    if arr.dim <= 1:
        return True
    # classify pairs by the mod-p codim-2 flat (canonical RREF of the 2xN system)
    def flat_key(i, j):
        m = [list(rows[i]), list(rows[j])]
        # tiny mod-p rref
        r = 0
        n = arr.dim
        for c in range(n):
            pr = next((k for k in range(r, 2) if m[k][c] % p), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = pow(m[r][c], -1, p)
            m[r] = [x * inv % p for x in m[r]]
            for k in range(2):
                if k != r and m[k][c] % p:
                    f = m[k][c]
                    m[k] = [(m[k][t] - f * m[r][t]) % p for t in range(n)]
            r += 1
        return tuple(tuple(row) for row in m[:r])

    counts = {}
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            counts.setdefault(flat_key(i, j), set()).update((i, j))
    mod_mult = {}
    for members in counts.values():
        m = len(members)
        mod_mult[m] = mod_mult.get(m, 0) + 1
    return mod_mult == rank2_multiplicities(arr)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
