"""Dense exact linear algebra over Scalar entries.

Everything here is deterministic: pivots are chosen in fixed column order, so
ranks, kernels and reduced representatives are stable across runs and thread
schedules.
"""

from __future__ import annotations

from .scalars import Scalar

ZERO = Scalar.zero()
ONE = Scalar.one()


class ExactMatrix:
    """Rectangular matrix of Scalars (rows of equal length)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols

    def mul_vector(self, v):
        out = []
        for row in self.rows:
            acc = ZERO
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out


def rref(matrix: ExactMatrix):
    """Reduced row echelon form; returns (rref rows, pivot column list).

    The elimination runs on unwrapped mpq data (one slot per entry over the
    rationals, an (a, b) pair over a quadratic field) and rewraps at the end;
    the hot loop is the whole engine's bottleneck.
    """
    disc = 0
    for row in matrix.rows:
        for c in row:
            if c.d:
                disc = c.d
                break
        if disc:
            break
    if disc == 0:
        return _rref_rational(matrix.rows, matrix.ncols)
    return _rref_quadratic(matrix.rows, matrix.ncols, disc)


def _rref_rational(srows, ncols):
    from .scalars import MPQ1, _mk
    m = [[c.a for c in row] for row in srows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        mr = m[r]
        piv = mr[c]
        if piv != 1:
            inv = MPQ1 / piv
            m[r] = mr = [x * inv if x else x for x in mr]
        for i in range(nrows):
            if i == r:
                continue
            mi = m[i]
            f = mi[c]
            if f:
                m[i] = [x - f * y if y else x for x, y in zip(mi, mr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = [[_mk(x, None, 0) if x else ZERO for x in m[i]] for i in range(r)]
    return out, pivots


def _rref_quadratic(srows, ncols, disc):
    from .scalars import MPQ0, _mk
    m = [[(c.a, c.b) for c in row] for row in srows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            e = m[i][c]
            if e[0] or e[1]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        mr = m[r]
        pa, pb = mr[c]
        if pa != 1 or pb:
            n = pa * pa - pb * pb * disc
            ia, ib = pa / n, -pb / n
            new = []
            for xa, xb in mr:
                if xa or xb:
                    new.append((xa * ia + xb * ib * disc, xa * ib + xb * ia))
                else:
                    new.append((xa, xb))
            m[r] = mr = new
        for i in range(nrows):
            if i == r:
                continue
            mi = m[i]
            fa, fb = mi[c]
            if fa or fb:
                new = []
                if fb:
                    for (xa, xb), (ya, yb) in zip(mi, mr):
                        if ya or yb:
                            new.append((xa - fa * ya - fb * yb * disc,
                                        xb - fa * yb - fb * ya))
                        else:
                            new.append((xa, xb))
                else:
                    # purely rational multiplier, the common case
                    for (xa, xb), (ya, yb) in zip(mi, mr):
                        if ya:
                            new.append((xa - fa * ya, xb - fa * yb if yb else xb))
                        elif yb:
                            new.append((xa, xb - fa * yb))
                        else:
                            new.append((xa, xb))
                m[i] = new
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = [[_mk(xa, xb, disc) if (xa or xb) else ZERO for xa, xb in m[i]]
           for i in range(r)]
    return out, pivots


def kernel_basis(matrix: ExactMatrix):
    """(rank, basis of the right null space), exact and deterministic.

    Basis vectors correspond to free columns in increasing order; each has a 1
    in its free column, so rank + len(basis) == ncols.
    """
    rows, pivots = rref(matrix)
    rank = len(pivots)
    ncols = matrix.ncols
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            coef = rows[r][free]
            if coef:
                v[pc] = -coef
        basis.append(v)
    return rank, basis


class RowReducer:
    """Incremental forward-elimination span tracker.

    Rows are stored pivot-normalized (leading entry 1) keyed by pivot column.
    reduce() gives the canonical remainder of a vector modulo the span under
    insertion order; add() extends the span.
    """

    __slots__ = ("width", "rows")

    def __init__(self, width: int):
        self.width = width
        self.rows = {}  # pivot column -> normalized row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        v = list(vec)
        rows = self.rows
        for c in range(self.width):
            x = v[c]
            if not x:
                continue
            row = rows.get(c)
            if row is None:
                continue
            for j in range(c, self.width):
                rj = row[j]
                if rj:
                    v[j] = v[j] - x * rj
        return v

    def add(self, vec) -> bool:
        """Reduce and absorb; True when the vector enlarged the span."""
        v = self.reduce(vec)
        for c in range(self.width):
            if v[c]:
                inv = v[c].inverse()
                self.rows[c] = [x * inv if x else x for x in v]
                return True
        return False

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))
