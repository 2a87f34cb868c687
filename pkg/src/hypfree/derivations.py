"""Graded pieces of the logarithmic derivation module and minimal generators.

A derivation theta = sum f_i d/dx_i with homogeneous f_i of common degree d is
tangent to a hyperplane with form alpha when theta(alpha) vanishes on it, i.e.
alpha divides theta(alpha). The degree-d tangent space is cut out by one block
of linear constraints per hyperplane: substitute a parametrization of the
hyperplane into theta(alpha) and require every coefficient to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arrangement import Arrangement, Hyperplane
from .linalg import ExactMatrix, RowReducer, kernel_basis
from .polys import HomPoly, _linear_power, dim_homogeneous, monomial_basis, monomial_index
from .scalars import Scalar

ZERO = Scalar.zero()
ONE = Scalar.one()


class Derivation:
    """Vector of dim homogeneous polynomials of one common degree."""

    __slots__ = ("components", "degree")

    def __init__(self, components):
        comps = tuple(components)
        degs = {c.degree for c in comps}
        if len(degs) != 1:
            raise ValueError("derivation components must share one degree")
        self.components = comps
        self.degree = comps[0].degree

    @property
    def dim(self):
        return len(self.components)

    def apply_to_form(self, h: Hyperplane) -> HomPoly:
        """theta(alpha) for a linear form alpha."""
        out = HomPoly.zero(self.dim, self.degree)
        for a, f in zip(h.coeffs, self.components):
            if a:
                out = out + f.scale(a)
        return out

    def is_tangent_to(self, h: Hyperplane) -> bool:
        val = self.apply_to_form(h)
        if val.is_zero():
            return True
        return val.eliminate(h.pivot(), [-c for i, c in enumerate(h.coeffs)
                                         if i != h.pivot()]).is_zero()

    def in_module(self, arr: Arrangement) -> bool:
        return all(self.is_tangent_to(h) for h in arr)

    def scale(self, k: Scalar) -> "Derivation":
        return Derivation([c.scale(k) for c in self.components])

    def mul_monomial(self, exps) -> "Derivation":
        return Derivation([c.mul_monomial(exps) for c in self.components])

    def __add__(self, other):
        return Derivation([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return Derivation([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return Derivation([-c for c in self.components])

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def divide_by_form(self, h: Hyperplane):
        """Componentwise exact division by a linear form, or None."""
        from .polys import exact_divide
        alpha = h.form()
        out = []
        for c in self.components:
            q = exact_divide(c, alpha)
            if q is None:
                return None
            out.append(q)
        return Derivation(out)

    def to_vector(self, degree=None):
        d = self.degree if degree is None else degree
        monos = monomial_index(self.dim, d)
        width = len(monos)
        vec = [ZERO] * (self.dim * width)
        for i, comp in enumerate(self.components):
            base = i * width
            for e, c in comp.coeffs.items():
                vec[base + monos[e]] = c
        return vec

    @staticmethod
    def from_vector(dim: int, degree: int, vec) -> "Derivation":
        monos = monomial_basis(dim, degree)
        width = len(monos)
        comps = []
        for i in range(dim):
            data = {}
            for j, e in enumerate(monos):
                c = vec[i * width + j]
                if c:
                    data[e] = c
            comps.append(HomPoly(dim, degree, data))
        return Derivation(comps)

    def __repr__(self):
        return "Derivation[" + "; ".join(str(c) for c in self.components) + "]"


def euler_derivation(dim: int) -> Derivation:
    return Derivation([HomPoly.variable(dim, i) for i in range(dim)])


def coefficient_width(dim: int, degree: int) -> int:
    return dim * dim_homogeneous(dim, degree)


def _constraint_rows(arr: Arrangement, degree: int):
    """Linear constraints on coefficient vectors cutting out D(arr)_degree."""
    n = arr.dim
    monos = monomial_basis(n, degree)
    midx = monomial_index(n, degree)
    width = len(monos)
    reduced_idx = monomial_index(n - 1, degree) if n > 1 else {(): 0}
    rows = []
    for h in arr:
        p = h.pivot()
        repl = tuple(-c for i, c in enumerate(h.coeffs) if i != p)
        # substitution of each degree-d monomial into the hyperplane chart
        sub = {}
        for m in monos:
            base = tuple(m[i] for i in range(n) if i != p)
            expanded = {}
            for mono, k in _linear_power(repl, m[p]).items():
                ee = tuple(a + b for a, b in zip(base, mono))
                s = expanded.get(ee)
                expanded[ee] = k if s is None else s + k
            sub[m] = expanded
        block = {}
        for i, a in enumerate(h.coeffs):
            if not a:
                continue
            col_base = i * width
            for m in monos:
                col = col_base + midx[m]
                for ee, k in sub[m].items():
                    v = a * k
                    if not v:
                        continue
                    key = reduced_idx[ee]
                    row = block.setdefault(key, {})
                    s = row.get(col)
                    row[col] = v if s is None else s + v
        total_cols = n * width
        for key in sorted(block):
            row = [ZERO] * total_cols
            for col, v in block[key].items():
                if v:
                    row[col] = v
            if any(row):
                rows.append(row)
    return rows, n * width


@lru_cache(maxsize=None)
def derivation_space(arr: Arrangement, degree: int):
    """Deterministic basis of the degree-d piece of the derivation module."""
    if degree < 0:
        return ()
    rows, width = _constraint_rows(arr, degree)
    if not rows:
        dim_full = width
        basis = []
        for j in range(dim_full):
            v = [ZERO] * dim_full
            v[j] = ONE
            basis.append(v)
    else:
        _, basis = kernel_basis(ExactMatrix(rows, ncols=width))
    return tuple(Derivation.from_vector(arr.dim, degree, v) for v in basis)


def derivation_dim(arr: Arrangement, degree: int) -> int:
    return len(derivation_space(arr, degree))


@dataclass
class GeneratorSet:
    """Minimal homogeneous generators found degree by degree.

    complete_up_to is the scan bound; hilbert maps each scanned degree to
    dim D(arr)_d. The set is minimal by construction (graded Nakayama: at each
    degree only a complement of the span of lower-degree multiples is added).
    """

    arrangement: Arrangement
    generators: list  # [(degree, Derivation)]
    complete_up_to: int
    hilbert: dict = field(default_factory=dict)

    @property
    def degrees(self):
        return tuple(d for d, _ in self.generators)

    def count(self) -> int:
        return len(self.generators)

    def span_rank(self, degree: int) -> int:
        """dim of the degree-d piece of the submodule the generators span."""
        reducer = _span_reducer(self.arrangement.dim, self.generators, degree)
        return reducer.rank


def _span_reducer(dim: int, generators, degree: int) -> RowReducer:
    width = coefficient_width(dim, degree)
    reducer = RowReducer(width)
    for gdeg, g in generators:
        if gdeg > degree:
            continue
        for m in monomial_basis(dim, degree - gdeg):
            reducer.add(g.mul_monomial(m).to_vector())
    return reducer


def minimal_generators(arr: Arrangement, d_max: int, stop_after=None) -> GeneratorSet:
    """Scan degrees 0..d_max extracting new minimal generators.

    stop_after: optional callable (degree, generators) -> bool to cut the scan
    short once enough structure is known; complete_up_to reflects the actual
    last scanned degree.
    """
    gens = []
    hilbert = {}
    last = -1
    for d in range(d_max + 1):
        space = derivation_space(arr, d)
        hilbert[d] = len(space)
        reducer = _span_reducer(arr.dim, gens, d)
        for theta in space:
            vec = theta.to_vector()
            red = reducer.reduce(vec)
            lead = next((i for i, c in enumerate(red) if c), None)
            if lead is None:
                continue
            inv = red[lead].inverse()
            norm = [c * inv if c else c for c in red]
            gens.append((d, Derivation.from_vector(arr.dim, d, norm)))
            reducer.add(norm)
        last = d
        if stop_after is not None and stop_after(d, gens):
            break
    return GeneratorSet(arrangement=arr, generators=gens,
                        complete_up_to=last, hilbert=hilbert)


def free_hilbert_dim(dim: int, exponents, degree: int) -> int:
    """dim of degree-d piece of a free module with the given generator degrees."""
    return sum(dim_homogeneous(dim, degree - e) for e in exponents)


def vanishing_subspace_dim(arr: Arrangement, index: int, degree: int) -> int:
    """dim of {theta in D(arr)_d : theta(alpha_H) == 0} for H = arr[index].

    Together with the Euler direction this realizes the canonical splitting of
    the module over an essential arrangement.
    """
    h = arr[index]
    space = derivation_space(arr, degree)
    if not space:
        return 0
    monos = monomial_index(arr.dim, degree)
    rows = [[ZERO] * len(space) for _ in range(len(monos))]
    for j, theta in enumerate(space):
        val = theta.apply_to_form(h)
        for e, c in val.coeffs.items():
            rows[monos[e]][j] = c
    rows = [r for r in rows if any(r)]
    if not rows:
        return len(space)
    _, basis = kernel_basis(ExactMatrix(rows, ncols=len(space)))
    return len(basis)
