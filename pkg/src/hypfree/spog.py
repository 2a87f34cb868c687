"""SPOG (strongly plus-one generated) detection and certification.

A SPOG module has dim+1 minimal generators and exactly one relation; its
graded resolution forces, degree by degree, the Hilbert identity

    dim D_e = sum_i dim S_{e - deg g_i} - dim S_{e - level - 1}.

The checker scans generators, locates the first syzygy degree, cross-checks it
against the first-Chern identity sum(deg g_i) - (level+1) == |A|, and verifies
the Hilbert identity up to a bound recorded in the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangement import Arrangement, delete, is_essential, restrict
from .derivations import (Derivation, coefficient_width, derivation_space,
                          euler_derivation, minimal_generators)
from .freeness import FreenessCertificate, is_free, saito_check
from .linalg import ExactMatrix, RowReducer, kernel_basis
from .polys import HomPoly, det_poly, dim_homogeneous, monomial_basis
from .scalars import Scalar

ZERO = Scalar.zero()


@dataclass(frozen=True)
class SpogCertificate:
    arrangement: Arrangement
    poexp: tuple
    level: int
    generators: tuple    # euler first, level element last
    relation: tuple      # HomPoly coefficients aligned with generators
    hilbert_checked_to: int


@dataclass(frozen=True)
class NotSpog:
    arrangement: Arrangement
    reason: str


@dataclass(frozen=True)
class SpogInconclusive:
    arrangement: Arrangement
    reason: str
    d_max: int


def syzygies(generators, degree: int):
    """Basis of degree-`degree` relations among (degree, Derivation) pairs.

    A relation is a tuple of HomPoly coefficients a_i (degree - deg g_i each)
    with sum a_i g_i == 0.
    """
    gens = list(generators)
    if not gens:
        return []
    dim = gens[0][1].dim
    cols = []
    labels = []
    for i, (gdeg, g) in enumerate(gens):
        k = degree - gdeg
        if k < 0:
            continue
        for m in monomial_basis(dim, k):
            cols.append(g.mul_monomial(m).to_vector())
            labels.append((i, m))
    if not cols:
        return []
    width = coefficient_width(dim, degree)
    rows = [[col[r] for col in cols] for r in range(width)]
    _, kernel = kernel_basis(ExactMatrix(rows, ncols=len(cols)))
    out = []
    for vec in kernel:
        comps = [dict() for _ in gens]
        for coeff, (i, m) in zip(vec, labels):
            if coeff:
                comps[i][m] = coeff
        rel = tuple(HomPoly(dim, degree - gens[i][0], comps[i])
                    if degree - gens[i][0] >= 0 else HomPoly.zero(dim, 0)
                    for i in range(len(gens)))
        out.append(rel)
    return out


def _relation_holds(generators, relation) -> bool:
    dim = generators[0][1].dim
    degree = None
    total = None
    for (gdeg, g), a in zip(generators, relation):
        if a.is_zero():
            continue
        term_degree = a.degree + gdeg
        contrib = [a * comp for comp in g.components]
        if total is None:
            degree = term_degree
            total = contrib
        else:
            if term_degree != degree:
                return False
            total = [x + y for x, y in zip(total, contrib)]
    return total is None or all(t.is_zero() for t in total)


def spog_check(arr: Arrangement, d_max=None):
    if not is_essential(arr):
        raise ValueError("SPOG detection requires an essential arrangement")
    return _spog_check_cached(arr, len(arr) if d_max is None else d_max)


@lru_cache(maxsize=None)
def _spog_check_cached(arr: Arrangement, d_max: int):
    ell = arr.dim
    if isinstance(is_free(arr), FreenessCertificate):
        return NotSpog(arr, "free")

    state = {"stop": None}

    def stop_after(d, gens):
        if len(gens) < ell + 1:
            return False
        if state["stop"] is None:
            degs = [gd for gd, _ in gens]
            e0 = sum(degs) - len(arr)
            state["stop"] = max(max(degs), e0) + 1
        return d >= state["stop"]

    gset = minimal_generators(arr, d_max, stop_after=stop_after)
    gens = gset.generators
    if len(gens) > ell + 1:
        return NotSpog(arr, f"needs at least {len(gens)} generators")
    if len(gens) < ell + 1:
        return SpogInconclusive(arr, f"only {len(gens)} generators found up to "
                                     f"degree {gset.complete_up_to}", d_max)
    degrees = [gd for gd, _ in gens]
    e0 = sum(degrees) - len(arr)
    level = e0 - 1
    if level < 1:
        return NotSpog(arr, f"inconsistent relation degree {e0}")
    if level not in degrees:
        return NotSpog(arr, f"level {level} is not a generator degree")
    bound = max(max(degrees), e0) + 1
    if bound > gset.complete_up_to:
        return SpogInconclusive(arr, f"structure needs scanning to degree {bound}, "
                                     f"capped at {d_max}", d_max)

    # graded resolution check: exactly the one relation, degree by degree
    for e in range(bound + 1):
        lhs = gset.hilbert.get(e)
        if lhs is None:
            lhs = len(derivation_space(arr, e))
        rhs = sum(dim_homogeneous(ell, e - gd) for gd in degrees) \
            - dim_homogeneous(ell, e - e0)
        if lhs != rhs:
            return NotSpog(arr, f"graded dimension mismatch at degree {e}: "
                                f"{lhs} != {rhs}")

    rels = syzygies(gens, e0)
    if len(rels) != 1:
        return NotSpog(arr, f"{len(rels)} relations in degree {e0}, expected 1")
    relation = rels[0]
    if not _relation_holds(gens, relation):
        raise AssertionError("extracted relation does not evaluate to zero")

    ordered, rel_ordered = _order_generators(arr, gens, relation, level)
    poexp = list(degrees)
    poexp.remove(ordered[-1][0])
    cert = SpogCertificate(arrangement=arr, poexp=tuple(sorted(poexp)), level=level,
                           generators=tuple(g for _, g in ordered),
                           relation=rel_ordered, hilbert_checked_to=bound)
    return cert


def _order_generators(arr, gens, relation, level):
    """Euler first, level element last, ascending degrees in between.

    The level element is a generator of the level degree whose removal leaves
    an S-independent set (first such in extraction order, last candidate as a
    deterministic fallback); the Euler derivation is swapped into a degree-1
    slot with a nonzero coordinate.
    """
    ell = arr.dim
    items = [(gd, g, a) for (gd, g), a in zip(gens, relation)]

    # euler swap: find a degree-1 generator carrying a unit euler-coordinate
    euler = euler_derivation(ell)
    target = euler.to_vector()
    euler_slot = None
    for i, (gd, g, a) in enumerate(items):
        if gd != 1:
            continue
        reducer = RowReducer(coefficient_width(ell, 1))
        for j, (gd2, g2, _) in enumerate(items):
            if j != i and gd2 == 1:
                reducer.add(g2.to_vector())
        if any(reducer.reduce(target)):
            euler_slot = i
            break
    if euler_slot is None:
        raise AssertionError("no degree-1 generator carries the euler direction")
    # rewrite the relation for the substituted generating set: with
    # euler = sum c_j g_j, substituting slot i keeps the relation valid after
    # a_j += a_i * (c_j / c_i) for j != i and a_i /= c_i.
    coeffs = _euler_coordinates(ell, items, euler_slot)
    ci_inv = coeffs[euler_slot].inverse()
    new_items = []
    for j, (gd, g, a) in enumerate(items):
        if j == euler_slot:
            new_items.append((gd, euler, a.scale(ci_inv)))
        else:
            cj = coeffs[j]
            if cj:
                adj = a - items[euler_slot][2].scale(ci_inv * cj)
            else:
                adj = a
            new_items.append((gd, g, adj))
    items = new_items
    if not _relation_holds([(gd, g) for gd, g, _ in items],
                           tuple(a for _, _, a in items)):
        raise AssertionError("relation broke during euler substitution")

    candidates = [i for i, (gd, _, _) in enumerate(items)
                  if gd == level and i != euler_slot]
    if not candidates:
        candidates = [i for i, (gd, _, _) in enumerate(items) if gd == level]
    chosen = None
    for i in candidates:
        rest = [g for j, (_, g, _) in enumerate(items) if j != i]
        if not det_poly([list(g.components) for g in rest]).is_zero():
            chosen = i
            break
    if chosen is None:
        chosen = candidates[-1]

    middle = [items[j] for j in range(len(items)) if j not in (euler_slot, chosen)]
    middle.sort(key=lambda t: t[0])
    ordered = [items[euler_slot]] + middle + [items[chosen]]
    return [(gd, g) for gd, g, _ in ordered], tuple(a for _, _, a in ordered)


def _euler_coordinates(ell, items, _slot):
    """Coordinates of the euler vector over the degree-1 generators."""
    ones = [(i, g) for i, (gd, g, _) in enumerate(items) if gd == 1]
    width = coefficient_width(ell, 1)
    cols = [g.to_vector() for _, g in ones]
    target = euler_derivation(ell).to_vector()
    rows = [[col[r] for col in cols] + [target[r]] for r in range(width)]
    _, kernel = kernel_basis(ExactMatrix(rows, ncols=len(cols) + 1))
    sol = None
    for vec in kernel:
        if vec[-1]:
            inv = vec[-1].inverse()
            sol = [-(c * inv) for c in vec[:-1]]
            break
    if sol is None:
        raise AssertionError("euler vector must lie in the degree-1 span")
    out = [ZERO] * len(items)
    for (i, _), c in zip(ones, sol):
        out[i] = c
    return out


# -- level predictions -------------------------------------------------------------


def predict_deletion_level(arr: Arrangement, index: int) -> int:
    """Expected level of a non-free deletion from a free arrangement."""
    if not isinstance(is_free(arr), FreenessCertificate):
        raise ValueError("prediction needs a free arrangement")
    return len(arr) - 1 - len(restrict(arr, index))


def predict_addition_level(arr: Arrangement, h) -> int:
    """Expected level of a non-free one-plane addition, three variables only."""
    if arr.dim != 3:
        raise ValueError("the addition-side prediction is stated for K^3 only")
    if not isinstance(is_free(arr), FreenessCertificate):
        raise ValueError("prediction needs a free arrangement")
    from .arrangement import add_hyperplane
    bigger = add_hyperplane(arr, h)
    return len(restrict(bigger, bigger.hyperplanes.index(h))) - 1


# -- recovering a free basis of a free deletion ---------------------------------------


class DivisionSearchError(RuntimeError):
    pass


def _solve_in_span(columns, target, width):
    """Coefficients expressing target in the column span, or None."""
    if not columns:
        return None if any(target) else []
    rows = [[col[r] for col in columns] + [target[r]] for r in range(width)]
    _, kernel = kernel_basis(ExactMatrix(rows, ncols=len(columns) + 1))
    for vec in kernel:
        if vec[-1]:
            inv = vec[-1].inverse()
            return [-(c * inv) for c in vec[:-1]]
    return None


def spog_to_free_basis(cert: SpogCertificate, index: int):
    """Free basis of the deletion obtained by dividing two SPOG generators.

    For a SPOG arrangement whose deletion at `index` is free, two generators
    become divisible by the deleted form after adding multiples of the other
    generators; dividing them (and dropping the level element) yields a free
    basis of the deletion, validated by the determinant criterion.
    """
    arr = cert.arrangement
    h = arr[index]
    smaller = delete(arr, index)
    if not isinstance(is_free(smaller), FreenessCertificate):
        raise ValueError("the deletion must be free")
    gens = list(cert.generators)
    ell = arr.dim
    n_gens = len(gens)
    alpha = h.form()

    def divisible_representative(slot):
        """theta_slot + (span of other generators) meeting alpha * D(smaller)."""
        g = gens[slot]
        d = g.degree
        width = coefficient_width(ell, d)
        cols = []
        # alpha * D(deletion)_{d-1}
        for theta in derivation_space(smaller, d - 1):
            lifted = Derivation([alpha * c for c in theta.components])
            cols.append(lifted.to_vector())
        n_target = len(cols)
        for j, other in enumerate(gens):
            if j == slot or other.degree > d:
                continue
            for m in monomial_basis(ell, d - other.degree):
                cols.append(other.mul_monomial(m).to_vector())
        sol = _solve_in_span(cols, g.to_vector(), width)
        if sol is None:
            return None
        shifted = g
        for coeff, col in zip(sol[n_target:], cols[n_target:]):
            if coeff:
                shifted = shifted - Derivation.from_vector(ell, d, col).scale(coeff)
        divided = shifted.divide_by_form(h)
        if divided is None:
            raise AssertionError("solved representative must divide by the form")
        return divided

    cache = {}

    def divided(slot):
        if slot not in cache:
            cache[slot] = divisible_representative(slot)
        return cache[slot]

    level_slots = [i for i in range(1, n_gens) if gens[i].degree == cert.level]
    if n_gens - 1 not in level_slots:
        level_slots.append(n_gens - 1)
    for phi_slot in level_slots:
        rest = [i for i in range(n_gens) if i != phi_slot and i != 0]
        for si in range(len(rest)):
            for ti in range(si + 1, len(rest)):
                s, t = rest[si], rest[ti]
                div_s, div_t = divided(s), divided(t)
                if div_s is None or div_t is None:
                    continue
                basis = [gens[0]] + [gens[i] for i in rest if i not in (s, t)] \
                    + [div_s, div_t]
                if saito_check(smaller, basis) is not None:
                    return tuple(basis)
    raise DivisionSearchError("no divisible generator pair found within the "
                              "replacement search")
