"""Freeness oracle, Saito certificates, the residual polynomial of a deletion
pair, and (minimal) nontangency counts of free bases.

The freeness decision combines two sound and complete halves: the
characteristic polynomial must factor over non-negative integers (Terao
factorization is necessary), and then the minimal generators up to the largest
candidate exponent must be exactly dim-many with matching degrees and pass
Saito's determinant criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangement import (Arrangement, Hyperplane, add_hyperplane, defining_polynomial,
                          delete, restrict)
from .derivations import (Derivation, GeneratorSet, RowReducer, _span_reducer,
                          coefficient_width, derivation_space, euler_derivation,
                          minimal_generators)
from .lattice import char_poly, integer_roots
from .polys import HomPoly, exact_divide
from .scalars import Scalar


class MembershipError(ValueError):
    """A supplied derivation is not tangent to the arrangement."""

    def __init__(self, indices):
        self.indices = tuple(indices)
        super().__init__(f"derivations at positions {self.indices} are not in the module")


@dataclass(frozen=True)
class FreenessCertificate:
    arrangement: Arrangement
    exponents: tuple
    basis: tuple  # Derivations, euler first, degrees ascending
    saito_constant: Scalar
    char_poly: tuple


@dataclass(frozen=True)
class NotFree:
    arrangement: Arrangement
    reason: str
    char_poly: tuple


def saito_check(arr: Arrangement, derivs):
    """Saito constant c with det(coefficients) == c * Q(arr), or None.

    Membership of every derivation is re-verified and raises MembershipError;
    degree-sum or determinant failures return None.
    """
    derivs = list(derivs)
    if len(derivs) != arr.dim:
        raise ValueError(f"need exactly {arr.dim} derivations")
    bad = [i for i, t in enumerate(derivs) if not t.in_module(arr)]
    if bad:
        raise MembershipError(bad)
    if sum(t.degree for t in derivs) != len(arr):
        return None
    return _saito_constant_unchecked(arr, derivs)


def _saito_constant_unchecked(arr: Arrangement, derivs):
    from .polys import det_poly
    det = det_poly([list(t.components) for t in derivs])
    if det.is_zero():
        return None
    q = defining_polynomial(arr)
    c = exact_divide(det, q)
    if c is None or not c.is_constant():
        return None
    value = c.constant_value()
    return value if value else None


@lru_cache(maxsize=None)
def is_free(arr: Arrangement):
    """FreenessCertificate or NotFree; exact and conclusive.

    Works uniformly for non-essential input: the characteristic polynomial
    then carries zero roots and the generator scan finds constant derivations.
    """
    chi = char_poly(arr)
    roots = integer_roots(chi)
    if roots is None:
        return NotFree(arr, "characteristic polynomial does not factor over "
                            "non-negative integers", chi)
    if not len(arr):
        basis = tuple(Derivation([HomPoly.constant(arr.dim, 0)] * i
                                 + [HomPoly.constant(arr.dim, 1)]
                                 + [HomPoly.constant(arr.dim, 0)] * (arr.dim - 1 - i))
                      for i in range(arr.dim))
        return FreenessCertificate(arr, roots, basis, Scalar.one(), chi)
    gens = minimal_generators(arr, max(roots))
    if gens.count() != arr.dim or tuple(sorted(gens.degrees)) != roots:
        return NotFree(arr, "minimal generator degrees do not match the "
                            "characteristic polynomial roots", chi)
    basis = [g for _, g in sorted(zip(gens.degrees, [g for _, g in gens.generators]),
                                  key=lambda t: t[0])]
    basis = _swap_in_euler(arr, basis)
    constant = _saito_constant_unchecked(arr, basis)
    if constant is None:
        return NotFree(arr, "generators fail the determinant criterion", chi)
    return FreenessCertificate(arr, roots, tuple(basis), constant, chi)


def _swap_in_euler(arr: Arrangement, basis):
    """Replace one degree-1 basis member so the Euler derivation appears first.

    The basis represents the Euler derivation uniquely; a member of degree 1 is
    swappable exactly when its (constant) coordinate is nonzero, i.e. when the
    Euler vector escapes the degree-1 span of all the other members.
    """
    if not len(arr):
        return list(basis)
    euler = euler_derivation(arr.dim)
    ones = [i for i, t in enumerate(basis) if t.degree == 1]
    target = euler.to_vector()
    for i in ones:
        others = [(t.degree, t) for j, t in enumerate(basis) if j != i]
        reducer = _span_reducer(arr.dim, others, 1)
        if any(reducer.reduce(target)):
            rest = [t for j, t in enumerate(basis) if j != i]
            rest.sort(key=lambda t: t.degree)
            return [euler] + rest
    raise AssertionError("euler derivation must involve some degree-1 generator")


def exponents(arr: Arrangement):
    """Sorted exponent multiset, or None when the arrangement is not free."""
    res = is_free(arr)
    return res.exponents if isinstance(res, FreenessCertificate) else None


def certified_generators(arr: Arrangement, d_max=None) -> GeneratorSet:
    """Generator set whose completeness bound is certificate-driven when
    possible: the exponents for a free arrangement, level + 1 for a SPOG one,
    else the requested or default |arr| cap."""
    res = is_free(arr)
    if isinstance(res, FreenessCertificate):
        bound = max(res.exponents) if res.exponents else 0
        return minimal_generators(arr, bound)
    from .spog import spog_check, SpogCertificate
    sc = spog_check(arr)
    if isinstance(sc, SpogCertificate):
        bound = max(max(sc.poexp), sc.level)
        return minimal_generators(arr, bound)
    return minimal_generators(arr, len(arr) if d_max is None else d_max)


# -- residual polynomial of a deletion pair -------------------------------------


@dataclass(frozen=True)
class ResidualPolynomial:
    """For a pair (arr, h) with h outside arr: the degree |arr| - |(arr+h)^h|
    polynomial B with theta(alpha_h) in the ideal (alpha_h, B) for every theta
    tangent to arr."""

    poly: HomPoly            # lifted to the ambient variables (pivot slot unused)
    restricted: HomPoly      # in the hyperplane chart coordinates
    degree: int
    pivot: int


class ResidualVerificationError(RuntimeError):
    pass


def _restrict_poly(p: HomPoly, h: Hyperplane) -> HomPoly:
    piv = h.pivot()
    repl = [-c for i, c in enumerate(h.coeffs) if i != piv]
    return p.eliminate(piv, repl)


def residual_polynomial(arr: Arrangement, h: Hyperplane, verify=True,
                        verify_gens=None) -> ResidualPolynomial:
    """Compute the residual polynomial of (arr, h) and verify its contract.

    B is Q(arr) restricted to h divided by the reduced restriction product;
    with verify=True the ideal membership theta(alpha_h) in (alpha_h, B) is
    checked on a generator set of the module of arr (a certified-complete one
    unless verify_gens overrides) and any failure raises.
    """
    if h in arr:
        raise ValueError("hyperplane must lie outside the arrangement")
    bigger = add_hyperplane(arr, h)
    h_index = bigger.hyperplanes.index(h)
    restricted_arr = restrict(bigger, h_index)
    q_restricted = _restrict_poly(defining_polynomial(arr), h)
    q_flat = HomPoly.constant(arr.dim - 1, 1)
    for hp in restricted_arr:
        q_flat = q_flat * hp.form()
    b_restricted = exact_divide(q_restricted, q_flat)
    if b_restricted is None:
        raise ResidualVerificationError("restricted product is not divisible by "
                                        "the reduced restriction")
    piv = h.pivot()
    positions = tuple(i for i in range(arr.dim) if i != piv)
    b = b_restricted.embed(arr.dim, positions)
    deg = len(arr) - len(restricted_arr)
    if b_restricted.degree != deg:
        raise ResidualVerificationError(
            f"degree {b_restricted.degree} != |arr| - |restriction| = {deg}")
    out = ResidualPolynomial(poly=b, restricted=b_restricted, degree=deg, pivot=piv)
    if verify:
        gens = verify_gens if verify_gens is not None else certified_generators(arr)
        bad = []
        for gdeg, g in gens.generators:
            if not residual_membership(g, h, out):
                bad.append(gdeg)
        if bad:
            raise ResidualVerificationError(
                f"generators of degrees {bad} violate theta(alpha) in (alpha, B)")
    return out


def residual_membership(theta: Derivation, h: Hyperplane, res: ResidualPolynomial) -> bool:
    """theta(alpha_h) in (alpha_h, B), tested in the hyperplane chart."""
    val = theta.apply_to_form(h)
    if val.is_zero():
        return True
    reduced = _restrict_poly(val, h)
    if reduced.is_zero():
        return True
    if res.degree == 0:
        return True  # the ideal contains a nonzero constant
    return exact_divide(reduced, res.restricted) is not None


def residual_decomposition(theta: Derivation, h: Hyperplane, res: ResidualPolynomial):
    """(f, g) with theta(alpha_h) == f*alpha_h + g*B, exact; None if no such g."""
    val = theta.apply_to_form(h)
    reduced = _restrict_poly(val, h)
    if reduced.is_zero():
        g = HomPoly.zero(theta.dim, max(val.degree - res.degree, 0))
        remainder = val
    else:
        g_restricted = exact_divide(reduced, res.restricted)
        if g_restricted is None:
            return None
        positions = tuple(i for i in range(theta.dim) if i != res.pivot)
        g = g_restricted.embed(theta.dim, positions)
        remainder = val - g * res.poly
    f = exact_divide(remainder, h.form())
    if f is None:
        raise AssertionError("residual decomposition must divide after reduction")
    return f, g


# -- nontangency counts ----------------------------------------------------------


def nontangent_count(arr: Arrangement, basis, h: Hyperplane) -> int:
    """How many members of a certified free basis of D(arr) fail tangency to h."""
    if saito_check(arr, basis) is None:
        raise ValueError("supplied derivations are not a free basis")
    return sum(0 if t.is_tangent_to(h) else 1 for t in basis)


def _pick_independent(reducer, candidates, dim, degree, want, chosen):
    picked = 0
    for theta in candidates:
        if picked == want:
            break
        red = reducer.reduce(theta.to_vector())
        lead = next((i for i, c in enumerate(red) if c), None)
        if lead is None:
            continue
        inv = red[lead].inverse()
        norm = [c * inv if c else c for c in red]
        chosen.append(Derivation.from_vector(dim, degree, norm))
        reducer.add(norm)
        picked += 1
    return picked


def greedy_tangent_basis(arr: Arrangement, h: Hyperplane):
    """Free basis of D(arr) preferring members tangent to the outside plane h.

    Degreewise: take as many independent derivations of the enlarged module as
    the exponent multiplicities allow, then fill from D(arr). Returns
    (basis, nontangent count).
    """
    if h in arr:
        raise ValueError("hyperplane already belongs to the arrangement")
    cert = is_free(arr)
    if not isinstance(cert, FreenessCertificate):
        raise ValueError("arrangement must be free")
    bigger = add_hyperplane(arr, h)
    exps = cert.exponents
    chosen = []
    for d in sorted(set(exps)):
        want = exps.count(d)
        reducer = _span_reducer(arr.dim, [(t.degree, t) for t in chosen], d)
        got = _pick_independent(reducer, derivation_space(bigger, d),
                                arr.dim, d, want, chosen)
        got += _pick_independent(reducer, derivation_space(arr, d),
                                 arr.dim, d, want - got, chosen)
        if got != want:
            raise AssertionError("free module must admit a degreewise basis")
    count = sum(0 if t.is_tangent_to(h) else 1 for t in chosen)
    if saito_check(arr, chosen) is None:
        raise AssertionError("greedy selection failed to produce a basis")
    return chosen, count


def min_nontangent(arr: Arrangement, h: Hyperplane):
    """Greedy upper bound for the minimal nontangency count over free bases.

    Returns (count, exact). Exact cases: the addition is free (count is 1),
    or it is not free and the greedy basis achieves 2 (non-freeness already
    forces at least 2, so the bound closes).
    """
    bigger = add_hyperplane(arr, h)
    if isinstance(is_free(arr), FreenessCertificate) \
            and isinstance(is_free(bigger), FreenessCertificate):
        return 1, True
    _, count = greedy_tangent_basis(arr, h)
    if count < 2:
        raise AssertionError("a basis with one nontangent member forces a free addition")
    return count, count == 2
