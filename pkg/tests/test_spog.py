"""SPOG detection, level formulas and the divided-basis recovery."""

import pytest

from hypfree.arrangement import Arrangement, add_hyperplane, delete, restrict
from hypfree.derivations import Derivation, derivation_dim, euler_derivation
from hypfree.freeness import (FreenessCertificate, is_free, min_nontangent,
                              residual_decomposition, residual_polynomial,
                              saito_check)
from hypfree.polys import HomPoly, dim_homogeneous, exact_divide
from hypfree.scalars import Scalar
from hypfree.spog import (DivisionSearchError, NotSpog, SpogCertificate,
                          SpogInconclusive, predict_addition_level,
                          predict_deletion_level, spog_check, spog_to_free_basis,
                          syzygies)


def test_syzygies_of_free_basis(boolean3):
    cert = is_free(boolean3)
    gens = [(t.degree, t) for t in cert.basis]
    for e in range(1, 5):
        assert syzygies(gens, e) == []


def test_syzygies_duplicate_generator(boolean3):
    cert = is_free(boolean3)
    t = cert.basis[1]
    gens = [(t.degree, t), (t.degree, t), (1, cert.basis[2])]
    rels = syzygies(gens, t.degree)
    assert len(rels) == 1
    a = rels[0]
    # the relation line is spanned by (1, -1, 0)
    assert not a[0].is_zero()
    assert a[0] == -a[1]
    assert a[2].is_zero()


def test_free_is_not_spog(boolean3, pentagon_pair):
    assert isinstance(spog_check(boolean3), NotSpog)
    assert spog_check(pentagon_pair[0]).reason == "free"


def test_spog_requires_essential():
    with pytest.raises(ValueError):
        spog_check(Arrangement(3, [[1, 0, 0], [0, 1, 0]]))


def test_pentagon_deletion_spog(pentagon_pair):
    a, _ = pentagon_pair
    smaller = delete(a, 4)
    cert = spog_check(smaller)
    assert isinstance(cert, SpogCertificate)
    assert cert.poexp == (1, 5, 5)
    assert cert.level == 5
    assert cert.level == predict_deletion_level(a, 4)
    assert cert.generators[0] == euler_derivation(3)
    assert cert.generators[-1].degree == cert.level
    # resolution shape: no relations below the level+1 line, one on it
    gens = [(t.degree, t) for t in cert.generators]
    for e in range(1, cert.level + 1):
        assert syzygies(gens, e) == []
    assert len(syzygies(gens, cert.level + 1)) == 1


def test_spog_hilbert_identity(pentagon_pair):
    a, _ = pentagon_pair
    cert = spog_check(delete(a, 4))
    degrees = [t.degree for t in cert.generators]
    e0 = cert.level + 1
    for e in range(cert.hilbert_checked_to + 1):
        expect = sum(dim_homogeneous(3, e - d) for d in degrees) \
            - dim_homogeneous(3, e - e0)
        assert derivation_dim(cert.arrangement, e) == expect


def test_spog_relation_evaluates_to_zero(pentagon_pair):
    a, _ = pentagon_pair
    cert = spog_check(delete(a, 2))
    total = None
    for coeff, gen in zip(cert.relation, cert.generators):
        if coeff.is_zero():
            continue
        part = [coeff * c for c in gen.components]
        total = part if total is None else [x + y for x, y in zip(total, part)]
    assert total is not None
    assert all(t.is_zero() for t in total)
    # the level element's coefficient is linear (degree level+1 - level)
    assert cert.relation[-1].degree == 1


def test_spog_size_identity(pentagon_pair):
    a, _ = pentagon_pair
    cert = spog_check(delete(a, 7))
    degrees = [t.degree for t in cert.generators]
    assert sum(degrees) - (cert.level + 1) == len(cert.arrangement)


def test_spog_inconclusive_at_low_cap(pentagon_pair):
    a, _ = pentagon_pair
    res = spog_check(delete(a, 0), d_max=3)
    assert isinstance(res, SpogInconclusive)


def test_pentagon_addition_spog(pentagon_pair):
    a, b = pentagon_pair
    extras = [h for h in a if h not in b]
    assert len(extras) == 4
    exp_b = is_free(b).exponents
    for h in extras:
        bigger = add_hyperplane(b, h)
        assert not isinstance(is_free(bigger), FreenessCertificate)
        cert = spog_check(bigger)
        assert isinstance(cert, SpogCertificate)
        assert cert.poexp == (1, exp_b[1] + 1, exp_b[2] + 1)
        assert cert.level == predict_addition_level(b, h)


def test_predict_addition_level_requires_dim3():
    arr = Arrangement(2, [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        predict_addition_level(arr, None)


def test_spog_to_free_basis_roundtrip(pentagon_pair):
    a, b = pentagon_pair
    h = [x for x in a if x not in b][0]
    bigger = add_hyperplane(b, h)
    cert = spog_check(bigger)
    idx = bigger.hyperplanes.index(h)
    basis = spog_to_free_basis(cert, idx)
    assert tuple(sorted(t.degree for t in basis)) == (1, 3, 3)
    assert saito_check(b, list(basis)) is not None


def test_spog_to_free_basis_rejects_nonfree_deletion(pentagon_pair):
    a, _ = pentagon_pair
    smaller = delete(a, 0)
    cert = spog_check(smaller)
    # deleting any further plane keeps it non-free, so the recovery must refuse
    with pytest.raises(ValueError):
        spog_to_free_basis(cert, 0)


def test_synthetic_addition_generator_shape(pentagon_pair):
    # generators of a non-free addition contain alpha*theta for each basis
    # member theta of the smaller free arrangement
    a, b = pentagon_pair
    h = [x for x in a if x not in b][1]
    bigger = add_hyperplane(b, h)
    cert = spog_check(bigger)
    alpha = h.form()
    free_b = is_free(b)
    lifted = [Derivation([alpha * c for c in t.components]) for t in free_b.basis[1:]]
    span_degrees = sorted(t.degree for t in lifted)
    assert span_degrees == [e + 1 for e in free_b.exponents[1:]]
    for t in lifted:
        assert t.in_module(bigger)


# -- coprimality of the residual cofactors (two-nontangent configuration) ------------


def _poly_to_univariate(p, keep, other):
    """Homogeneous bivariate -> (y-adic valuation, dense coeffs of p(x, 1))."""
    val = min(e[other] for e in p.coeffs)
    coeffs = [Scalar.zero()] * (p.degree + 1)
    for e, c in p.coeffs.items():
        coeffs[e[keep]] = c
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return val, coeffs


def _univ_mod(a, b):
    a = a[:]
    while len(a) >= len(b) and any(a):
        if not a[-1]:
            a.pop()
            continue
        f = a[-1] * b[-1].inverse()
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - f * c
        a.pop()
    while len(a) > 1 and not a[-1]:
        a.pop()
    return a


def _gcd_degree_bivariate(p, q):
    keep, other = 0, 1
    vp, up = _poly_to_univariate(p, keep, other)
    vq, uq = _poly_to_univariate(q, keep, other)
    a, b = up, uq
    while any(b) and len(b) > 1:
        a, b = b, _univ_mod(a, b)
    if any(b) and len(b) == 1:
        gcd_deg = 0
    else:
        gcd_deg = len(a) - 1
    return gcd_deg + min(vp, vq)


def test_residual_cofactors_coprime(pentagon_pair):
    from hypfree.freeness import greedy_tangent_basis
    a, b = pentagon_pair
    h = [x for x in a if x not in b][0]
    bigger = add_hyperplane(b, h)
    assert not isinstance(is_free(bigger), FreenessCertificate)
    basis, s = greedy_tangent_basis(b, h)
    assert s == 2
    res = residual_polynomial(b, h, verify=True)
    cofactors = []
    for t in basis:
        if t.is_tangent_to(h):
            continue
        out = residual_decomposition(t, h, res)
        assert out is not None
        _, g = out
        assert not g.is_zero()
        cofactors.append(g)
    assert len(cofactors) == 2
    p, q = cofactors
    pr = p.eliminate(res.pivot, [-c for i, c in enumerate(h.coeffs) if i != res.pivot])
    qr = q.eliminate(res.pivot, [-c for i, c in enumerate(h.coeffs) if i != res.pivot])
    assert _gcd_degree_bivariate(pr, qr) == 0


def test_spog_g_consistent_with_min_nontangent(pentagon_pair):
    # g(addition) = dim + 1 generators matches the exact nontangency count 2
    a, b = pentagon_pair
    h = [x for x in a if x not in b][2]
    bigger = add_hyperplane(b, h)
    cert = spog_check(bigger)
    assert isinstance(cert, SpogCertificate)
    g = len(cert.generators)
    s, exact = min_nontangent(b, h)
    assert exact and g >= bigger.dim + s - 1


def test_coned_a2_addition_prediction(coned_a2):
    # adding a generic plane through the origin to the coned Weyl arrangement
    from hypfree.arrangement import Hyperplane
    from hypfree.freeness import FreenessCertificate, is_free
    h = Hyperplane([1, 1, 1])
    bigger = add_hyperplane(coned_a2, h)
    exp = is_free(coned_a2).exponents
    assert exp == (1, 1, 2)
    lvl = predict_addition_level(coned_a2, h)
    res = spog_check(bigger)
    if isinstance(is_free(bigger), FreenessCertificate):
        assert isinstance(res, NotSpog)
    else:
        assert isinstance(res, SpogCertificate)
        assert res.level == lvl
        assert res.poexp == (1, exp[1] + 1, exp[2] + 1)
