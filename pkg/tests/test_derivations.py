from hypfree.arrangement import Arrangement, delete
from hypfree.derivations import (Derivation, derivation_dim, derivation_space,
                                 euler_derivation, free_hilbert_dim,
                                 minimal_generators, vanishing_subspace_dim)
from hypfree.freepath import random_arrangement
from hypfree.polys import HomPoly, dim_homogeneous


def test_empty_arrangement_constants():
    empty = Arrangement(3, [])
    assert derivation_dim(empty, 0) == 3
    assert derivation_dim(empty, 2) == 3 * dim_homogeneous(3, 2)


def test_euler_always_tangent(boolean3, coned_a2, pentagon_pair):
    for arr in (boolean3, coned_a2, *pentagon_pair,
                random_arrangement(3, 3, 6, 3)):
        e = euler_derivation(arr.dim)
        assert e.in_module(arr)
        # and it shows up inside the computed degree-1 space
        space = derivation_space(arr, 1)
        assert derivation_dim(arr, 1) >= 1
        assert all(t.in_module(arr) for t in space)


def test_boolean_generators_are_coordinate_derivations(boolean3):
    gens = minimal_generators(boolean3, 3)
    assert gens.degrees == (1, 1, 1)
    for d, g in gens.generators:
        nonzero = [i for i, c in enumerate(g.components) if not c.is_zero()]
        assert len(nonzero) == 1
        i = nonzero[0]
        assert g.components[i] == HomPoly.variable(3, i)


def test_pentagon_degree5_dimension(pentagon_pair):
    a, _ = pentagon_pair
    # free Hilbert series for exponents (1,5,5): dim S_4 + 2 dim S_0 = 15 + 2
    assert derivation_dim(a, 5) == 17


def test_pentagon_generator_degrees(pentagon_pair):
    a, _ = pentagon_pair
    gens = minimal_generators(a, 6)
    assert gens.degrees == (1, 5, 5)
    deletion = delete(a, 0)
    gens_del = minimal_generators(deletion, 6)
    assert gens_del.degrees == (1, 5, 5, 5)


def test_free_hilbert_series(pentagon_pair, boolean3, coned_a2):
    cases = [(pentagon_pair[0], (1, 5, 5), 7), (boolean3, (1, 1, 1), 4),
             (coned_a2, (1, 1, 2), 4)]
    for arr, exps, dmax in cases:
        for d in range(dmax + 1):
            assert derivation_dim(arr, d) == free_hilbert_dim(arr.dim, exps, d)


def test_euler_splitting_dimensions(pentagon_pair, boolean3):
    # D(A) = S theta_E + D_H(A) with dim D_H(A)_d = dim D(A)_d - dim S_{d-1}
    for arr in (boolean3, pentagon_pair[1]):
        for idx in (0, len(arr) - 1):
            for d in range(0, 5):
                expect = derivation_dim(arr, d) - dim_homogeneous(arr.dim, d - 1)
                assert vanishing_subspace_dim(arr, idx, d) == expect


def test_membership_by_both_routes(pentagon_pair):
    from hypfree.polys import exact_divide
    a, _ = pentagon_pair
    for theta in derivation_space(a, 5):
        for h in a:
            val = theta.apply_to_form(h)
            assert val.is_zero() or exact_divide(val, h.form()) is not None


def test_space_determinism(coned_a2):
    s1 = derivation_space(coned_a2, 3)
    s2 = derivation_space(coned_a2, 3)
    assert s1 is s2  # cached
    fresh = Arrangement(3, [list(h.coeffs) for h in coned_a2])
    s3 = derivation_space(fresh, 3)
    assert list(s1) == list(s3)


def test_vector_round_trip(pentagon_pair):
    a, _ = pentagon_pair
    for theta in derivation_space(a, 2):
        again = Derivation.from_vector(3, 2, theta.to_vector())
        assert again == theta
