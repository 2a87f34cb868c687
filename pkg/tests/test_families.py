from gmpy2 import mpq

from hypfree.arrangement import (Arrangement, Hyperplane, cone,
                                 coordinate_image_under_decone, decone,
                                 is_essential, restrict)
from hypfree.families import (catalan, cat_shi, pentagon, pentagon_vertices, shi,
                              shi_cat, weyl)
from hypfree.scalars import Scalar


def test_root_systems():
    a2 = weyl("A2")
    assert len(a2.positive_roots) == 3
    assert len(a2.long_roots) == 3 and not a2.short_roots
    b2 = weyl("B2")
    assert len(b2.positive_roots) == 4
    assert set(b2.long_roots) == {(1, -1), (1, 1)}
    assert set(b2.short_roots) == {(1, 0), (0, 1)}
    # B2 lives in the standard orthogonal model: length ratio sqrt(2)
    assert all(a * a + b * b == 2 for a, b in b2.long_roots)
    assert all(a * a + b * b == 1 for a, b in b2.short_roots)
    g2 = weyl("G2")
    assert len(g2.long_roots) == 3 and len(g2.short_roots) == 3


def test_weyl_coned_a2(coned_a2):
    assert catalan(weyl("A2"), 0) == coned_a2


def test_family_sizes():
    a2, b2, g2 = weyl("A2"), weyl("B2"), weyl("G2")
    assert len(catalan(a2, 0)) == 4
    assert len(catalan(a2, 1)) == 10
    assert len(shi(a2, 1)) == 7
    assert len(shi(a2, 2)) == 13
    assert len(catalan(b2, (1, 0))) == 2 * 3 + 2 * 1 + 1 == 9
    assert len(shi(b2, (1, 1))) == 9
    assert len(cat_shi(b2, 1, 1)) == 11
    assert len(shi_cat(b2, 1, 1)) == 11
    assert len(catalan(g2, 1)) == 19


def test_family_inclusions():
    for tag in ("A2", "B2", "G2"):
        rs = weyl(tag)
        for k in (1, 2):
            assert shi(rs, k).issubset(catalan(rs, k))
            assert catalan(rs, k).issubset(shi(rs, k + 1))
    b2 = weyl("B2")
    assert shi(b2, (1, 1)).issubset(cat_shi(b2, 1, 1))
    assert shi(b2, (1, 1)).issubset(shi_cat(b2, 1, 1))
    assert catalan(b2, (1, 1)).issubset(cat_shi(b2, 1, 2))
    assert catalan(b2, (1, 1)).issubset(shi_cat(b2, 2, 1))


def test_families_essential():
    for tag in ("A2", "B2", "G2"):
        rs = weyl(tag)
        assert is_essential(shi(rs, 1))
        assert is_essential(catalan(rs, 1))


def test_shi_parameter_validation():
    import pytest
    with pytest.raises(ValueError):
        shi(weyl("A2"), 0)
    with pytest.raises(ValueError):
        catalan(weyl("A2"), -1)


def test_pentagon_coordinates_exact():
    v = pentagon_vertices()
    c1 = v[1][0]  # cos(2 pi / 5) = (sqrt5 - 1)/4
    assert c1 == Scalar(mpq(-1, 4), mpq(1, 4), 5)
    # quadratic identity 4c^2 + 2c - 1 = 0
    four = Scalar.rational(4)
    two = Scalar.rational(2)
    one = Scalar.one()
    assert not (four * c1 * c1 + two * c1 - one)
    # y-rescale identity: (sin(4pi/5)/sin(2pi/5))^2 == (3 - sqrt5)/2
    s2 = v[2][1]
    assert s2 * s2 == Scalar(mpq(3, 2), mpq(-1, 2), 5)


def test_pentagon_sizes_and_inclusion(pentagon_pair):
    a, b = pentagon_pair
    assert len(a) == 11
    assert len(b) == 7
    assert b.issubset(a)
    assert a.disc == b.disc == 5


def test_pentagon_restrictions(pentagon_pair):
    a, _ = pentagon_pair
    for i in range(len(a)):
        assert len(restrict(a, i)) == 5


def test_pentagon_decone_round_trip(pentagon_pair):
    a, _ = pentagon_pair
    z_index = next(i for i, h in enumerate(a) if h == Hyperplane([0, 0, 1]))
    aff = decone(a, z_index)
    assert len(aff) == 10
    assert cone(aff) == coordinate_image_under_decone(a, z_index)


def test_pentagon_parallel_classes(pentagon_pair):
    # five rank-2 flats on the cone plane: each edge meets its parallel
    # diagonal there (multiplicity 3 with z)
    a, _ = pentagon_pair
    z_index = next(i for i, h in enumerate(a) if h == Hyperplane([0, 0, 1]))
    on_z = len(restrict(a, z_index))
    assert on_z == 5  # 10 lines fall into 5 parallel classes
