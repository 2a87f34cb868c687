import pytest

from hypfree.arrangement import (AffineArrangement, Arrangement, Hyperplane,
                                 add_hyperplane, cone, coordinate_image_under_decone,
                                 decone, defining_polynomial, delete,
                                 format_arrangement_text, is_essential,
                                 parse_arrangement_text, restrict)
from hypfree.polys import HomPoly
from hypfree.scalars import Scalar


def test_hyperplane_normalization():
    assert Hyperplane([2, 4, 0]) == Hyperplane([1, 2, 0])
    assert Hyperplane([0, -3, 6]) == Hyperplane([0, 1, -2])
    with pytest.raises(ValueError):
        Hyperplane([0, 0, 0])


def test_canonical_order_and_equality():
    a1 = Arrangement(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    a2 = Arrangement(3, [[0, 0, 2], [1, 0, 0], [0, -1, 0]])
    assert a1 == a2
    assert hash(a1) == hash(a2)
    with pytest.raises(ValueError):
        Arrangement(3, [[1, 0, 0], [2, 0, 0]])


def test_defining_polynomial(boolean3, coned_a2):
    q = defining_polynomial(boolean3)
    x, y, z = (HomPoly.variable(3, i) for i in range(3))
    assert q == x * y * z
    empty = Arrangement(3, [])
    assert defining_polynomial(empty) == HomPoly.constant(3, 1)
    assert defining_polynomial(coned_a2).degree == 4


def test_delete_round_trip(boolean3):
    smaller = delete(boolean3, 0)
    assert len(smaller) == 2
    h = boolean3[0]
    assert add_hyperplane(smaller, h) == boolean3
    with pytest.raises(IndexError):
        delete(boolean3, 7)


def test_restrict_examples(boolean3, coned_a2):
    r = restrict(boolean3, 0)
    assert r == Arrangement(2, [[1, 0], [0, 1]])
    z_index = next(i for i, h in enumerate(coned_a2)
                   if h == Hyperplane([0, 0, 1]))
    assert len(restrict(coned_a2, z_index)) == 3


def test_restrict_bound(pentagon_pair):
    a, _ = pentagon_pair
    for i in range(len(a)):
        assert len(restrict(a, i)) <= len(a) - 1


def test_cone_basic():
    aff = AffineArrangement(1, [((1,), -1)])  # the affine point x = 1
    central = cone(aff)
    assert central == Arrangement(2, [[1, -1], [0, 1]])


def test_decone_cone_round_trip(boolean3, pentagon_pair, coned_a2):
    for arr, idx in ((boolean3, 0), (coned_a2, 3), (pentagon_pair[0], 0)):
        aff = decone(arr, idx)
        assert len(aff) == len(arr) - 1
        again = cone(aff)
        assert again == coordinate_image_under_decone(arr, idx)


def test_decone_two_lines():
    arr = Arrangement(2, [[1, 0], [0, 1]])
    aff = decone(arr, 0)
    assert aff.dim == 1 and len(aff) == 1  # one affine point in K^1


def test_is_essential(boolean3, pentagon_pair):
    assert is_essential(boolean3)
    assert is_essential(pentagon_pair[0])
    assert not is_essential(Arrangement(3, [[1, 0, 0], [0, 1, 0]]))


def test_relabeling_invariance():
    rows = [[1, 2, 0], [0, 1, 1], [1, 0, 0], [3, 1, 2]]
    a = Arrangement(3, rows)
    b = Arrangement(3, list(reversed(rows)))
    assert a == b
    assert delete(a, 1) == delete(b, 1)
    assert restrict(a, 2) == restrict(b, 2)


def test_text_round_trip(pentagon_pair):
    a, _ = pentagon_pair
    text = format_arrangement_text(a)
    back = parse_arrangement_text(text)
    assert back == a
    rational = Arrangement(3, [[1, 0, 0], [0, 1, "1/2"]])
    assert parse_arrangement_text(format_arrangement_text(rational)) == rational


def test_affine_text_round_trip():
    aff = AffineArrangement(2, [((1, 0), -1), ((0, 1), 2), ((1, 1), 0)])
    text = format_arrangement_text(aff)
    assert "affine 2" in text
    assert parse_arrangement_text(text) == aff


def test_parser_diagnostics_carry_line_numbers():
    bad = "field Q\nrank 3\n1 0 0\n1 oops 0\n"
    with pytest.raises(ValueError) as err:
        parse_arrangement_text(bad)
    assert "line 4" in str(err.value)
    with pytest.raises(ValueError) as err:
        parse_arrangement_text("field F7\nrank 2\n1 0\n")
    assert "line 1" in str(err.value)
    with pytest.raises(ValueError) as err:
        parse_arrangement_text("field Q\nrank 2\n1 0\n1 0\n")
    assert "repeated" in str(err.value)


def test_comments_and_blank_lines():
    text = "# a comment\nfield Q\n\nrank 2\n# another\n1 0\n0 1\n"
    arr = parse_arrangement_text(text)
    assert len(arr) == 2


def test_cone_decone_lattice_multiset(pentagon_pair, coned_a2):
    from hypfree.lattice import intersection_lattice

    def flat_multiset(arr):
        return sorted((f.codim, len(f.containing))
                      for f in intersection_lattice(arr))

    for arr, idx in ((coned_a2, 0), (pentagon_pair[0], 2)):
        again = cone(decone(arr, idx))
        assert flat_multiset(again) == flat_multiset(arr)
