from hypothesis import assume, given, settings, strategies as st
import pytest

from qrationals.numeration import enumerate_admissible, is_admissible, partition
from qrationals.polytope import (
    HullSystem,
    convexity_report,
    halfspace,
    in_hull,
    separates,
    verify_halfspace_split,
    verify_lattice_convexity,
)


@st.composite
def expansions(draw):
    first = draw(st.integers(0, 3))
    rest = draw(st.lists(st.integers(1, 3), min_size=1, max_size=3))
    a = (first,) + tuple(rest)
    assume(sum(a) <= 7)
    return a


def test_generators_are_inside():
    h = HullSystem.of_expansion((2, 2, 2))
    for p in h.points:
        assert in_hull(p, h)


def test_known_outside_points():
    h = HullSystem.of_expansion((0, 1, 3, 1))
    assert not in_hull((0, 0, 0, 1), h)
    assert not in_hull((0, 0, 1, 1), h)
    h = HullSystem.of_expansion((2, 2, 2))
    # odd digit at its cap without the forced predecessor
    assert not in_hull((1, 2, 0), h)
    # even digit at zero above a positive predecessor
    assert not in_hull((2, 2, 0), h)


def test_fractional_interior_membership_on_custom_hulls():
    square = HullSystem([(0, 0), (2, 0), (0, 2), (2, 2)])
    assert in_hull((1, 1), square)
    assert not in_hull((3, 1), square)
    segment = HullSystem([(0, 0), (2, 2)])
    assert in_hull((1, 1), segment)
    assert not in_hull((1, 0), segment)
    point = HullSystem([(5,)])
    assert in_hull((5,), point)
    assert not in_hull((4,), point)


def test_separates():
    points = ((0, 0), (1, 0), (0, 1))
    assert separates((1, 1), (2, 2), points)
    assert not separates((1, 1), (1, 0), points)


def test_hull_system_rejects_garbage():
    with pytest.raises(ValueError):
        HullSystem([])
    with pytest.raises(ValueError):
        HullSystem([(0, 0), (1,)])


@given(expansions())
@settings(max_examples=40, deadline=None)
def test_lattice_points_of_the_hull_are_the_admissible_vectors(a):
    report = convexity_report(a)
    assert report["violations"] == []
    assert report["dimension"] == len(a)
    assert report["generators"] == len(enumerate_admissible(a))
    assert verify_lattice_convexity(a)


@given(expansions())
@settings(max_examples=40, deadline=None)
def test_halfspace_splits_the_partition(a):
    assert verify_halfspace_split(a)
    y, t = halfspace(a)
    filled, empty = partition(a)
    for b in filled:
        assert sum(u * v for u, v in zip(y, b)) >= t
    for b in empty:
        assert sum(u * v for u, v in zip(y, b)) < t


def test_halfspace_normals():
    assert halfspace((2, 2, 2)) == ((1, 0, 0), 1)
    assert halfspace((0, 3, 1, 1)) == ((0, 1, 0, 0), 3)


def test_every_box_point_is_classified_correctly():
    a = (1, 2, 1, 2)
    h = HullSystem.of_expansion(a)
    from itertools import product

    for c in product(*(range(ai + 1) for ai in a)):
        assert in_hull(c, h) == is_admissible(c, a)
