import itertools

import numpy as np
import pytest

from toriccodes.errors import CapExceededError, ClutterError, PreconditionError
from toriccodes.geometry import (
    ProjectivePoint,
    ToricSet,
    characteristic_vectors,
    clutter_validate,
    complete_bipartite_clutter,
    is_complete_intersection,
    load_clutter,
    projective_torus,
    singleton_clutter,
    toric_set_from_exponents,
)
from toriccodes.gf import field_for_order


def clutter_set(field, clutter):
    return toric_set_from_exponents(field, characteristic_vectors(clutter))


def test_projective_line_torus(gf3):
    x = projective_torus(gf3, 2)
    assert x.array.tolist() == [[1, 1], [2, 1]]
    assert len(x) == 2


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_torus_size_and_normalization(q, s):
    x = projective_torus(field_for_order(q), s)
    assert len(x) == (q - 1) ** (s - 1)
    assert (x.array[:, -1] == 1).all()
    assert (x.array != 0).all()
    assert x.array.tolist() == sorted(x.array.tolist())
    assert is_complete_intersection(x)


def test_torus_preconditions(gf3):
    with pytest.raises(PreconditionError):
        projective_torus(gf3, 1)
    with pytest.raises(CapExceededError):
        projective_torus(gf3, 6, cap=10)


def test_point_normalization(gf5):
    assert ProjectivePoint.normalize(gf5, [2, 4]).coords == (3, 1)
    with pytest.raises(PreconditionError):
        ProjectivePoint.normalize(gf5, [0, 1])


def test_contains_uses_any_representative(gf3):
    x = projective_torus(gf3, 2)
    assert x.contains([2, 2])
    assert x.contains([1, 2])


def test_clutter_validation():
    with pytest.raises(ClutterError) as info:
        clutter_validate(3, [(1, 2), (1, 2, 3)])
    assert info.value.details == {"contained": [1, 2], "container": [1, 2, 3]}
    with pytest.raises(ClutterError):
        clutter_validate(2, [(1, 3)])
    with pytest.raises(ClutterError):
        clutter_validate(2, [(1, 2), (2, 1)])
    with pytest.raises(ClutterError):
        clutter_validate(2, [()])
    with pytest.raises(ClutterError):
        clutter_validate(2, [])


def test_bipartition():
    assert complete_bipartite_clutter(2, 3).bipartition() == (2, 3)
    assert complete_bipartite_clutter(1, 1).bipartition() == (1, 1)
    assert clutter_validate(3, [(1, 2), (2, 3), (1, 3)]).bipartition() is None
    assert singleton_clutter(3).bipartition() is None
    # a path is bipartite but not complete
    assert clutter_validate(4, [(1, 2), (2, 3), (3, 4)]).bipartition() is None


def test_characteristic_vectors():
    assert characteristic_vectors(complete_bipartite_clutter(1, 2)) == [(1, 1, 0), (1, 0, 1)]


@pytest.mark.parametrize("field_name,k,l,size", [("gf3", 2, 2, 4), ("gf4", 2, 2, 9), ("gf3", 2, 3, 8), ("gf5", 2, 2, 16)])
def test_bipartite_toric_sets(request, field_name, k, l, size):
    field = request.getfixturevalue(field_name)
    x = clutter_set(field, complete_bipartite_clutter(k, l))
    assert len(x) == size == (field.q - 1) ** (k + l - 2)
    assert not is_complete_intersection(x)


def test_singleton_and_triangle_clutters_give_the_torus(gf4):
    torus = projective_torus(gf4, 3)
    assert clutter_set(gf4, singleton_clutter(3)) == torus
    assert clutter_set(gf4, clutter_validate(3, [(1, 2), (2, 3), (1, 3)])) == torus


def test_toric_set_is_a_group(gf4):
    x = clutter_set(gf4, complete_bipartite_clutter(2, 2))
    for a, b in itertools.product(x.points, repeat=2):
        assert x.contains(x.multiply(a.coords, b.coords).coords)


def test_exponent_vector_validation(gf3):
    with pytest.raises(PreconditionError):
        toric_set_from_exponents(gf3, [])
    with pytest.raises(PreconditionError):
        toric_set_from_exponents(gf3, [(1, 0), (1,)])
    with pytest.raises(PreconditionError):
        toric_set_from_exponents(gf3, [(1, 1)])
    with pytest.raises(CapExceededError):
        toric_set_from_exponents(gf3, [(1,) * 30, (0,) * 29 + (1,)])


def test_general_exponents(gf5):
    # (x^2, 1): squares in GF(5)* are {1, 4}
    x = toric_set_from_exponents(gf5, [(2,), (0,)])
    assert x.array.tolist() == [[1, 1], [4, 1]]


def test_load_clutter_roundtrip(k22_file, tmp_path):
    clutter = load_clutter(k22_file)
    assert clutter == complete_bipartite_clutter(2, 2)
    assert load_clutter(clutter.to_json()) == clutter
    missing = tmp_path / "missing.json"
    with pytest.raises(ClutterError):
        load_clutter(missing)
    with pytest.raises(ClutterError):
        load_clutter({"edges": [[1]]})


def test_to_json(gf3):
    x = ToricSet(gf3, 2, np.array([[2, 1], [1, 1], [2, 1]]))
    assert x.to_json() == {"q": 3, "s": 2, "points": [[1, 1], [2, 1]]}
