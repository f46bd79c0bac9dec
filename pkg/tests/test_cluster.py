import pytest

from _helpers import pencil
from pencil_fibers.base_points import resolve_base_locus
from pencil_fibers.cluster import Cluster, ClusterPoint, satellite_detect
from pencil_fibers.errors import UnknownPoint
from pencil_fibers.field import QQ

Z0 = QQ.zero


@pytest.fixture(scope="module")
def conics():
    return resolve_base_locus(pencil("X*Y", "Z^2"))


@pytest.fixture(scope="module")
def cusp():
    return resolve_base_locus(pencil("Y^2*Z - X^3", "Y^3"))


def test_frame_of_proper_point_is_empty(conics):
    assert conics.frame_to(0) == []


def test_frame_over_one_zero_zero(conics):
    # point 2 is (1:0:0); its child is one blow-up away
    assert conics.point(2).projective == (QQ.one, Z0, Z0)
    assert conics.frame_to(3) == [("y", Z0)]


def test_tacnode_chain():
    c = resolve_base_locus(pencil("Y*Z - X^2", "Y^2"))
    assert len(c) == 4
    assert c.frame_to(3) == [("x", Z0), ("x", QQ.one), ("x", Z0)]
    assert all(len(p.proximate_to) <= 1 for p in c.points)


def test_spec_tacnode_pencil_has_only_level_one_points():
    c = resolve_base_locus(pencil("Y*Z - X^2", "Y*Z"))
    assert [p.level for p in c.points] == [0, 1, 0, 1]


def test_cusp_satellite(cusp):
    assert [p.generic_mult for p in cusp.points] == [2, 1, 1, 1, 1, 1]
    assert cusp.point(1).proximate_to == {0}
    assert cusp.point(2).proximate_to == {0, 1}
    assert cusp.point(2).is_satellite()
    assert cusp.proximate_points(0) == [1, 2]
    assert cusp.proximity_excess(cusp.multiplicities()) == [0, 0, 0, 0, 0, 1]


def test_satellite_detect_free_and_corner():
    root = ClusterPoint(0, 0, None, "Z", (Z0, Z0))
    p1 = ClusterPoint(1, 1, 0, "x", (Z0,), frozenset({0}), y_line=None)
    # free point: a nonzero center on E1
    assert satellite_detect(p1, "x", QQ(3)) == (frozenset({1}), None)
    # the corner E1 meets the strict transform of E0
    prox, y_line = satellite_detect(p1, "y", Z0)
    assert prox == {0, 1} and y_line == 0
    assert satellite_detect(root, "x", QQ(2))[0] == {0}


def test_proximity_matrix(cusp):
    m = cusp.proximity_matrix()
    assert m[0][1] == -1 and m[0][2] == -1 and m[1][2] == -1
    assert all(m[i][i] == 1 for i in range(len(cusp)))


def test_actual_multiplicities_of_members(cusp):
    F = pencil("Y^2*Z - X^3", "Y^3").F
    assert cusp.actual_multiplicities(F) == (2, 1, 1, 1, 1, 1)
    G = pencil("Y^2*Z - X^3", "Y^3").G
    assert cusp.actual_multiplicities(G) == (3, 3, 0, 0, 0, 0)


def test_unknown_point(conics):
    with pytest.raises(UnknownPoint):
        conics.point(17)


def test_structure_validation():
    root = ClusterPoint(0, 0, None, "Z", (Z0, Z0))
    with pytest.raises(ValueError):
        Cluster((root, ClusterPoint(1, 2, 0, "x", (Z0,), frozenset({0}))))
    with pytest.raises(ValueError):
        Cluster((root, ClusterPoint(1, 1, 0, "x", (Z0,), frozenset())))


def test_json(conics):
    doc = conics.to_json()
    assert doc[0] == {"id": 0, "level": 0, "parent": None, "proximate_to": [], "chart": "Y",
                      "center": ["0", "1", "0"], "mult": 1}
    assert doc[3]["proximate_to"] == [2] and doc[3]["center"] == "0"
