import pytest

from _helpers import golden_components, pencil, poly
from pencil_fibers.base_points import resolve_base_locus
from pencil_fibers.cluster import Cluster, ClusterPoint
from pencil_fibers.errors import DimensionNotZero
from pencil_fibers.field import QQ
from pencil_fibers.linear_systems import (
    ConditionBuilder,
    has_exceptional_part,
    impose_cluster_conditions,
    is_component,
    projective_dimension,
    unique_member,
)
from pencil_fibers.poly import canonical_form


def affine_cluster(*coords):
    pts = []
    for i, (a, b) in enumerate(coords):
        a, b = QQ(a), QQ(b)
        pts.append(ClusterPoint(i, 0, None, "Z", (a, b), projective=(a, b, QQ.one)))
    return Cluster(tuple(pts))


def test_double_point_on_conics():
    sys = impose_cluster_conditions(2, (2,), affine_cluster((0, 0)), QQ)
    assert sys.unknown_count == 6 and sys.rank == 3
    assert projective_dimension(sys) == 2


def test_no_conditions():
    sys = impose_cluster_conditions(1, (0,), affine_cluster((0, 0)), QQ)
    assert projective_dimension(sys) == 2


def test_full_rank_is_empty():
    sys = impose_cluster_conditions(1, (1, 1, 1), affine_cluster((0, 0), (1, 0), (0, 1)), QQ)
    assert projective_dimension(sys) == -1
    with pytest.raises(DimensionNotZero):
        unique_member(sys)


def test_line_through_two_points():
    p0 = ClusterPoint(0, 0, None, "Z", (QQ.zero, QQ.zero), projective=(QQ.zero, QQ.zero, QQ.one))
    p1 = ClusterPoint(1, 0, None, "Y", (QQ.zero, QQ.zero), projective=(QQ.zero, QQ.one, QQ.zero))
    sys = impose_cluster_conditions(1, (1, 1), Cluster((p0, p1)), QQ)
    assert projective_dimension(sys) == 0
    assert unique_member(sys) == poly("X")


def test_golden_all_ones_is_the_pencil(golden):
    c = golden.cluster
    field = golden.pencil.field
    sys = impose_cluster_conditions(3, (1,) * 9, c, field)
    # nine base points of a cubic pencil impose only eight conditions
    assert sys.rank == 8 and projective_dimension(sys) == 1
    for form in (golden.pencil.F, golden.pencil.G):
        vec = [form.coefficient(m) for m in sys.monomials]
        assert all(x.is_zero() for x in sys.conditions @ vec)


def _on(form, cluster):
    return tuple(1 if form.evaluate(p.projective).is_zero() else 0 for p in cluster.points)


def test_golden_unique_members(golden):
    c = golden.cluster
    comps = golden_components()
    builder1 = ConditionBuilder(c, 1, golden.pencil.field)
    builder2 = ConditionBuilder(c, 2, golden.pencil.field)
    L1, C3 = comps["L1"], comps["C3"]
    v1 = _on(L1, c)
    assert sum(v1) == 3
    assert unique_member(builder1.impose(v1)) == L1
    v3 = _on(C3, c)
    assert sum(v3) == 6
    assert unique_member(builder2.impose(v3)) == C3


def test_exceptional_part_examples():
    c = affine_cluster((0, 0), (1, 0), (2, 0), (0, 1), (0, 2))
    # three collinear points force the conic to split with a node at (0, 0)
    sys = impose_cluster_conditions(2, (1,) * 5, c, QQ)
    conic = unique_member(sys)
    assert conic == canonical_form(poly("X*Y"))
    assert has_exceptional_part(conic, (1,) * 5, c)
    line_c = affine_cluster((0, 0), (1, 1))
    assert not has_exceptional_part(poly("X - Y"), (1, 1), line_c)


def test_exceptional_part_on_conic_pencil():
    c = resolve_base_locus(pencil("X*Y", "Z^2"))
    # Z meets both proper points but neither infinitely near one
    assert c.actual_multiplicities(poly("Z")) == (1, 0, 1, 0)
    assert has_exceptional_part(poly("Z"), (1, 1, 1, 1), c)
    assert has_exceptional_part(poly("Z"), (0, 1, 0, 1), c)
    assert not has_exceptional_part(poly("Z"), (1, 0, 1, 0), c)
    assert not has_exceptional_part(poly("Y"), (0, 0, 1, 1), c)


def test_is_component_examples():
    assert is_component(poly("X"), poly("X*Y"))
    assert not is_component(poly("X"), poly("X^2 + Y*Z"))
    P = pencil("27*X^3-27*X^2*Y+9*X*Y^2-Y^3-8*X*Z^2+5*Y*Z^2", "X^3+6*X^2*Y+12*X*Y^2+8*Y^3-7*Y*Z^2")
    assert is_component(poly("2*X - 3*Y"), P.F - P.G)


def test_builder_matches_fresh_system(golden):
    c = golden.cluster
    builder = ConditionBuilder(c, 2, golden.pencil.field)
    v = (1, 1, 0, 1, 0, 1, 1, 0, 1)
    a = builder.impose(v)
    b = impose_cluster_conditions(2, v, c, golden.pencil.field)
    assert a.rank == b.rank and a.solve()[1] == b.solve()[1]
