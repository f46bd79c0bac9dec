import pytest

from _helpers import K5, golden_pencil, pencil, poly
from pencil_fibers.base_points import (
    Pencil,
    common_points,
    generic_member_multiplicity,
    proper_base_points,
    resolve_base_locus,
)
from pencil_fibers.errors import (
    ExtensionRequired,
    FixedComponent,
    NonHomogeneous,
    ProportionalGenerators,
)
from pencil_fibers.field import QQ
from pencil_fibers.parsing import parse_polynomial
from pencil_fibers.poly import LOCAL_VARS


def local(text, field=QQ):
    return parse_polynomial(text, field, variables=LOCAL_VARS)


def test_lines():
    c = resolve_base_locus(pencil("X", "Y"))
    assert len(c) == 1
    assert c.point(0).projective == (QQ.zero, QQ.zero, QQ.one)
    assert c.multiplicities() == (1,)


def test_conics():
    c = resolve_base_locus(pencil("X*Y", "Z^2"))
    assert [p.level for p in c.points] == [0, 1, 0, 1]
    assert c.multiplicities() == (1, 1, 1, 1)
    proper = {p.projective for p in c.roots()}
    assert proper == {(QQ.zero, QQ.one, QQ.zero), (QQ.one, QQ.zero, QQ.zero)}


def test_golden_points(golden):
    c = golden.cluster
    assert len(c) == 9
    assert all(p.level == 0 for p in c.points)
    assert c.multiplicities() == (1,) * 9
    P = golden.pencil
    for p in c.points:
        assert P.F.evaluate(p.projective).is_zero()
        assert P.G.evaluate(p.projective).is_zero()


def test_golden_over_sqrt5_needs_extension():
    F = parse_polynomial("27*X^3-27*X^2*Y+9*X*Y^2-Y^3-8*X*Z^2+5*Y*Z^2", K5)
    G = parse_polynomial("X^3+6*X^2*Y+12*X*Y^2+8*Y^3-7*Y*Z^2", K5)
    with pytest.raises(ExtensionRequired) as info:
        resolve_base_locus(Pencil(K5, F, G))
    assert info.value.factor_str() == "t^2-18/49"


def test_fixed_component():
    with pytest.raises(FixedComponent):
        pencil("X^2", "X*Y")


def test_bad_generators():
    with pytest.raises(ProportionalGenerators):
        pencil("X + Y", "2*X + 2*Y")
    with pytest.raises(NonHomogeneous):
        pencil("X", "Y^2")
    with pytest.raises(NonHomogeneous):
        Pencil(QQ, poly("X^2 + Y"), poly("Y^2"))


def test_common_points_examples():
    assert common_points(local("x"), local("y")) == [(QQ.zero, QQ.zero)]
    r = K5.gen
    pts = common_points(local("x^2 - 5", K5), local("y", K5))
    assert set(pts) == {(r, K5.zero), (-r, K5.zero)}
    with pytest.raises(ExtensionRequired) as info:
        common_points(local("x^2 + 1"), local("y"))
    assert info.value.factor_str() == "t^2+1"


def test_points_at_infinity():
    pts = proper_base_points(poly("X*Y"), poly("Z^2"))
    assert [chart for _, chart, _ in pts] == ["Y", "X"]


def test_non_rational_point_at_infinity():
    with pytest.raises(ExtensionRequired):
        resolve_base_locus(pencil("X^2 + Y^2", "Z^2"))


@pytest.mark.parametrize(
    "members, m",
    [(["x", "y"], 1), (["x^2 - y", "x*y"], 1), (["x + y + x^2", "x + y + y^2"], 1), (["x^2", "y^3"], 2)],
)
def test_generic_member_multiplicity(members, m):
    assert generic_member_multiplicity([local(t) for t in members]) == m


def test_probe_seed_does_not_matter():
    P = pencil("Y^2*Z - X^3", "Y^3")
    assert resolve_base_locus(P, probe_seed=0) == resolve_base_locus(P, probe_seed=5)


def test_basis_change_gives_same_cluster():
    P = pencil("Y^2*Z - X^3", "Y^3")
    Q = Pencil(QQ, P.F + P.G, P.F - P.G)
    assert resolve_base_locus(P) == resolve_base_locus(Q)
