"""Base points of a pencil of plane curves, proper and infinitely near."""

from dataclasses import dataclass
from itertools import count

from . import univariate as U
from .cluster import Cluster, ClusterPoint, satellite_detect
from .errors import (
    ExtensionRequired,
    FixedComponent,
    InvariantViolation,
    NonHomogeneous,
    NonTermination,
    ProportionalGenerators,
)
from .poly import PLANE_VARS, MultiPoly, blowup_transform, canonical_form, multiplicity_at_origin


@dataclass(frozen=True)
class Pencil:
    """The pencil spanned by two plane forms F, G of equal degree."""

    field: object
    F: MultiPoly
    G: MultiPoly

    def __post_init__(self):
        for name, form in (("F", self.F), ("G", self.G)):
            if form.variables != PLANE_VARS:
                raise ValueError(f"{name} must be a form in X, Y, Z")
            if form.is_zero():
                raise ProportionalGenerators(f"{name} is the zero polynomial")
            if not form.is_homogeneous():
                raise NonHomogeneous(f"{name} is not homogeneous")
        if self.F.total_degree() != self.G.total_degree():
            raise NonHomogeneous("F and G must have the same degree")
        if self.F.total_degree() < 1:
            raise NonHomogeneous("the pencil must have degree at least 1")
        if canonical_form(self.F) == canonical_form(self.G):
            raise ProportionalGenerators("F and G are proportional")
        if have_common_factor(self.F, self.G):
            raise FixedComponent("F and G have a common factor: the pencil has a fixed component")

    @property
    def degree(self):
        return self.F.total_degree()

    def member(self, lam, mu):
        return self.F * lam + self.G * mu


def substitute_linear(form, images):
    """form(images[0], images[1], ...) for polynomial images."""
    var_powers = []
    for k, img in enumerate(images):
        top = form.degree_in(k)
        pw = [MultiPoly.constant(img.field, img.variables, 1)]
        for _ in range(top):
            pw.append(pw[-1] * img)
        var_powers.append(pw)
    acc = MultiPoly(images[0].field, images[0].variables)
    for e, c in form.terms.items():
        t = MultiPoly.constant(form.field, images[0].variables, c)
        for k, ek in enumerate(e):
            if ek:
                t = t * var_powers[k][ek]
        acc = acc + t
    return acc


def _coeffs_in(form, var, fixed):
    """Univariate coefficients in variable ``var`` after substituting ``fixed`` (index -> value) for the others."""
    field = form.field
    out = {}
    for e, c in form.terms.items():
        val = c
        for k, v in fixed.items():
            if e[k]:
                val = val * v ** e[k]
        out[e[var]] = out.get(e[var], field.zero) + val
    top = max(out, default=-1)
    return U.trim(tuple(out.get(k, field.zero) for k in range(top + 1)))


def have_common_factor(F, G):
    """True when the plane forms F and G share a factor of positive degree.

    F is sheared so that its Y^d coefficient is a nonzero constant; every
    factor of F then involves Y, and a common factor exists iff the binary
    form Res_Y(F, G)(X, Z) vanishes identically, i.e. at d^2 + 1 points of Z = 1.
    """
    field = F.field
    d = F.total_degree()
    shear = None
    for t, s in _grid():
        if F.evaluate((field(t), field.one, field(s))):
            shear = (t, s)
            break
    t, s = shear
    X, Y, Z = (MultiPoly.variable(field, PLANE_VARS, k) for k in range(3))
    images = (X + Y * t, Y, Z + Y * s)
    Fs, Gs = substitute_linear(F, images), substitute_linear(G, images)
    for a in range(d * d + 1):
        fixed = {0: field(a), 2: field.one}
        fu, gu = _coeffs_in(Fs, 1, fixed), _coeffs_in(Gs, 1, fixed)
        if not gu:
            continue
        if U.sylvester_resultant(fu, gu, d, d):
            return False
    return True


def _grid():
    for n in count():
        for t in range(n + 1):
            yield t, n - t


def common_points(f, g):
    """Common zeros of two local bivariate polynomials with coordinates in K.

    Raises ExtensionRequired when some common zero is not K-rational. The
    variable x is first replaced by x + t*y with t chosen so that f has a
    constant leading coefficient in y; the resultant in y then vanishes
    exactly at the x-coordinates of common zeros.
    """
    field = f.field
    if f.is_zero() or g.is_zero():
        raise ValueError("common_points needs nonzero polynomials")
    n = f.total_degree()
    if n == 0 or g.total_degree() == 0:
        return []
    top = f.homogeneous_part(n)
    t = next(t for t in count() if top.evaluate((field(t), field.one)))
    x, y = (MultiPoly.variable(field, f.variables, k) for k in range(2))
    images = (x + y * t, y)
    fs, gs = substitute_linear(f, images), substitute_linear(g, images)
    m = gs.degree_in(1)
    bound = n * g.total_degree()
    xs = [field(a) for a in range(bound + 1)]
    ys = [
        U.sylvester_resultant(_coeffs_in(fs, 1, {0: a}), _coeffs_in(gs, 1, {0: a}), n, m)
        for a in xs
    ]
    if not any(ys):
        raise FixedComponent("local equations share a component")
    res = U.interpolate(xs, ys)
    roots, rest = U.split_rational(res)
    if rest:
        raise ExtensionRequired(rest[0][0], where=" (x-coordinate of an affine base point)")
    points = []
    for a, _ in roots:
        fa, ga = _coeffs_in(fs, 1, {0: a}), _coeffs_in(gs, 1, {0: a})
        h = U.gcd(fa, ga)
        b_roots, b_rest = U.split_rational(h)
        if b_rest:
            raise ExtensionRequired(b_rest[0][0], where=" (y-coordinate of an affine base point)")
        for b, _ in b_roots:
            points.append((a + b * t, b))
    points.sort(key=lambda p: (p[0].sort_key(), p[1].sort_key()))
    return points


def proper_base_points(F, G):
    """Base points in P^2 as (projective coords, chart, affine coords in chart)."""
    field = F.field
    one, zero = field.one, field.zero
    found = []
    for a, b in common_points(F.dehomogenize("Z"), G.dehomogenize("Z")):
        found.append(((a, b, one), "Z", (a, b)))
    # line Z = 0 away from (1:0:0): points (x : 1 : 0)
    fu = _coeffs_in(F, 0, {1: one, 2: zero})
    gu = _coeffs_in(G, 0, {1: one, 2: zero})
    if not fu and not gu:
        raise FixedComponent("Z divides both generators")
    h = U.gcd(fu, gu)
    roots, rest = U.split_rational(h) if len(h) > 1 else ([], [])
    if rest:
        raise ExtensionRequired(rest[0][0], where=" (base point (t:1:0) on the line Z=0)")
    for r, _ in roots:
        found.append(((r, one, zero), "Y", (r, zero)))
    p = (one, zero, zero)
    if F.evaluate(p).is_zero() and G.evaluate(p).is_zero():
        found.append((p, "X", (zero, zero)))
    return found


def generic_member_multiplicity(members, probe_seed=0):
    """Multiplicity at the origin shared by all but finitely many members.

    Two members f, g span the local pencil. mult(l*f + m*g) >= min(mult f,
    mult g), with equality except for the single ratio (if any) at which the
    lowest forms cancel, so the minimum over the probes (1:0), (0:1),
    (1 : 1 + probe_seed) and any further members is the generic value.
    """
    if len(members) < 2:
        raise ValueError("need at least two members of the pencil")
    f, g = members[0], members[1]
    probes = [f, g, f + g * (1 + probe_seed)]
    probes.extend(members[2:])
    return min(multiplicity_at_origin(p) for p in probes if not p.is_zero())


def base_directions(f, g, m):
    """Common tangent directions of the pencil at the origin, as blow-up (chart, param)."""
    field = f.field
    pf = U.trim(f.binary_form_coefficients(m))
    pg = U.trim(g.binary_form_coefficients(m))
    h = U.gcd(pf, pg)
    if not h:
        raise InvariantViolation("both lowest forms vanish: multiplicity was not minimal")
    roots, rest = U.split_rational(h) if len(h) > 1 else ([], [])
    if rest:
        raise ExtensionRequired(rest[0][0], where=" (tangent direction (1:t) of an infinitely near base point)")
    dirs = [("x", c) for c, _ in roots]
    if len(pf) <= m and len(pg) <= m:
        dirs.append(("y", field.zero))
    return dirs


def resolve_base_locus(pencil, probe_seed=0):
    """The cluster BP of the pencil with generic multiplicities.

    Points are numbered depth first: each proper point (in chart order Z, Y,
    X, then by coordinates) followed by the points infinitely near to it.
    """
    F, G = pencil.F, pencil.G
    d = pencil.degree
    guard = 4 * d * d
    points = []

    def grow(f, g, parent, chart, center, level, projective=None):
        if level > guard:
            raise NonTermination(f"resolution exceeded {guard} levels")
        m = generic_member_multiplicity([f, g], probe_seed)
        if m == 0:
            raise InvariantViolation("blew up a point that is not a base point")
        if parent is None:
            prox, y_line = frozenset(), None
        else:
            prox, y_line = satellite_detect(parent, chart, center[0])
        pt = ClusterPoint(
            id=len(points),
            level=level,
            parent=None if parent is None else parent.id,
            chart=chart,
            center=center,
            proximate_to=prox,
            generic_mult=m,
            y_line=y_line,
            projective=projective,
        )
        points.append(pt)
        for ch, c in base_directions(f, g, m):
            grow(blowup_transform(f, ch, c, m), blowup_transform(g, ch, c, m), pt, ch, (c,), level + 1)

    for proj, chart, affine in proper_base_points(F, G):
        f = F.dehomogenize(chart).translate(affine)
        g = G.dehomogenize(chart).translate(affine)
        grow(f, g, None, chart, affine, 0, proj)

    cluster = Cluster(tuple(points))
    check_cluster(cluster, pencil)
    return cluster


def check_cluster(cluster, pencil):
    """Self-checks of a resolved base locus; raises InvariantViolation."""
    d = pencil.degree
    mults = cluster.multiplicities()
    total = sum(m * m for m in mults)
    if total != d * d:
        raise InvariantViolation(f"sum of squared multiplicities {total} != d^2 = {d * d}")
    if not cluster.satisfies_proximity(mults):
        raise InvariantViolation("generic multiplicities violate the proximity inequalities")
    mf = cluster.actual_multiplicities(pencil.F)
    mg = cluster.actual_multiplicities(pencil.G)
    inter = sum(a * b for a, b in zip(mf, mg))
    if inter != d * d:
        raise InvariantViolation(f"intersection number of F and G along the cluster is {inter}, expected {d * d}")
