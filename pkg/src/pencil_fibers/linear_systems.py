"""Linear systems of plane curves of degree e through a weighted cluster."""

from dataclasses import dataclass, field as dc_field

from .errors import DimensionNotZero
from .linalg import KMatrix, rank_and_kernel
from .poly import PLANE_VARS, LinCoeffPoly, MultiPoly, canonical_form, divide_exact


@dataclass
class ConditionSystem:
    e: int
    unknown_count: int
    conditions: KMatrix
    monomials: list
    field: object
    _solved: tuple = dc_field(default=None, repr=False, compare=False)

    def solve(self):
        if self._solved is None:
            self._solved = rank_and_kernel(self.conditions, self.field)
        return self._solved

    @property
    def rank(self):
        return self.solve()[0]

    @property
    def projective_dimension(self):
        return self.unknown_count - self.rank - 1


class ConditionBuilder:
    """Imposes virtual multiplicities on the generic form of degree ``e``.

    Transports of the generic form only depend on the point and on the values
    prescribed at its ancestors, so they are cached across candidates.
    """

    def __init__(self, cluster, e, field):
        self.cluster = cluster
        self.e = e
        self.field = field
        self.generic, self.monomials = LinCoeffPoly.generic_form(field, e)
        self.unknown_count = len(self.monomials)
        self._local = {}
        self._rows = {}

    def local(self, pid, path_values):
        """(virtual transform at pid, division conditions met on the way)."""
        key = (pid, path_values)
        hit = self._local.get(key)
        if hit is not None:
            return hit
        p = self.cluster.point(pid)
        if p.parent is None:
            f = self.generic.dehomogenize(p.chart).translate(p.center)
            hit = (f, ())
        else:
            parent_f, parent_conds = self.local(p.parent, path_values[:-1])
            f, dropped = parent_f.blowup(p.chart, p.center[0], path_values[-1])
            hit = (f, parent_conds + tuple(dropped))
        self._local[key] = hit
        return hit

    def point_rows(self, pid, values):
        path = tuple(values[a.id] for a in self.cluster.ancestors(pid)[:-1])
        key = (pid, path, values[pid])
        rows = self._rows.get(key)
        if rows is None:
            f, conds = self.local(pid, path)
            rows = tuple(c.v for c in conds) + tuple(c.v for c in f.conditions_below(values[pid]))
            self._rows[key] = rows
        return rows

    def impose(self, values):
        rows = []
        seen = set()
        for p in self.cluster.points:
            if values[p.id] > 0:
                for r in self.point_rows(p.id, values):
                    if r not in seen:
                        seen.add(r)
                        rows.append(r)
        matrix = KMatrix.from_rows(rows, self.unknown_count)
        return ConditionSystem(self.e, self.unknown_count, matrix, self.monomials, self.field)


def impose_cluster_conditions(e, candidate, cluster, field=None, builder=None):
    """The system of degree-e forms with virtual multiplicities ``candidate`` along ``cluster``."""
    values = candidate.values if hasattr(candidate, "values") else tuple(candidate)
    if builder is None:
        if field is None:
            field = _cluster_field(cluster)
        builder = ConditionBuilder(cluster, e, field)
    return builder.impose(values)


def _cluster_field(cluster):
    for p in cluster.points:
        for c in p.center:
            return c.field
    raise ValueError("cannot infer the field of an empty cluster; pass field=")


def projective_dimension(system):
    return system.projective_dimension


def unique_member(system):
    """The single curve of a system of projective dimension 0, canonically scaled."""
    if system.projective_dimension != 0:
        raise DimensionNotZero(f"system has projective dimension {system.projective_dimension}")
    _, kernel = system.solve()
    (vec,) = kernel
    terms = dict(zip(system.monomials, vec))
    return canonical_form(MultiPoly(system.field, PLANE_VARS, terms))


def has_exceptional_part(curve, candidate, cluster):
    """True when the member of |eH - sum v_p E_p*| defined by ``curve`` contains exceptional curves.

    That member is the strict transform plus sum (m_p(C) - v_p) E_p*, so it
    has no exceptional part exactly when the actual multiplicities equal v.
    """
    values = candidate.values if hasattr(candidate, "values") else tuple(candidate)
    return cluster.actual_multiplicities(curve) != tuple(values)


def is_component(q, c):
    return divide_exact(c, q) is not None
