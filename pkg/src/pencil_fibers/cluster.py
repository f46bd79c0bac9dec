"""Clusters of (possibly infinitely near) points of the projective plane.

Local frame convention. A level-0 point lives in the first standard affine
chart (Z, then Y, then X) where it is finite, with local coordinates
translated so that the point is the origin. Blowing up a point is done in
one of two charts:

* ``'x'`` with parameter c: (x, y) -> (x, x*(y + c)), the point in direction
  (1 : c) of the exceptional line;
* ``'y'`` (parameter always 0): swap x and y, then (x, y) -> (x, x*y); this
  is the single direction (0 : 1) not visible in the first chart.

In both charts the new exceptional line is {x = 0}. The only other
exceptional curve that can pass through a point is then {y = 0}, recorded as
``y_line``; this is what makes satellite points visible.
"""

from dataclasses import dataclass, field as dc_field

from .errors import UnknownPoint
from .poly import blowup_transform, multiplicity_at_origin


@dataclass(frozen=True)
class ClusterPoint:
    id: int
    level: int
    parent: int | None
    chart: str
    center: tuple
    proximate_to: frozenset = frozenset()
    generic_mult: int = 1
    y_line: int | None = None
    projective: tuple | None = None

    @property
    def center_param(self):
        if self.level == 0:
            raise ValueError("level-0 points have affine coordinates, not a center parameter")
        return self.center[0]

    def is_satellite(self):
        return len(self.proximate_to) > 1


def satellite_detect(parent, chart, center):
    """Proximity set and ``y_line`` of a new point on the exceptional line of ``parent``."""
    prox = {parent.id}
    if chart == "y":
        # {y = 0} at the new point is the strict transform of {x = 0} at the parent
        y_line = parent.parent
    elif center.is_zero():
        y_line = parent.y_line
    else:
        y_line = None
    if y_line is not None:
        prox.add(y_line)
    return frozenset(prox), y_line


@dataclass(frozen=True)
class Cluster:
    points: tuple = ()
    _children: dict = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        children = {p.id: [] for p in self.points}
        for pos, p in enumerate(self.points):
            if p.id != pos:
                raise ValueError("cluster point ids must be 0..n-1 in order")
            if p.parent is not None:
                if p.parent >= p.id:
                    raise ValueError("parents must precede their children")
                if self.points[p.parent].level + 1 != p.level:
                    raise ValueError("level(child) must be level(parent) + 1")
                if p.parent not in p.proximate_to or len(p.proximate_to) > 2:
                    raise ValueError(f"bad proximity set for point {p.id}")
                children[p.parent].append(p.id)
            elif p.level != 0:
                raise ValueError("points without parent must have level 0")
        object.__setattr__(self, "_children", children)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, pid):
        return self.point(pid)

    def point(self, pid):
        if not isinstance(pid, int) or not 0 <= pid < len(self.points):
            raise UnknownPoint(pid)
        return self.points[pid]

    def children(self, pid):
        self.point(pid)
        return list(self._children[pid])

    def roots(self):
        return [p for p in self.points if p.level == 0]

    def ancestors(self, pid):
        """Path from the level-0 ancestor down to ``pid`` (inclusive)."""
        path = [self.point(pid)]
        while path[-1].parent is not None:
            path.append(self.points[path[-1].parent])
        return path[::-1]

    def frame_to(self, pid):
        """Blow-up steps (chart, center_param) leading from the root chart to ``pid``."""
        return [(p.chart, p.center[0]) for p in self.ancestors(pid)[1:]]

    def proximate_points(self, pid):
        """Points proximate to ``pid``."""
        self.point(pid)
        return [q.id for q in self.points if pid in q.proximate_to]

    def multiplicities(self):
        return tuple(p.generic_mult for p in self.points)

    def proximity_matrix(self):
        """Square matrix with 1 on the diagonal and -1 at (p, q) when q is proximate to p."""
        n = len(self.points)
        mat = [[0] * n for _ in range(n)]
        for q in self.points:
            mat[q.id][q.id] = 1
            for p in q.proximate_to:
                mat[p][q.id] = -1
        return mat

    def proximity_excess(self, values):
        """values[p] - sum(values[q] for q proximate to p), for every p."""
        out = list(values)
        for q in self.points:
            for p in q.proximate_to:
                out[p] -= values[q.id]
        return out

    def satisfies_proximity(self, values):
        return all(x >= 0 for x in self.proximity_excess(values))

    def root_local(self, form, root):
        """Local equation of a plane form at a level-0 point."""
        return form.dehomogenize(root.chart).translate(root.center)

    def local_equation(self, form, pid, drops):
        """Transport ``form`` to local coordinates at ``pid``.

        ``drops`` maps ancestor ids to the power of the exceptional divisor
        removed at each blow-up: the multiplicities for strict transforms,
        prescribed values for virtual ones.
        """
        path = self.ancestors(pid)
        f = self.root_local(form, path[0])
        for prev, cur in zip(path, path[1:]):
            f = blowup_transform(f, cur.chart, cur.center[0], drops[prev.id])
        return f

    def actual_multiplicities(self, form):
        """Multiplicities of the successive strict transforms of ``form`` at every point."""
        mults = [0] * len(self.points)
        local = {}
        for p in self.points:
            if p.parent is None:
                f = self.root_local(form, p)
            else:
                f = blowup_transform(local[p.parent], p.chart, p.center[0], mults[p.parent])
            local[p.id] = f
            mults[p.id] = multiplicity_at_origin(f)
        return tuple(mults)

    def to_json(self, symbol=None):
        out = []
        for p in self.points:
            if p.level == 0:
                center = [c.to_str(symbol) for c in p.projective]
            else:
                center = p.center[0].to_str(symbol)
            out.append(
                {
                    "id": p.id,
                    "level": p.level,
                    "parent": p.parent,
                    "proximate_to": sorted(p.proximate_to),
                    "chart": p.chart,
                    "center": center,
                    "mult": p.generic_mult,
                }
            )
        return out
