"""Candidate pairs (class of degree e, multiplicity vector) for special-fiber components.

On the plane the only effective class of degree e is e*H, with (e*H)^2 = e^2
and canonical degree K.(e*H) = -3e. A vector v over the base points is a
candidate for degree e when

  (a) v_p <= e for every p,
  (b) v_p >= sum of v_q over the points q proximate to p,
  (c) e^2 <= sum v_p^2,
  (d) the adjunction trichotomy (see :func:`satisfies_conditions`),
  (e) e*d == sum v_p * m_p, with m_p the generic multiplicities.

The search itself runs in a compiled kernel when available; set
``PENCIL_FIBERS_PURE=1`` to force the Python one.
"""

import os
from dataclasses import dataclass

from . import _enumerate_py

try:
    if os.environ.get("PENCIL_FIBERS_PURE"):
        raise ImportError("pure Python kernel requested")
    from . import _enumerate_ext as _kernel

    BACKEND = "cython"
except ImportError:
    _kernel = _enumerate_py
    BACKEND = "python"

KERNELS = {"python": _enumerate_py.enumerate_vectors}
if BACKEND == "cython":
    KERNELS["cython"] = _kernel.enumerate_vectors


@dataclass(frozen=True)
class PlaneClass:
    """The divisor class degree*H on the projective plane."""

    degree: int

    @property
    def self_intersection(self):
        return self.degree * self.degree

    @property
    def canonical_degree(self):
        return -3 * self.degree

    def dot(self, other):
        return self.degree * other.degree


@dataclass(frozen=True)
class Candidate:
    e: int
    values: tuple  # values[i] = v at cluster point i

    @property
    def v(self):
        return dict(enumerate(self.values))

    @property
    def cls(self):
        return PlaneClass(self.e)


def effective_classes(e):
    if e < 1:
        raise ValueError("degree must be positive")
    return [PlaneClass(e)]


def kernel_inputs(cluster):
    mults = [p.generic_mult for p in cluster.points]
    prox = [sorted(p.proximate_to) for p in cluster.points]
    return mults, prox


def enumerate_candidates(cluster, e, d, backend=None):
    """All candidates of degree e, lexicographic in the value vector."""
    if not 1 <= e:
        raise ValueError("e must be >= 1")
    kernel = KERNELS[backend] if backend else _kernel.enumerate_vectors
    mults, prox = kernel_inputs(cluster)
    out = []
    for cls in effective_classes(e):
        out.extend(Candidate(cls.degree, tuple(v)) for v in kernel(cls.degree, d, mults, prox))
    return out


def satisfies_conditions(values, e, d, cluster):
    """Direct check of (a)-(e); independent of the search kernel."""
    mults = cluster.multiplicities()
    if len(values) != len(mults) or any(x < 0 for x in values):
        return False
    if any(x > e for x in values):  # (a)
        return False
    if not cluster.satisfies_proximity(values):  # (b)
        return False
    L = PlaneClass(e)
    sq = sum(x * x for x in values)
    lin = sum(values)
    if L.self_intersection > sq:  # (c)
        return False
    kl = L.canonical_degree + lin
    genus_ok = L.self_intersection + L.canonical_degree + 2 >= sum(x * (x - 1) for x in values)
    d_ok = (
        (kl >= 0 and genus_ok)
        or (L.self_intersection == sq and kl == -2)
        or (kl == -1 and L.self_intersection - sq == -1)
    )
    if not d_ok:  # (d)
        return False
    return e * d == sum(x * m for x, m in zip(values, mults))  # (e)
