"""Components of the special fibers of a pencil, and their grouping into fibers."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .base_points import resolve_base_locus
from .enumerator import enumerate_candidates
from .errors import AmbiguousFiber, NoFiberFound
from .linalg import rank_and_kernel
from .linear_systems import ConditionBuilder, has_exceptional_part, is_component, unique_member
from .poly import canonical_form, divide_exact, divide_with_remainder, exact_power_division

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveComponent:
    id: int
    form: object
    degree: int
    actual_mults: tuple
    candidate: object


@dataclass(frozen=True)
class Fiber:
    lambda_mu: tuple
    factorization: tuple  # ((component id, exponent), ...)
    member_form: object
    scalar: object  # member_form == scalar * prod(component^exponent)


@dataclass
class DegreeSummary:
    e: int
    candidates: int = 0
    dimension_zero: int = 0
    no_exceptional_part: int = 0
    accepted: int = 0
    dump: list = dc_field(default_factory=list)


# --- candidate checks (run in workers) ----------------------------------------

_worker_state = {}


def _init_worker(cluster, field):
    _worker_state.clear()
    _worker_state["cluster"] = cluster
    _worker_state["field"] = field
    _worker_state["builders"] = {}


def _check_candidate(task):
    """Filters (1) and (2) for one candidate: returns (status, form or None)."""
    e, values = task
    cluster = _worker_state["cluster"]
    builders = _worker_state["builders"]
    builder = builders.get(e)
    if builder is None:
        builder = builders[e] = ConditionBuilder(cluster, e, _worker_state["field"])
    system = builder.impose(values)
    if system.projective_dimension != 0:
        return ("dimension", system.projective_dimension, None)
    curve = unique_member(system)
    if has_exceptional_part(curve, values, cluster):
        return ("exceptional", 0, curve)
    return ("ok", 0, curve)


def special_fiber_components(pencil, cluster=None, max_degree=None, workers=1, probe_seed=0,
                             summaries=None, dump_candidates=False):
    """Integral components of the special fibers, ordered by (degree, canonical form)."""
    if cluster is None:
        cluster = resolve_base_locus(pencil, probe_seed=probe_seed)
    d = pencil.degree
    top = d if max_degree is None else max_degree
    found = []  # (form, degree, candidate)
    pool = None
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                   initargs=(cluster, pencil.field))
    else:
        _init_worker(cluster, pencil.field)
    try:
        for e in range(1, top + 1):
            cands = enumerate_candidates(cluster, e, d)
            summary = DegreeSummary(e, len(cands))
            if dump_candidates:
                summary.dump = [c.values for c in cands]
            tasks = [(e, c.values) for c in cands]
            if pool is not None:
                results = list(pool.map(_check_candidate, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
            else:
                results = [_check_candidate(t) for t in tasks]
            earlier = [form for form, deg, _ in found if deg < e]
            current = {}
            for cand, (status, _, curve) in zip(cands, results):
                if status == "dimension":
                    continue
                summary.dimension_zero += 1
                if status == "exceptional":
                    continue
                summary.no_exceptional_part += 1
                if any(is_component(q, curve) for q in earlier):
                    continue
                key = curve.sort_key()
                if key not in current:
                    current[key] = (curve, e, cand)
            summary.accepted = len(current)
            log.info("degree %d: %d candidates, %d of dimension 0, %d accepted",
                     e, summary.candidates, summary.dimension_zero, summary.accepted)
            found.extend(current[k] for k in sorted(current))
            if summaries is not None:
                summaries.append(summary)
    finally:
        if pool is not None:
            pool.shutdown()
    found.sort(key=lambda t: (t[1], t[0].sort_key()))
    return [
        CurveComponent(i, form, deg, cluster.actual_multiplicities(form), cand)
        for i, (form, deg, cand) in enumerate(found)
    ]


# --- fibers --------------------------------------------------------------------

def normalize_pair(lam, mu):
    """Scale (lam : mu) so that its first nonzero coordinate is 1."""
    s = lam if not lam.is_zero() else mu
    inv = s.inverse()
    return (lam * inv, mu * inv)


def fiber_parameter(form, pencil):
    """The unique (lam : mu) with form | lam*F + mu*G."""
    _, rf = divide_with_remainder(pencil.F, form)
    _, rg = divide_with_remainder(pencil.G, form)
    field = pencil.field
    mons = sorted(set(rf.terms) | set(rg.terms), reverse=True)
    rows = [[rf.coefficient(m), rg.coefficient(m)] for m in mons]
    if not rows:
        raise AmbiguousFiber(f"{form} divides every member of the pencil")
    _, kernel = rank_and_kernel(rows, field)
    if not kernel:
        raise NoFiberFound(f"{form} divides no member of the pencil")
    if len(kernel) > 1:
        raise AmbiguousFiber(f"{form} divides every member of the pencil")
    return normalize_pair(*kernel[0])


def group_into_fibers(components, pencil):
    groups = {}
    order = []
    for comp in components:
        lm = fiber_parameter(comp.form, pencil)
        key = (lm[0].sort_key(), lm[1].sort_key())
        if key not in groups:
            groups[key] = (lm, [])
            order.append(key)
        groups[key][1].append(comp)
    fibers = []
    for key in order:
        lm, comps = groups[key]
        member = pencil.member(*lm)
        rest = member
        fact = []
        for comp in comps:
            k, rest = exact_power_division(rest, comp.form)
            if k == 0:
                raise NoFiberFound(f"component {comp.id} does not divide its fiber")
            fact.append((comp.id, k))
        if rest.total_degree() != 0:
            raise NoFiberFound(f"fiber {lm} has a residual factor of degree {rest.total_degree()} not among the components")
        scalar = rest.coefficient((0, 0, 0))
        fibers.append(Fiber(lm, tuple(fact), member, scalar))
    return fibers


# --- verification ----------------------------------------------------------------

@dataclass
class VerificationEntry:
    kind: str
    index: int
    passed: bool
    diagnostics: list = dc_field(default_factory=list)


@dataclass
class VerificationReport:
    entries: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]

    def to_json(self):
        return {
            "passed": self.passed,
            "entries": [
                {"kind": e.kind, "index": e.index, "passed": e.passed, "diagnostics": list(e.diagnostics)}
                for e in self.entries
            ],
        }


def verify_output(fibers, pencil, components=(), cluster=None):
    """Independent re-check of fibers and component invariants."""
    report = VerificationReport()
    by_id = {c.id: c for c in components}
    d = pencil.degree
    for i, fib in enumerate(fibers):
        diags = []
        member = pencil.member(*fib.lambda_mu)
        prod = None
        for cid, k in fib.factorization:
            form = by_id[cid].form if cid in by_id else None
            if form is None:
                diags.append(f"unknown component {cid}")
                continue
            term = form ** k
            prod = term if prod is None else prod * term
        if prod is None:
            diags.append("empty factorization")
        else:
            q = divide_exact(member, prod)
            if q is None:
                diags.append("product of the components does not divide the member")
            elif q.total_degree() != 0:
                diags.append(f"residual factor of degree {q.total_degree()}")
            elif canonical_form(member) != canonical_form(prod):
                diags.append("member differs from the product")
        report.entries.append(VerificationEntry("fiber", i, not diags, diags))

    membership = {}
    for i, fib in enumerate(fibers):
        for cid, _ in fib.factorization:
            membership.setdefault(cid, []).append(i)
    mults = cluster.multiplicities() if cluster is not None else None
    for comp in components:
        diags = []
        if cluster is not None:
            actual = cluster.actual_multiplicities(comp.form)
            if actual != comp.actual_mults:
                diags.append("stored multiplicities differ from recomputed ones")
            dot = sum(a * m for a, m in zip(actual, mults))
            if dot != comp.degree * d:
                diags.append(f"G.C = {comp.degree * d} - {dot} != 0")
            if comp.degree ** 2 > sum(a * a for a in actual):
                diags.append("strict transform has positive self-intersection")
            if not cluster.satisfies_proximity(actual):
                diags.append("multiplicities violate the proximity inequalities")
        n_fib = len(membership.get(comp.id, []))
        if fibers and n_fib != 1:
            diags.append(f"component lies in {n_fib} fibers")
        for other in components:
            if other.degree < comp.degree and is_component(other.form, comp.form):
                diags.append(f"component {other.id} divides it")
        report.entries.append(VerificationEntry("component", comp.id, not diags, diags))
    return report


@dataclass
class PencilResult:
    pencil: object
    cluster: object
    components: list
    fibers: list
    summaries: list
    verification: VerificationReport | None


def compute(pencil, max_degree=None, workers=1, probe_seed=0, verify=True, dump_candidates=False):
    """Base points, components, fibers and verification in one call."""
    cluster = resolve_base_locus(pencil, probe_seed=probe_seed)
    summaries = []
    comps = special_fiber_components(pencil, cluster, max_degree=max_degree, workers=workers,
                                     probe_seed=probe_seed, summaries=summaries,
                                     dump_candidates=dump_candidates)
    fibers = group_into_fibers(comps, pencil) if verify else []
    report = verify_output(fibers, pencil, comps, cluster) if verify else None
    return PencilResult(pencil, cluster, comps, fibers, summaries, report)
