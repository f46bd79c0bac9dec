"""Acceptance criteria, one test per criterion; each prints a PASS/FAIL line."""

import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from _helpers import (
    K5,
    CUBIC_F,
    CUBIC_FIBERS,
    CUBIC_G,
    derivative_interpolation_matrix,
    fraction_rank,
    golden_components,
    golden_pencil,
    ka_elem,
    pencil,
    poly,
    proportional,
)
from pencil_fibers.base_points import Pencil
from pencil_fibers.cli import EXIT_OK, run
from pencil_fibers.cluster import Cluster, ClusterPoint
from pencil_fibers.driver import compute
from pencil_fibers.errors import ExtensionRequired, FixedComponent, InputError
from pencil_fibers.field import QQ
from pencil_fibers.linear_systems import impose_cluster_conditions
from pencil_fibers.parsing import parse_polynomial

EXAMPLES = Path(__file__).resolve().parent.parent / "examples_input"


@pytest.fixture
def report(capsys):
    def emit(number, title, body):
        try:
            detail = body()
        except Exception as exc:
            with capsys.disabled():
                print(f"\nFAIL criterion {number}: {title}: {type(exc).__name__}: {exc}")
            raise
        with capsys.disabled():
            print(f"\nPASS criterion {number}: {title}" + (f" ({detail})" if detail else ""))

    return emit


def test_criterion_1_golden_example(report):
    def body():
        t0 = time.perf_counter()
        res = compute(golden_pencil())
        elapsed = time.perf_counter() - t0
        c = res.cluster
        assert len(c) == 9 and all(p.level == 0 for p in c.points)
        assert c.multiplicities() == (1,) * 9
        expected = golden_components()
        assert len(res.components) == 8
        assert {x.form for x in res.components} == set(expected.values())
        by_id = {x.id: x.form for x in res.components}
        assert len(res.fibers) == 4
        for (lam, mu), names in CUBIC_FIBERS:
            want = (ka_elem(lam), ka_elem(mu))
            matches = [f for f in res.fibers if proportional(f.lambda_mu, want)]
            assert len(matches) == 1, f"no unique fiber at ({lam} : {mu})"
            assert {by_id[cid] for cid, _ in matches[0].factorization} == {expected[n] for n in names}
        assert res.verification.passed
        assert elapsed < 60
        # over Q(sqrt 5) alone two base points are missing from the field
        with pytest.raises(ExtensionRequired) as info:
            compute(Pencil(K5, parse_polynomial(CUBIC_F, K5), parse_polynomial(CUBIC_G, K5)))
        assert info.value.factor_str() == "t^2-18/49"
        return f"9 points, 8 components, 4 fibers in {elapsed:.1f}s over Q(sqrt2+sqrt5); Q(sqrt5) needs t^2-18/49"

    report(1, "golden cubic pencil", body)


def test_criterion_2_trivial_pencils(report):
    def body():
        res = compute(pencil("X", "Y"))
        assert res.components == [] and res.verification.passed
        with pytest.raises(FixedComponent):
            compute(pencil("X^2", "X*Y"))
        return "(X, Y) empty; (X^2, XY) FixedComponent"

    report(2, "trivial pencils", body)


def test_criterion_3_conic_pencil(report):
    def body():
        res = compute(pencil("X*Y", "Z^2"))
        c = res.cluster
        assert [p.level for p in c.points].count(0) == 2 and len(c) == 4
        assert c.multiplicities() == (1, 1, 1, 1)
        assert {x.form for x in res.components} == {poly("X"), poly("Y"), poly("Z")}
        by_id = {x.id: x.form for x in res.components}
        fibers = {f.lambda_mu: {(by_id[i], k) for i, k in f.factorization} for f in res.fibers}
        assert fibers == {
            (QQ.one, QQ.zero): {(poly("X"), 1), (poly("Y"), 1)},
            (QQ.zero, QQ.one): {(poly("Z"), 2)},
        }
        return "4 points, components X, Y, Z, fibers XY and Z^2"

    report(3, "conic pencil", body)


HAND_BUILT = [
    ("X", "Y"),
    ("X", "Y - Z"),
    ("X*Y", "Z^2"),
    ("X^2 - Y^2", "Z^2 - Y^2"),
    ("Y*Z - X^2", "Y^2"),
    ("Y*Z - X^2", "Y*Z"),
    ("X^2", "Y^2"),
    ("Y^2*Z - X^3", "Y^3"),
    ("X^2*Y", "Z^3"),
    ("X*Y*Z", "(X-Y)*(Y-Z)*(Z-X)"),
    ("X*(X-Z)*(X+Z)", "Y*(Y-Z)*(Y+Z)"),
    ("Y^2*Z - X^3 - X^2*Z", "Z^3"),
    ("X^3", "Y^2*Z"),
]


def random_line(rng):
    while True:
        a, b, c = (rng.randint(-3, 3) for _ in range(3))
        if a or b or c:
            return poly(f"({a})*X + ({b})*Y + ({c})*Z")


def random_corpus(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.choice([1, 2, 2, 3, 3])
        F = G = None
        for _ in range(d):
            a, b = random_line(rng), random_line(rng)
            if rng.random() < 0.2:
                b = a  # planted double factor in G
            F = a if F is None else F * a
            G = b if G is None else G * b
        if rng.random() < 0.3:
            G = G + F * rng.randint(1, 3)  # a non-split generator
        try:
            out.append(Pencil(QQ, F, G))
        except InputError:
            continue
    return out


def test_criterion_4_invariant_suite(report):
    def body():
        corpus = [pencil(F, G) for F, G in HAND_BUILT] + random_corpus(20261019, 14)
        done = skipped = 0
        for P in corpus:
            try:
                res = compute(P)
            except ExtensionRequired:
                skipped += 1
                continue
            d = P.degree
            mults = res.cluster.multiplicities()
            assert sum(m * m for m in mults) == d * d, P
            for comp in res.components:
                actual = res.cluster.actual_multiplicities(comp.form)
                assert comp.degree * d == sum(a * m for a, m in zip(actual, mults)), (P, comp.form)
                assert comp.degree ** 2 <= sum(a * a for a in actual), (P, comp.form)
            for fib in res.fibers:
                prod = poly("1") * fib.scalar
                for cid, k in fib.factorization:
                    prod = prod * res.components[cid].form ** k
                assert prod == fib.member_form == P.member(*fib.lambda_mu), P
            assert res.verification.passed, P
            done += 1
        assert done >= 20
        return f"{done} pencils resolved, {skipped} needed an extension"

    report(4, "invariant suite", body)


def test_criterion_5_dimension_oracle(report):
    def body():
        rng = random.Random(5)
        checks = 0
        while checks < 60:
            n = rng.randint(1, 5)
            coords = set()
            while len(coords) < n:
                coords.add((Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
            coords = sorted(coords)
            values = [rng.randint(0, 3) for _ in coords]
            if not any(values):
                continue
            e = rng.randint(1, 4)
            pts = tuple(
                ClusterPoint(i, 0, None, "Z", (QQ(a), QQ(b)), projective=(QQ(a), QQ(b), QQ.one))
                for i, (a, b) in enumerate(coords)
            )
            sys = impose_cluster_conditions(e, values, Cluster(pts), QQ)
            rows, ncols = derivative_interpolation_matrix(e, coords, values)
            assert ncols == sys.unknown_count
            assert sys.rank == fraction_rank(rows, ncols), (coords, values, e)
            checks += 1
        return f"{checks} random candidates"

    report(5, "dimension oracle", body)


def _partition(res):
    by_id = {x.id: x.form for x in res.components}
    return {frozenset(by_id[i] for i, _ in f.factorization) for f in res.fibers}


def test_criterion_6_basis_invariance(report, golden):
    def body():
        P = golden.pencil
        other = compute(Pencil(P.field, P.F + P.G, P.F - P.G))
        assert [x.form for x in other.components] == [x.form for x in golden.components]
        assert _partition(other) == _partition(golden)
        return "generators (F+G, F-G)"

    report(6, "basis invariance", body)


def test_criterion_7_determinism(report, tmp_path):
    def body():
        blobs = []
        for workers in (1, 2):
            out = tmp_path / f"w{workers}.json"
            code, _ = run(str(EXAMPLES / "nine_point_cubic.txt"), json_path=str(out), workers=workers,
                          stdout=open("/dev/null", "w"))
            assert code == EXIT_OK
            blobs.append(out.read_bytes())
        assert blobs[0] == blobs[1]
        return f"workers=1 and workers=2 give {len(blobs[0])} identical bytes"

    report(7, "determinism", body)
