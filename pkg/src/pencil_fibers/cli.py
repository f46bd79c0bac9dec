"""Command line entry point: ``pencil-fibers compute INPUT [options]``."""

import argparse
import json
import logging
import sys
import time

from .driver import compute
from .errors import ExtensionRequired, InputError, InvariantViolation, PencilError
from .parsing import read_input

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EXTENSION = 3
EXIT_INTERNAL = 4


def build_document(doc, result, timing=None):
    """The JSON-ready output document; every field element is an exact string."""
    symbol = doc.symbol
    pencil = result.pencil
    out = {
        "input": doc.echo(),
        "degree": pencil.degree,
        "base_points": result.cluster.to_json(symbol),
        "candidates_summary": [],
        "components": [],
        "fibers": [],
        "verification": result.verification.to_json() if result.verification else None,
    }
    for s in result.summaries:
        entry = {
            "e": s.e,
            "candidates": s.candidates,
            "dimension_zero": s.dimension_zero,
            "no_exceptional_part": s.no_exceptional_part,
            "accepted": s.accepted,
        }
        if s.dump:
            entry["dump"] = [list(v) for v in s.dump]
        out["candidates_summary"].append(entry)
    for c in result.components:
        out["components"].append(
            {
                "id": c.id,
                "degree": c.degree,
                "equation": c.form.to_str(symbol),
                "v": list(c.candidate.values),
                "multiplicities": list(c.actual_mults),
            }
        )
    for f in result.fibers:
        out["fibers"].append(
            {
                "lambda_mu": [x.to_str(symbol) for x in f.lambda_mu],
                "member": f.member_form.to_str(symbol),
                "scalar": f.scalar.to_str(symbol),
                "factorization": [{"component": cid, "exponent": k} for cid, k in f.factorization],
            }
        )
    if timing is not None:
        out["timing"] = {k: f"{v:.3f}" for k, v in timing.items()}
    return out


def format_text(doc, result):
    symbol = doc.symbol
    lines = []
    pencil = result.pencil
    lines.append(f"pencil of degree {pencil.degree} over {pencil.field!r}")
    lines.append(f"  F = {pencil.F.to_str(symbol)}")
    lines.append(f"  G = {pencil.G.to_str(symbol)}")
    lines.append(f"base points: {len(result.cluster)}")
    for p in result.cluster.points:
        if p.level == 0:
            where = "(" + " : ".join(c.to_str(symbol) for c in p.projective) + ")"
        else:
            where = f"on E{p.parent}, chart {p.chart}, t = {p.center[0].to_str(symbol)}"
        prox = ",".join(str(i) for i in sorted(p.proximate_to)) or "-"
        lines.append(f"  p{p.id} level {p.level} mult {p.generic_mult} prox [{prox}] {where}")
    for s in result.summaries:
        lines.append(f"degree {s.e}: {s.candidates} candidates, {s.dimension_zero} of dimension 0, "
                     f"{s.accepted} accepted")
    lines.append(f"components: {len(result.components)}")
    for c in result.components:
        lines.append(f"  C{c.id} (degree {c.degree}): {c.form.to_str(symbol)} = 0")
    lines.append(f"special fibers: {len(result.fibers)}")
    for f in result.fibers:
        lam, mu = (x.to_str(symbol) for x in f.lambda_mu)
        fact = " * ".join(f"C{cid}" + (f"^{k}" if k > 1 else "") for cid, k in f.factorization)
        lines.append(f"  ({lam} : {mu}): {fact}")
    if result.verification is not None:
        v = result.verification
        lines.append("verification: " + ("pass" if v.passed else "FAIL"))
        for e in v.failures():
            lines.append(f"  {e.kind} {e.index}: " + "; ".join(e.diagnostics))
    return "\n".join(lines)


def run(input_path, json_path=None, dump_candidates=False, max_degree=None, verify=True,
        probe_seed=0, workers=1, timing=False, stdout=None, stderr=None):
    """Run the whole computation; returns (exit code, output document or None)."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with open(input_path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {input_path}: {exc}", file=stderr)
        return EXIT_INPUT, None
    t0 = time.perf_counter()
    try:
        doc = read_input(text)
        t1 = time.perf_counter()
        result = compute(doc.pencil, max_degree=max_degree, workers=workers, probe_seed=probe_seed,
                         verify=verify, dump_candidates=dump_candidates)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INPUT, None
    except ExtensionRequired as exc:
        print(f"error: ExtensionRequired: {exc}", file=stderr)
        return EXIT_EXTENSION, None
    except (InvariantViolation, PencilError) as exc:
        print(f"error: internal: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL, None
    t2 = time.perf_counter()
    times = {"parse": t1 - t0, "compute": t2 - t1} if timing else None
    out = build_document(doc, result, times)
    print(format_text(doc, result), file=stdout)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=2)
            fh.write("\n")
    if result.verification is not None and not result.verification.passed:
        return EXIT_INTERNAL, out
    return EXIT_OK, out


def main(argv=None):
    parser = argparse.ArgumentParser(prog="pencil-fibers",
                                     description="Special fibers of a pencil of plane curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("compute", help="compute base points, special-fiber components and fibers")
    p.add_argument("input", help="input file with [field] and [pencil] sections")
    p.add_argument("--json", metavar="PATH", help="write the output document as JSON")
    p.add_argument("--dump-candidates", action="store_true", help="include every candidate vector in the JSON")
    p.add_argument("--max-degree", type=int, metavar="N", help="override the degree bound of the main loop")
    p.add_argument("--no-verify", action="store_true", help="skip fiber grouping and verification")
    p.add_argument("--probe-seed", type=int, default=0, metavar="N", help="offset of the probe-member sequence")
    p.add_argument("--workers", type=int, default=1, metavar="N", help="processes for candidate checks")
    p.add_argument("--timing", action="store_true", help="add wall-clock timings to the JSON")
    p.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    code, _ = run(args.input, json_path=args.json, dump_candidates=args.dump_candidates,
                  max_degree=args.max_degree, verify=not args.no_verify, probe_seed=args.probe_seed,
                  workers=args.workers, timing=args.timing)
    return code


if __name__ == "__main__":
    sys.exit(main())
