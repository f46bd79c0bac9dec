"""Compare the compiled and pure-Python candidate search kernels.

Run from the repository root::

    python3 benchmarks/bench_enumerate.py [--repeat N]

Each workload is (label, e, d, mults, prox), as passed to ``enumerate_vectors``.
The compiled kernel is skipped when the extension was not built.
"""

import argparse
import time

from pencil_fibers.enumerator import KERNELS


def chain(n):
    """A free chain: point i+1 is proximate to point i."""
    return [[]] + [[i] for i in range(n - 1)]


WORKLOADS = [
    ("9 proper points, e=3 (cubic pencil)", 3, 3, [1] * 9, [[]] * 9),
    ("12 proper points, e=4", 4, 4, [1] * 12, [[]] * 12),
    ("14 proper points, e=4", 4, 4, [1] * 14, [[]] * 14),
    ("chain of 14, e=4", 4, 4, [1] * 14, chain(14)),
    ("mixed 2+10 points, e=4", 4, 4, [2, 2] + [1] * 10, [[]] * 12),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    names = [k for k in ("cython", "python") if k in KERNELS]
    print(f"{'workload':40s} {'candidates':>10s} " + " ".join(f"{n + ' s':>10s}" for n in names) + "   speedup")
    for label, e, d, mults, prox in WORKLOADS:
        results = {}
        for name in names:
            results[name] = best_of(lambda k=KERNELS[name]: k(e, d, mults, prox), args.repeat)
        outs = {name: r[1] for name, r in results.items()}
        if len(outs) == 2:
            assert outs["cython"] == outs["python"], f"kernels disagree on {label}"
        count = len(next(iter(outs.values())))
        cols = " ".join(f"{results[n][0]:10.4f}" for n in names)
        speed = f"{results['python'][0] / results['cython'][0]:8.1f}x" if len(names) == 2 else "       -"
        print(f"{label:40s} {count:10d} {cols} {speed}", flush=True)


if __name__ == "__main__":
    main()
