"""Time each hot kernel under every available backend.

    python3 benchmarks/bench_kernels.py [--repeat N]

Inputs come from the construction and search modules so the workloads match
what the library actually runs. Results are checked for agreement across
backends before timings are printed.
"""

import argparse
import time
from itertools import combinations

import numpy as np

from grkit import kernels
from grkit.construct import build, plan_f, plan_w
from grkit.core import CATALOG, circulant, substitute
from grkit.search import ForbiddenSpec, _copy_masks


def _workloads():
    big = build(plan_f(4, 0, 4), validate=False)  # 357 vertices, rainbow-free
    blow = build(plan_w(4, 2, 1), validate=False)  # 85 vertices
    qr = circulant(17, [1, 2, 4, 8])
    nested = substitute(circulant(17, [1, 2, 4, 8], k=4), [circulant(5, [1], colors=(3, 4), k=4)] * 17)
    spec = ForbiddenSpec.parse("1:P3,2:H3")
    edges = list(combinations(range(7), 2))
    index = {e: i for i, e in enumerate(edges)}
    m1 = _copy_masks(spec.patterns[0], 7, index)
    m2 = _copy_masks(spec.patterns[1], 7, index)

    def mat(g):
        return np.ascontiguousarray(g.matrix)

    return [
        ("rainbow_triangle n=357", lambda b: b.rainbow_triangle(mat(big))),
        ("color_bitsets n=357", lambda b: b.color_bitsets(mat(big), 1)),
        ("find_embedding K4 in qr17 (absent)",
         lambda b: b.find_embedding(b.color_bitsets(mat(qr), 1), qr.n, CATALOG["K4"].earlier)),
        ("find_embedding H3 n=85",
         lambda b: [b.find_embedding(b.color_bitsets(mat(blow), c), blow.n, CATALOG["H3"].earlier)
                    for c in (1, 2)]),
        ("module_closure n=85 x 50 pairs",
         lambda b: [b.module_closure(mat(nested), [u, u + 1]).sum() for u in range(50)]),
        ("first_avoiding P3/H3 on K7 (2^21)", lambda b: b.first_avoiding(len(edges), m1, m2)),
    ]


def _norm(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, list):
        return [_norm(v) for v in x]
    return x


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    mods = kernels.backends()
    names = [m.BACKEND for m in mods]
    if len(mods) == 1:
        print("compiled extension not built; timing the fallback only")
    print(f"{'kernel':40s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(mods) > 1 else ""))
    for label, fn in _workloads():
        times, results = [], []
        for m in mods:
            best = float("inf")
            for _ in range(a.repeat):
                t0 = time.perf_counter()
                res = fn(m)
                best = min(best, time.perf_counter() - t0)
            times.append(best)
            results.append(_norm(res))
        # bitsets differ in representation across backends, so only compare the rest
        if "bitsets" not in label:
            assert all(r == results[0] for r in results), label
        row = f"{label:40s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(mods) > 1:
            row += f"{times[0] / times[-1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
