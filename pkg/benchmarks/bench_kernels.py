"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 27] [--repeat 3] [--solve-n 6]

Each row reports the best of ``--repeat`` runs per backend and the speedup.
"""

from __future__ import annotations

import argparse
import time

from hypercube_ids import _backend
from hypercube_ids.construct import build, plan


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases(n: int, solve_n: int):
    s = build(plan(n))
    half = build(plan((n - 1) // 2)) if n % 2 else s
    members, half_members = s.members, half.members
    p = half.dimension
    return [
        (f"expand_odd p={p} -> {2 * p + 1}", lambda k: k.expand_odd(half_members, p)),
        (f"extend_by_one n={n}", lambda k: k.extend_by_one(members, n)),
        (f"mark_coverage n={n} |S|={members.size}", lambda k: k.mark_coverage(members, n)),
        (f"first_adjacent n={n}", lambda k: k.first_adjacent(members, n)),
        (f"search n={solve_n}", lambda k: k.search(solve_n, (1 << solve_n) + 1, 1e9)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=27)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--solve-n", type=int, default=6)
    args = ap.parse_args(argv)

    backends = _backend.available()
    if "cython" not in backends:
        print("compiled kernels not built; only the fallback will be timed")
    names = sorted(backends, reverse=True)
    print(f"{'kernel':<40}" + "".join(f"{b:>12}" for b in names) + f"{'speedup':>10}")
    for label, fn in cases(args.n, args.solve_n):
        row = {b: best_of(args.repeat, lambda: fn(backends[b])) for b in names}
        speed = row["python"] / row["cython"] if "cython" in row else float("nan")
        print(f"{label:<40}" + "".join(f"{row[b]:>11.3f}s" for b in names) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
