"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py            # kernels on fixed inputs
    python3 benchmarks/bench_kernels.py --solve    # plus a full Jacks or Better solve per backend

Each kernel is run on identical inputs with both backends; outputs are
compared before timings are reported.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from pokervar import kernels
from pokervar.videopoker import all_hands


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def cases(size):
    gen = np.random.default_rng(0)
    sevens = np.argsort(gen.random((size, 52)), axis=1)[:, :7].astype(np.int64)
    fives = np.sort(sevens[:, :5], axis=1)
    keep = ~np.isin(fives, [48, 49, 50, 51]).any(axis=1)
    boards = fives[keep]
    hands = all_hands().astype(np.int64)
    pays = (np.arange(len(hands)) % 9).astype(np.int64)
    yield "eval7", lambda b: b.eval7(sevens), len(sevens)
    yield "showdown_codes", lambda b: b.showdown_codes([48, 49], [50, 51], boards), len(boards)
    yield "category5 (wild)", lambda b: b.category5(fives, True), len(fives)
    yield "canonical_keys", lambda b: b.canonical_keys(fives, False), len(fives)
    sub = hands[: size * 2]
    yield "subset_sums", lambda b: b.subset_sums(sub, pays[: len(sub)]), len(sub)
    tables = kernels.load_backend("python").subset_sums(hands[:1], pays[:1])
    yield "hold_sums", lambda b: b.hold_sums(fives, *tables), len(fives)


def solve_seconds(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("POKERVAR_PURE_PYTHON", None)
    if pure:
        env["POKERVAR_PURE_PYTHON"] = "1"
    code = ("import time;from pokervar.videopoker import solve_game,JACKS_OR_BETTER_9_6 as P;"
            "t=time.perf_counter();solve_game(P);print(time.perf_counter()-t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=100_000, help="rows per kernel call")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--solve", action="store_true", help="also time a full game solve")
    args = parser.parse_args(argv)

    names = kernels.available_backends()
    if "cython" not in names:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    cy, py = kernels.load_backend("cython"), kernels.load_backend("python")

    print(f"{'kernel':<18} {'rows':>9} {'cython s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, fn, rows in cases(args.size):
        t_cy, out_cy = best_of(lambda: fn(cy), args.repeat)
        t_py, out_py = best_of(lambda: fn(py), args.repeat)
        if not same(out_cy, out_py):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<18} {rows:>9} {t_cy:>10.4f} {t_py:>10.4f} {t_py / t_cy:>7.1f}x")

    if args.solve:
        t_cy, t_py = solve_seconds(False), solve_seconds(True)
        print(f"{'solve_game (JoB)':<18} {134459:>9} {t_cy:>10.2f} {t_py:>10.2f} {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
