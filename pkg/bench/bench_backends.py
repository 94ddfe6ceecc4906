"""Benchmark the pure-Python kernel against the compiled (Cython) kernel.

Usage:  python3 bench/bench_backends.py [--pairs N] [--seed S]

Both backends are timed on identical workloads of level-4 products,
conjugation/inversion, and norm computations; agreement is asserted before
timing so the numbers always refer to equivalent work.
"""

import argparse
import random
import time
from fractions import Fraction

from twonons import _kernel as pure
from twonons.algebra import random_element

try:
    from twonons import _speed as speed
except ImportError:
    speed = None


def flat(x):
    out = []
    for c in x.coords:
        f = Fraction(c)
        out.append(f.numerator)
        out.append(f.denominator)
    return tuple(out)


def make_workload(pairs, seed):
    rng = random.Random(seed)
    return [
        (flat(random_element(rng, 4, max_num=5, dens=(1, 2, 3))),
         flat(random_element(rng, 4, max_num=5, dens=(1, 2, 3))))
        for _ in range(pairs)
    ]


def run(kernel, work):
    t0 = time.perf_counter()
    acc = 0
    for x, y in work:
        p = kernel.cd_mul(x, y)
        acc ^= hash(p)
        acc ^= hash(kernel.v_conj(p))
        acc ^= hash(kernel.v_norm_sq(p))
        if not kernel.v_is_zero(x):
            acc ^= hash(kernel.v_inv(x))
    return time.perf_counter() - t0, acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    work = make_workload(args.pairs, args.seed)

    # correctness gate before timing
    for x, y in work[:200]:
        if speed is not None:
            assert pure.cd_mul(x, y) == speed.cd_mul(x, y)

    t_pure, h_pure = run(pure, work)
    print(f"pure   backend: {t_pure:8.3f} s  ({args.pairs} level-4 products "
          f"+ conj/norm/inv)")
    if speed is None:
        print("speed  backend: not built (pure-only install)")
        return
    t_speed, h_speed = run(speed, work)
    assert h_pure == h_speed
    print(f"speed  backend: {t_speed:8.3f} s")
    print(f"speedup: {t_pure / t_speed:.2f}x")


if __name__ == "__main__":
    main()
