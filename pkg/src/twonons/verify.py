"""Runnable randomized law suites backing the `verify` CLI subcommand.

Each law is checked with exact equality; a suite result is a list of
(law name, trials, failures).  The same generators are reused by the tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    CDNumber,
    mul_simplified16,
    random_element,
    random_niner,
    random_nonzero,
)
from .sets import ElementSet, energy_prime, ratio_profiles
from .pipeline import DegenerateRError, evaluate_bound


@dataclass
class LawResult:
    name: str
    trials: int
    failures: int

    @property
    def ok(self):
        return self.failures == 0


def _run(name, trials, check):
    failures = 0
    for _ in range(trials):
        if not check():
            failures += 1
    return LawResult(name, trials, failures)


def verify_algebra(trials=1000, seed=0, level=4):
    """The ten basic laws of the doubled product, plus the structural extras."""
    rng = random.Random(seed)
    one = CDNumber.one(level)
    zero = CDNumber.zero(level)

    def rand():
        return random_element(rng, level, max_num=3, dens=(1, 1, 2))

    def rand_nz():
        return random_nonzero(rng, level, max_num=3, dens=(1, 1, 2))

    def rand_scalar():
        s = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
        return s if s != 0 else Fraction(1)

    results = [
        _run("unit: 1x = x1 = x", trials,
             lambda: (lambda x: one * x == x and x * one == x)(rand())),
        _run("zero: 0+x = x, 0x = x0 = 0", trials,
             lambda: (lambda x: zero + x == x and zero * x == zero and x * zero == zero)(rand())),
        _run("additive group: commutes, associates, negates", trials,
             lambda: (lambda x, y, z: x + y == y + x
                      and (x + y) + z == x + (y + z)
                      and x + (-x) == zero)(rand(), rand(), rand())),
        _run("norm: x conj(x) = ||x||^2 and ||xy||^2 = ||x||^2 ||y||^2", trials,
             lambda: (lambda x, y:
                      x * x.conjugate() == CDNumber.scalar(level, x.norm_sq())
                      and x.conjugate() * x == CDNumber.scalar(level, x.norm_sq())
                      and (x * y).norm_sq() == x.norm_sq() * y.norm_sq())(rand(), rand())),
        _run("scalar commuting: s.xy = sx.y = xs.y = x.sy = x.ys", trials,
             lambda: (lambda s, x, y:
                      (x * y).scale(s) == x.scale(s) * y == x * y.scale(s)
                      and CDNumber.scalar(level, s) * x == x * CDNumber.scalar(level, s) == x.scale(s))(
                 rand_scalar(), rand(), rand())),
        _run("weak linearity: (x+s)y = xy+sy and x(y+s) = xy+xs", trials,
             lambda: (lambda s, x, y:
                      (x + s) * y == x * y + s * y
                      and x * (y + s) == x * y + x * s)(
                 CDNumber.scalar(level, rand_scalar()), rand(), rand())),
        _run("left distributivity: x(y+z) = xy+xz", trials,
             lambda: (lambda x, y, z: x * (y + z) == x * y + x * z)(
                 rand(), rand(), rand())),
        _run("inverse: two-sided, conj-formula, commutes with conjugation", trials,
             lambda: (lambda x: x * x.inverse() == one
                      and x.inverse() * x == one
                      and x.inverse() == x.conjugate().scale(1 / x.norm_sq())
                      and x.inverse().conjugate() == x.conjugate().inverse())(rand_nz())),
        _run("left alternativity: x.xy = (xx)y", trials,
             lambda: (lambda x, y: x * (x * y) == (x * x) * y)(rand(), rand())),
        _run("left cancellation: x.(x^-1 y) = y", trials,
             lambda: (lambda x, y: x * (x.inverse() * y) == y)(rand_nz(), rand())),
    ]
    if level == 4:
        results.append(_run(
            "simplified level-4 product agrees with the general rule", trials,
            lambda: (lambda x, y: mul_simplified16(x, y) == x * y)(rand(), rand())))
        results.append(_run(
            "niner right distributivity: (y+z)x = yx+zx", trials,
            lambda: (lambda y, z, x: (y + z) * x == y * x + z * x)(
                rand(), rand(), random_niner(rng, max_num=3))))
    if level == 3:
        results.append(_run(
            "octonion right cancellation: (yx)x^-1 = y and x^-1(xy) = y", trials,
            lambda: (lambda x, y: (y * x) * x.inverse() == y
                     and x.inverse() * (x * y) == y)(rand_nz(), rand())))
    return results


def find_right_distributivity_counterexample(seed=0, max_tries=2000):
    """A concrete (y, z, x) with x not a niner and (y+z)x != yx + zx."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        y = random_element(rng, 4, max_num=2, dens=(1,))
        z = random_element(rng, 4, max_num=2, dens=(1,))
        x = random_nonzero(rng, 4, max_num=2, dens=(1,))
        if x.is_niner():
            continue
        if (y + z) * x != y * x + z * x:
            return y, z, x
    return None


def random_set(rng, level, size, max_num=3):
    elems = set()
    while len(elems) < size:
        elems.add(random_nonzero(rng, level, max_num=max_num, dens=(1, 1, 2)))
    return ElementSet(elems)


def positive_ray_niner_set(rng, size, max_num=6):
    """Rational multiples of one positive-support niner: a positive-orthant
    niner set with a rich (purely rational) ratioset."""
    g = random_niner(rng, max_num=max_num, positive=True)
    scalars = set()
    while len(scalars) < size:
        scalars.add(Fraction(rng.randint(1, max_num), rng.randint(1, max_num)))
    return ElementSet(g.scale(s) for s in scalars)


def verify_setops(sets=50, seed=0):
    """Cross-checks of the energy computations on random sets."""
    rng = random.Random(seed)
    results = []
    failures_two_path = 0
    failures_card = 0
    n = 0
    for _ in range(sets):
        level = rng.choice((3, 4))
        A = random_set(rng, level, rng.randint(3, 6))
        profiles = ratio_profiles(A)
        if energy_prime(A) != sum(p.ell * p.r for p in profiles):
            failures_two_path += 1
        from .sets import inverse_set, quotient_sets

        if len(inverse_set(A)) != len(A):
            failures_card += 1
        left, right, ratioset = quotient_sets(A)
        if len(left) > len(A) ** 2 or len(ratioset) > min(len(left), len(right)):
            failures_card += 1
        n += 1
    results.append(LawResult("E' quadruple count == sum ell(x) r(x)", n, failures_two_path))
    results.append(LawResult("inverse/quotient cardinalities", n, failures_card))
    return results


def verify_pipeline(sets=25, seed=0):
    """Chain audit on certified positive-orthant niner sets."""
    rng = random.Random(seed)
    chain_fail = 0
    ball_fail = 0
    sanity_fail = 0
    n = 0
    while n < sets:
        A = positive_ray_niner_set(rng, rng.randint(4, 6))
        try:
            rep = evaluate_bound(A, "sixteen_on")
        except DegenerateRError:
            continue
        n += 1
        if not rep.chain_ok():
            chain_fail += 1
        if rep.ball_lemma_ok is not True:
            ball_fail += 1
        if not rep.sanity_ceiling_ok:
            sanity_fail += 1
    return [
        LawResult("chain stages hold on certified sets", n, chain_fail),
        LawResult("ball lemma holds on certified sets", n, ball_fail),
        LawResult("k16 sanity ceiling respected", n, sanity_fail),
    ]


def run_suite(suite, trials=200, seed=0):
    """Run the named suite(s); returns (all ok, list of LawResult)."""
    results = []
    if suite in ("algebra", "all"):
        results += verify_algebra(trials=trials, seed=seed, level=4)
        results += verify_algebra(trials=trials, seed=seed + 1, level=3)
        cex = find_right_distributivity_counterexample(seed=seed)
        results.append(LawResult(
            "right distributivity fails for some non-niner", 1,
            0 if cex is not None else 1))
    if suite in ("setops", "all"):
        results += verify_setops(sets=max(5, trials // 4), seed=seed)
    if suite in ("pipeline", "all"):
        results += verify_pipeline(sets=max(5, trials // 8), seed=seed)
    return all(r.ok for r in results), results
