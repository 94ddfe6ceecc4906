import os
import random
from fractions import Fraction
from itertools import product

import pytest

from twonons.algebra import CDNumber
from twonons.sets import ElementSet, ratio_profiles
from twonons.pipeline import (
    DegenerateRError,
    build_Sx,
    evaluate_bound,
    octonion_sum_product_check,
    phi_map,
    select_R,
    verify_ball_lemma,
)
from twonons.setfile import load_set, render_bound_report
from twonons.verify import positive_ray_niner_set

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def reals(level, values):
    return ElementSet(CDNumber.scalar(level, Fraction(v)) for v in values)


# -- an independent rational-only pipeline for real scalar sets ------------

def rational_pipeline(values):
    """Brute-force reimplementation over plain Fractions; only valid for
    sets of real scalars (where both quotient orientations coincide)."""
    A = [Fraction(v) for v in values]
    counts = {}
    for a, b in product(A, A):
        counts[a / b] = counts.get(a / b, 0) + 1
    buckets = {}
    for x, c in counts.items():
        buckets.setdefault(c.bit_length() - 1, []).append(x)
    weights = {i: sum(counts[x] ** 2 for x in xs) for i, xs in buckets.items()}
    best = max(weights.values())
    chosen = min(i for i, w in weights.items() if w == best)
    R = sorted(buckets[chosen])
    if len(R) < 2:
        raise DegenerateRError("degenerate")
    phi = {}
    for x in R:
        phi[x] = min((y for y in R if y != x), key=lambda y: (abs(x - y), y))
    def reps(x):
        return [(a, b) for a, b in product(A, A) if a / b == x]
    sum_sx = 0
    union = set()
    for x in R:
        pairs = {(a + c, b + d) for a, b in reps(x) for c, d in reps(phi[x])}
        assert len(pairs) == counts[x] * counts[phi[x]]
        sum_sx += len(pairs)
        union |= pairs
    return {
        "chosen_I": chosen,
        "R_size": len(R),
        "sum_Sx": sum_sx,
        "union_Sx": len(union),
        "ratio": Fraction(sum_sx, len(union)),
        "sumset_size": len({a + b for a, b in product(A, A)}),
    }


# -- select_R --------------------------------------------------------------

def test_select_R_all_counts_one():
    rng = random.Random(0)
    from twonons.verify import random_set

    A = random_set(rng, 4, 4)
    profiles = [p for p in ratio_profiles(A) if p.ell == p.r == 1]
    if profiles:
        buckets = select_R(profiles, len(A))
        assert buckets.chosen_I == 0
        assert len(buckets.R) == len(profiles)


def test_select_R_example_1_2():
    profiles = ratio_profiles(reals(4, [1, 2]))
    buckets = select_R(profiles, 2)
    assert set(buckets.weights.items()) == {(0, 2), (1, 4)}
    assert buckets.chosen_I == 1
    assert len(buckets.R) == 1


def test_select_R_audit_on_random_sets():
    rng = random.Random(1)
    from twonons.verify import random_set

    for _ in range(25):
        A = random_set(rng, rng.choice((3, 4)), rng.randint(3, 6))
        profiles = ratio_profiles(A)
        buckets = select_R(profiles, len(A))
        # provable form: the chosen bucket carries at least an even share of
        # the dominant-side mass, and twice that mass covers E'
        total = sum(buckets.weights.values())
        assert buckets.weights[buckets.chosen_I] * len(buckets.weights) >= total
        e_prime = sum(p.ell * p.r for p in profiles)
        assert 2 * total >= e_prime
        assert buckets.audit_upper_ok


# -- phi -------------------------------------------------------------------

def test_phi_map_examples():
    two = [CDNumber.scalar(4, 1), CDNumber.scalar(4, 2)]
    phi = phi_map(two)
    assert phi[two[0]] == two[1] and phi[two[1]] == two[0]

    line = [CDNumber.scalar(4, v) for v in (0, 1, 3)]
    phi = phi_map(line)
    assert phi[line[0]] == line[1]
    assert phi[line[1]] == line[0]
    assert phi[line[2]] == line[1]


def test_phi_map_tie_breaks_to_canonical_smaller():
    pts = [CDNumber.scalar(4, v) for v in (-1, 0, 1)]
    phi = phi_map(pts)
    # 0 is equidistant from -1 and 1; the canonically smaller wins
    assert phi[pts[1]] == pts[0]


def test_phi_map_degenerate():
    with pytest.raises(DegenerateRError):
        phi_map([CDNumber.one(4)])


# -- S_x -------------------------------------------------------------------

def test_build_Sx_examples():
    A = reals(4, [1, 2, 4])
    x = CDNumber.scalar(4, 2)
    y = CDNumber.scalar(4, 4)
    sx = build_Sx(A, x, y, side="left")
    assert len(sx.pairs) == 2 * 1
    assert sx.injective
    with pytest.raises(ValueError):
        build_Sx(A, x, x, side="left")


def test_build_Sx_single_pair():
    A = reals(4, [1, 3])
    sx = build_Sx(A, CDNumber.scalar(4, 3), CDNumber.scalar(4, Fraction(1, 3)),
                  side="right")
    assert len(sx.pairs) == 1


def test_Sx_injectivity_on_random_niner_sets():
    rng = random.Random(2)
    for _ in range(10):
        A = positive_ray_niner_set(rng, 4)
        profiles = ratio_profiles(A)
        try:
            buckets = select_R(profiles, len(A), preferred_side="right")
        except DegenerateRError:
            continue
        if len(buckets.R) < 2:
            continue
        phi = phi_map([p.x for p in buckets.R])
        for p in buckets.R:
            sx = build_Sx(A, p.x, phi[p.x], side=buckets.side)
            assert sx.injective


# -- ball lemma ------------------------------------------------------------

def test_ball_lemma_mediant_property_on_scalar_ray():
    # quotients on a scalar ray are rational: (a+c)/(b+d) lies between a/b
    # and c/d, so the ball check holds with slack
    g = CDNumber.from_coords(4, [1] * 9 + [0] * 7)
    A = ElementSet(g.scale(v) for v in (1, 2, 4, 8))
    assert A.in_single_privileged_orthant()
    profiles = ratio_profiles(A)
    buckets = select_R(profiles, len(A), preferred_side="right")
    phi = phi_map([p.x for p in buckets.R])
    for p in buckets.R:
        sx = build_Sx(A, p.x, phi[p.x], side=buckets.side)
        assert verify_ball_lemma(A, sx) is True


def test_ball_lemma_not_applicable_without_orthant():
    A = reals(4, [1, 2, 4, 8])
    profiles = ratio_profiles(A)
    buckets = select_R(profiles, len(A), preferred_side="right")
    phi = phi_map([p.x for p in buckets.R])
    sx = build_Sx(A, buckets.R[0].x, phi[buckets.R[0].x], side=buckets.side)
    assert verify_ball_lemma(A, sx) is None


def test_ball_lemma_random_positive_orthant_sets():
    rng = random.Random(3)
    checked = 0
    while checked < 15:
        A = positive_ray_niner_set(rng, rng.randint(4, 6))
        try:
            rep = evaluate_bound(A, "sixteen_on")
        except DegenerateRError:
            continue
        assert rep.ball_lemma_ok is True
        checked += 1


# -- evaluate_bound --------------------------------------------------------

def test_degenerate_R_raises():
    rng = random.Random(4)
    from twonons.verify import random_set

    # generic sets have ratioset {1}: the single-element bucket dominates
    degenerate_seen = False
    for _ in range(10):
        A = random_set(rng, 4, 4)
        if not A.is_all_niner():
            A = ElementSet(
                CDNumber.from_coords(4, list(e.coords[:9]) + [0] * 7)
                if not e.is_niner() else e
                for e in A
            )
        try:
            evaluate_bound(A, "sixteen_on")
        except DegenerateRError:
            degenerate_seen = True
            break
    assert degenerate_seen


def test_geometric_golden_against_independent_pipeline():
    A = reals(4, [1, 2, 4, 8])
    rep = evaluate_bound(A, "sixteen_on")
    oracle = rational_pipeline([1, 2, 4, 8])
    assert rep.chosen_I == oracle["chosen_I"]
    assert rep.R_size == oracle["R_size"]
    assert rep.sum_Sx == oracle["sum_Sx"]
    assert rep.union_Sx == oracle["union_Sx"]
    assert rep.ratio == oracle["ratio"]
    assert rep.sumset_size == oracle["sumset_size"]
    assert rep.chain_ok()
    assert rep.k16_lower == Fraction(2, 7)


def test_golden_report_regression():
    A = load_set(os.path.join(GOLDEN, "set_1248.set"))
    rep = evaluate_bound(A, "sixteen_on")
    with open(os.path.join(GOLDEN, "report_1248.txt")) as fh:
        assert render_bound_report(rep) + "\n" == fh.read()


def test_random_real_sets_against_independent_pipeline():
    rng = random.Random(5)
    checked = 0
    while checked < 10:
        values = sorted({Fraction(rng.randint(1, 30), rng.randint(1, 6))
                         for _ in range(rng.randint(4, 6))})
        if len(values) < 4:
            continue
        A = reals(4, values)
        try:
            rep = evaluate_bound(A, "sixteen_on")
            oracle = rational_pipeline(values)
        except DegenerateRError:
            continue
        assert (rep.sum_Sx, rep.union_Sx, rep.ratio) == (
            oracle["sum_Sx"], oracle["union_Sx"], oracle["ratio"])
        checked += 1


def test_scaling_invariance():
    rng = random.Random(6)
    checked = 0
    while checked < 5:
        A = positive_ray_niner_set(rng, 5)
        try:
            rep = evaluate_bound(A, "sixteen_on")
        except DegenerateRError:
            continue
        for s in (Fraction(3), Fraction(2, 5)):
            rep2 = evaluate_bound(A.scaled(s), "sixteen_on")
            assert (rep2.sum_Sx, rep2.union_Sx, rep2.ratio, rep2.R_size,
                    rep2.chosen_I) == (rep.sum_Sx, rep.union_Sx, rep.ratio,
                                       rep.R_size, rep.chosen_I)
        checked += 1


def test_mode_validation():
    A = reals(3, [1, 2])
    with pytest.raises(ValueError):
        evaluate_bound(A, "sixteen_on")
    B = ElementSet([CDNumber.basis(4, 15), CDNumber.one(4)])
    with pytest.raises(ValueError):
        evaluate_bound(B, "sixteen_on")
    with pytest.raises(ValueError):
        evaluate_bound(reals(4, [1, 2]), "unknown_mode")


def test_octonion_mode_and_sum_product_inequality():
    rng = random.Random(7)
    checked = 0
    while checked < 8:
        scalars = {Fraction(1)}
        for _ in range(rng.randint(2, 4)):
            q = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            scalars |= {q, 1 / q}
        A = reals(3, scalars)
        if len(A) < 4:
            continue
        from twonons.sets import hypothesis_check

        if not hypothesis_check(ratio_profiles(A)).holds:
            continue
        m, lhs_cubed, rhs, ok = octonion_sum_product_check(A)
        assert ok
        try:
            rep = evaluate_bound(A, "octonion")
            assert rep.chain_ok()
        except DegenerateRError:
            pass
        checked += 1


def test_sanity_ceiling_flag_present():
    rng = random.Random(8)
    while True:
        A = positive_ray_niner_set(rng, 5)
        try:
            rep = evaluate_bound(A, "sixteen_on")
        except DegenerateRError:
            continue
        assert rep.sanity_ceiling_ok
        assert rep.k16_lower <= 7332
        break
