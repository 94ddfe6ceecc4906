"""Seeded search over positive-orthant niner sets, maximizing the exact
bound ratio sum|S_x| / |union S_x|.

Everything is driven by one random.Random(seed): the (config, seed) pair
fully determines the run, including annealing acceptance draws.  Scores are
exact rationals and are compared exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import CDNumber, random_niner
from .sets import ElementSet
from .pipeline import DegenerateRError, evaluate_bound

GENERATORS = ("random", "geometric", "lattice_slice")
MOVES = ("replace_element", "perturb_coordinate", "add_element", "remove_element")
ACCEPTANCE = ("hill_climb", "anneal")

_EXP_TERMS = 24  # Taylor terms for the rational exp; |err| <= |x|^24/24!


@dataclass
class SearchConfig:
    set_size_min: int = 4
    set_size_max: int = 6
    coordinate_bound: int = 8
    generator: str = "random"
    moves: tuple = MOVES
    iterations: int = 100
    seed: int = 0
    acceptance: str = "hill_climb"
    anneal_initial_temp: Fraction = Fraction(1, 2)
    anneal_decay: Fraction = Fraction(95, 100)

    def validate(self):
        if self.set_size_min < 3:
            raise ValueError("set_size_min must be >= 3 (smaller sets are degenerate)")
        if self.set_size_max < self.set_size_min:
            raise ValueError("set_size_max must be >= set_size_min")
        if self.coordinate_bound < 1:
            raise ValueError("coordinate_bound must be positive")
        if self.generator not in GENERATORS:
            raise ValueError(f"generator must be one of {GENERATORS}")
        for m in self.moves:
            if m not in MOVES:
                raise ValueError(f"moves: unknown move {m!r}")
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")
        if self.acceptance not in ACCEPTANCE:
            raise ValueError(f"acceptance must be one of {ACCEPTANCE}")
        if self.anneal_initial_temp <= 0:
            raise ValueError("anneal_initial_temp must be positive")
        if not 0 < self.anneal_decay < 1:
            raise ValueError("anneal_decay must be in (0, 1)")


@dataclass
class SearchRecord:
    config: SearchConfig
    best_set: ElementSet
    best_report: object
    best_ratio: Fraction
    history: list = field(default_factory=list)  # (iteration, best ratio so far)
    evaluations: int = 0
    failures: int = 0


def _valid_candidate(A):
    return (
        A.level == 4
        and not A.has_zero()
        and A.is_all_niner()
        and A.in_single_privileged_orthant()
    )


def _positive_rational(rng, bound):
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def _random_positive_niner(rng, bound):
    return CDNumber.from_coords(
        4, [_positive_rational(rng, bound) for _ in range(9)] + [0] * 7
    )


def _gen_random(rng, size, bound):
    elems = set()
    tries = 0
    while len(elems) < size:
        elems.add(_random_positive_niner(rng, bound))
        tries += 1
        if tries > 100 * size:
            raise RuntimeError("could not generate enough distinct elements")
    return ElementSet(elems)


def _dominant_real_niner(rng, bound):
    """Positive niner with a dominant real coordinate: its powers keep all
    support coordinates positive for many steps (small 'rotation angle')."""
    coords = [Fraction(rng.randint(max(2, bound // 2), bound))]
    coords += [Fraction(1, rng.randint(2, max(2, bound))) for _ in range(8)]
    coords += [0] * 7
    return CDNumber.from_coords(4, coords)


def _gen_geometric(rng, size, bound):
    """Powers {g, g^2, ..., g^k} when they stay positive niners; otherwise a
    plain random set (powers of a generic niner leave the orthant easily)."""
    for _ in range(20):
        g = _dominant_real_niner(rng, bound)
        powers = [g]
        ok = True
        for _ in range(size - 1):
            nxt = powers[-1] * g
            if not (nxt.is_niner() and nxt.niner_sign_class().value == "all_positive"):
                ok = False
                break
            powers.append(nxt)
        if ok and len(set(powers)) == size:
            return ElementSet(powers)
    return _gen_random(rng, size, bound)


def _gen_lattice_slice(rng, size, bound):
    """Distinct small positive integer vectors on the niner support."""
    elems = set()
    tries = 0
    while len(elems) < size:
        coords = [rng.randint(1, max(2, bound)) for _ in range(9)] + [0] * 7
        elems.add(CDNumber.from_coords(4, coords))
        tries += 1
        if tries > 200 * size:
            raise RuntimeError("could not generate enough lattice points")
    return ElementSet(elems)


def generate_candidate(config, rng):
    size = rng.randint(config.set_size_min, config.set_size_max)
    gen = {
        "random": _gen_random,
        "geometric": _gen_geometric,
        "lattice_slice": _gen_lattice_slice,
    }[config.generator]
    A = gen(rng, size, config.coordinate_bound)
    assert _valid_candidate(A)
    return A


def local_move(A, move, config, rng):
    """Apply one move; returns (new_set, changed).  The input set is returned
    unchanged (changed=False) when the move cannot maintain the constraints."""
    elems = list(A.elements)
    if move == "remove_element":
        if len(elems) <= config.set_size_min:
            return A, False
        elems.pop(rng.randrange(len(elems)))
        return ElementSet(elems), True
    if move == "add_element":
        if len(elems) >= config.set_size_max:
            return A, False
        base = elems[rng.randrange(len(elems))]
        cand = base.scale(_positive_rational(rng, config.coordinate_bound))
        if cand in set(elems) or cand.is_zero():
            return A, False
        return ElementSet(elems + [cand]), True
    if move == "replace_element":
        i = rng.randrange(len(elems))
        base = elems[i]
        cand = base.scale(_positive_rational(rng, config.coordinate_bound))
        if cand in set(elems):
            return A, False
        elems[i] = cand
        return ElementSet(elems), True
    if move == "perturb_coordinate":
        i = rng.randrange(len(elems))
        coords = list(elems[i].coords)
        j = rng.randrange(9)
        # Cap the perturbation below the coordinate so positivity survives.
        delta = coords[j] * Fraction(rng.randint(-3, 3), 8)
        if delta == 0:
            return A, False
        coords[j] = coords[j] + delta
        cand = CDNumber.from_coords(4, coords)
        if cand in set(elems):
            return A, False
        elems[i] = cand
        new = ElementSet(elems)
        if not _valid_candidate(new):
            return A, False
        return new, True
    raise ValueError(f"unknown move {move!r}")


def _score(A):
    """Certified ratio; degenerate or failing candidates score 1 (k16 >= 0)."""
    if not _valid_candidate(A):
        return Fraction(1), None
    try:
        report = evaluate_bound(A, "sixteen_on")
    except DegenerateRError:
        return Fraction(1), None
    except Exception:
        return Fraction(1), None
    if not report.certified:
        return Fraction(1), None
    return report.ratio, report


def _exp_rational(x):
    """Rational exp for x <= 0, clamped to [0, 1].

    The argument is halved until |x| <= 1, a 24-term Taylor series is
    evaluated (truncation error below 1/24! there), and the result is
    squared back up; that is far finer than the 53-bit acceptance draws."""
    if x <= -40:
        return Fraction(0)
    halvings = 0
    while abs(x) > 1:
        x /= 2
        halvings += 1
    total = Fraction(1)
    term = Fraction(1)
    for k in range(1, _EXP_TERMS):
        term = term * x / k
        total += term
    for _ in range(halvings):
        total *= total
    return min(max(total, Fraction(0)), Fraction(1))


def run_search(config):
    config.validate()
    rng = random.Random(config.seed)

    current = generate_candidate(config, rng)
    current_score, current_report = _score(current)
    best, best_score, best_report = current, current_score, current_report
    history = [(0, best_score)]
    evaluations = 1
    failures = 0 if current_report is not None else 1
    temp = Fraction(config.anneal_initial_temp)

    for it in range(1, config.iterations + 1):
        move = rng.choice(config.moves)
        candidate, changed = local_move(current, move, config, rng)
        if not changed:
            history.append((it, best_score))
            continue
        cand_score, cand_report = _score(candidate)
        evaluations += 1
        if cand_report is None:
            failures += 1

        accept = cand_score >= current_score
        if not accept and config.acceptance == "anneal" and temp > 0:
            p = _exp_rational((cand_score - current_score) / temp)
            draw = Fraction(rng.getrandbits(53), 2**53)
            accept = draw < p
        if accept:
            current, current_score = candidate, cand_score
            if cand_score > best_score and cand_report is not None:
                best, best_score, best_report = candidate, cand_score, cand_report
        if config.acceptance == "anneal":
            temp *= config.anneal_decay
        history.append((it, best_score))

    # Re-verify the reported best before finalizing the record.
    if best_report is not None:
        fresh = evaluate_bound(best, "sixteen_on")
        assert fresh.ratio == best_score and fresh.certified
        best_report = fresh
    return SearchRecord(
        config=config,
        best_set=best,
        best_report=best_report,
        best_ratio=best_score,
        history=history,
        evaluations=evaluations,
        failures=failures,
    )
