import random
from fractions import Fraction
from itertools import product

import pytest

from twonons.algebra import CDNumber, random_niner
from twonons.sets import (
    ElementSet,
    ZeroInSetError,
    energy,
    energy_hashed,
    energy_prime,
    energy_prime_from_profiles,
    hypothesis_check,
    inverse_set,
    lemma1_bound,
    productset,
    quotient_sets,
    ratio_profiles,
    sumset,
)
from twonons.verify import random_set


def reals(level, values):
    return ElementSet(CDNumber.scalar(level, Fraction(v)) for v in values)


def as_rationals(A):
    return sorted(e.coords[0] for e in A)


# -- basic set operations --------------------------------------------------

def test_sumset_examples():
    assert as_rationals(sumset(reals(4, [1, 2]))) == [2, 3, 4]
    # arithmetic progression of length k has sumset size 2k - 1
    for k in (3, 5, 8):
        ap = reals(4, range(1, k + 1))
        assert len(sumset(ap)) == 2 * k - 1
    rng = random.Random(0)
    A = random_set(rng, 4, 5)
    assert len(sumset(A)) <= len(A) ** 2


def test_productset_examples():
    assert as_rationals(productset(reals(4, [1, 2]))) == [1, 2, 4]
    e1 = ElementSet([CDNumber.basis(3, 1)])
    assert productset(e1) == ElementSet([-CDNumber.one(3)])
    rng = random.Random(1)
    A = random_set(rng, 3, 5)
    assert len(productset(A)) <= len(A) ** 2


def test_inverse_set():
    assert as_rationals(inverse_set(reals(4, [1, 2]))) == [Fraction(1, 2), 1]
    rng = random.Random(2)
    for level in (3, 4):
        A = random_set(rng, level, 5)
        inv = inverse_set(A)
        assert len(inv) == len(A)
        assert inverse_set(inv) == A
    closed = reals(4, [Fraction(1, 2), 1, 2])
    assert inverse_set(closed) == closed
    with pytest.raises(ZeroInSetError):
        inverse_set(reals(4, [0, 1]))


def test_quotient_sets_examples():
    left, right, ratio = quotient_sets(reals(4, [1, 2]))
    expect = [Fraction(1, 2), 1, 2]
    assert as_rationals(left) == expect
    assert as_rationals(right) == expect
    assert as_rationals(ratio) == expect
    rng = random.Random(3)
    for level in (3, 4):
        A = random_set(rng, level, 4)
        left, right, ratio = quotient_sets(A)
        assert CDNumber.one(level) in ratio
        assert len(left) <= len(A) ** 2
        assert len(ratio) <= min(len(left), len(right))


def test_ratio_profiles_examples():
    profiles = ratio_profiles(reals(4, [1, 2]))
    got = {p.x.coords[0]: (p.ell, p.r) for p in profiles}
    assert got == {Fraction(1, 2): (1, 1), Fraction(1): (2, 2), Fraction(2): (1, 1)}
    single = ratio_profiles(ElementSet([random_niner(random.Random(4))]))
    assert len(single) == 1 and single[0].ell == 1 and single[0].r == 1


def test_profiles_symmetric_under_inversion_for_inverse_closed_sets():
    rng = random.Random(5)
    for _ in range(10):
        x = random_niner(rng, max_num=2)
        A = ElementSet([CDNumber.one(4), x, x.inverse()])
        assert A.is_inverse_closed()
        profiles = {p.x: p for p in ratio_profiles(A)}
        for p in profiles.values():
            q = profiles[p.x.inverse()]
            assert (p.ell, p.r) == (q.ell, q.r)


def test_set_canonical_order_independent_of_input():
    rng = random.Random(6)
    elems = [random_niner(rng) for _ in range(6)]
    shuffled = elems[:]
    rng.shuffle(shuffled)
    assert ElementSet(elems) == ElementSet(shuffled)
    assert ElementSet(elems + elems) == ElementSet(elems)


# -- energies --------------------------------------------------------------

def test_energy_examples():
    assert energy(reals(4, [1])) == 1
    assert energy(reals(4, [1, 2])) == 6
    rng = random.Random(7)
    for level in (3, 4):
        A = random_set(rng, level, 4)
        assert energy(A) >= len(A) ** 2
        assert energy(A) == energy_hashed(A)


def test_energy_prime_examples():
    assert energy_prime(reals(4, [1])) == 1
    assert energy_prime(reals(4, [1, 2])) == 6
    profiles = ratio_profiles(reals(4, [1, 2]))
    assert energy_prime_from_profiles(profiles) == 4 + 1 + 1


def test_energy_prime_two_path_agreement():
    rng = random.Random(8)
    for _ in range(30):
        level = rng.choice((3, 4))
        A = random_set(rng, level, rng.randint(3, 6))
        assert energy_prime(A) == energy_prime_from_profiles(ratio_profiles(A))


def test_energies_coincide_in_associative_levels():
    # level <= 2 is associative: E(A) = E'(A) for nonzero sets
    rng = random.Random(9)
    for level in (0, 1, 2):
        for _ in range(10):
            A = random_set(rng, level, 4)
            assert energy(A) == energy_prime(A)


def test_energy_oracle_brute_force():
    # fully independent O(n^4) recomputation on one small set
    rng = random.Random(10)
    A = random_set(rng, 3, 4)
    elems = A.elements
    inv = {x: x.inverse() for x in elems}
    count_e = sum(1 for a, b, c, d in product(elems, repeat=4) if c * a == d * b)
    count_ep = sum(1 for a, b, c, d in product(elems, repeat=4)
                   if a * inv[b] == inv[c] * d)
    assert energy(A) == count_e
    assert energy_prime(A) == count_ep


# -- hypothesis and the lemma bound ---------------------------------------

def test_hypothesis_check():
    profiles = ratio_profiles(reals(4, [1, 2]))
    rep = hypothesis_check(profiles)
    assert rep.holds and rep.sum_lr == 6 and rep.sum_ll == 6 and rep.sum_rr == 6
    # any set with ell == r everywhere holds with equality of sums
    rng = random.Random(11)
    for _ in range(10):
        A = reals(4, {Fraction(rng.randint(1, 9), rng.randint(1, 9))
                      for _ in range(5)})
        rep = hypothesis_check(ratio_profiles(A))
        assert rep.holds and rep.sum_lr == rep.sum_ll == rep.sum_rr


def test_hypothesis_frequency_observation():
    # observation, not an assertion: record how often it holds on random sets
    rng = random.Random(12)
    held = 0
    total = 40
    for _ in range(total):
        A = random_set(rng, 3, rng.randint(3, 5))
        if hypothesis_check(ratio_profiles(A)).holds:
            held += 1
    assert 0 <= held <= total  # the frequency itself is data, not a law
    print(f"hypothesis held on {held}/{total} random octonion sets")


def test_lemma1_bound_example():
    A = reals(4, [1, Fraction(1, 2), 2])
    rep = lemma1_bound(A)
    assert rep.applicable and rep.inverse_closed
    assert rep.lhs == 19
    assert rep.rhs == Fraction(81, 5)
    assert rep.satisfied and rep.satisfied_simple
    singleton = reals(4, [1])
    rep1 = lemma1_bound(singleton)
    assert rep1.lhs == 1 and rep1.rhs == 1 and rep1.satisfied


def test_lemma1_simplified_on_random_inverse_closed_sets():
    rng = random.Random(13)
    checked = 0
    while checked < 25:
        scalars = {Fraction(1)}
        for _ in range(rng.randint(1, 3)):
            q = Fraction(rng.randint(1, 8), rng.randint(1, 8))
            if q != 0:
                scalars |= {q, 1 / q}
        A = reals(4, scalars)
        rep = lemma1_bound(A)
        if not rep.applicable:
            continue
        assert rep.inverse_closed
        assert rep.lhs >= rep.rhs_simple
        checked += 1
