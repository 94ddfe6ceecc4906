"""Finite-set combinatorics: sumsets, product sets, ratiosets, representation
counts, and the two multiplicative energies.

Everything is brute-force enumeration over ordered pairs/quadruples with
exact equality; this module is the oracle for the bound pipeline, so no
algebraic shortcuts are taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import CDNumber, SignClass


class ZeroInSetError(ValueError):
    pass


class ElementSet:
    """Deduplicated finite set of same-level elements in canonical order
    (lexicographic on the rational coordinate vectors)."""

    __slots__ = ("level", "elements")

    def __init__(self, elements):
        elements = list(elements)
        if not elements:
            raise ValueError("empty element set")
        level = elements[0].level
        for e in elements:
            if e.level != level:
                raise ValueError("mixed levels in element set")
        unique = sorted(set(elements), key=lambda e: e.sort_key())
        self.level = level
        self.elements = tuple(unique)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.level == other.level and self.elements == other.elements

    def __hash__(self):
        return hash((self.level, self.elements))

    def __repr__(self):
        return f"ElementSet({len(self)} elements at level {self.level})"

    # -- structural flags (always recomputed, never trusted) ---------------

    def has_zero(self):
        return any(e.is_zero() for e in self.elements)

    def require_nonzero(self):
        if self.has_zero():
            raise ZeroInSetError("0 must not be in the set for this operation")

    def is_inverse_closed(self):
        if self.has_zero():
            return False
        pool = set(self.elements)
        return all(e.inverse() in pool for e in self.elements)

    def is_all_niner(self):
        return self.level == 4 and all(e.is_niner() for e in self.elements)

    def orthant_class(self):
        """The shared privileged-orthant class, or None if there is none.

        For all-niner level-4 sets the 9-coordinate support is classified;
        otherwise the full coordinate vector is used.
        """
        if self.is_all_niner():
            classes = {e.niner_sign_class() for e in self.elements}
        else:
            classes = {e.sign_class() for e in self.elements}
        if len(classes) == 1:
            only = classes.pop()
            if only in (SignClass.ALL_POSITIVE, SignClass.ALL_NEGATIVE):
                return only
        return None

    def in_single_privileged_orthant(self):
        return self.orthant_class() is not None

    def scaled(self, s):
        return ElementSet(e.scale(s) for e in self.elements)


@dataclass(frozen=True)
class RatioProfile:
    """An element of the ratioset A/A with its representation counts."""

    x: CDNumber
    ell: int  # |{(a,b) in A^2 : a * b^-1 == x}|
    r: int    # |{(a,b) in A^2 : b^-1 * a == x}|


def sumset(A):
    return ElementSet(a + b for a in A for b in A)


def productset(A):
    return ElementSet(a * b for a in A for b in A)


def inverse_set(A):
    A.require_nonzero()
    return ElementSet(a.inverse() for a in A)


def left_quotient_counts(A):
    """Counts of a * b^-1 over ordered pairs (a, b) in A^2."""
    A.require_nonzero()
    inv = {b: b.inverse() for b in A}
    counts = {}
    for a in A:
        for b in A:
            q = a * inv[b]
            counts[q] = counts.get(q, 0) + 1
    return counts


def right_quotient_counts(A):
    """Counts of b^-1 * a over ordered pairs (a, b) in A^2."""
    A.require_nonzero()
    inv = {b: b.inverse() for b in A}
    counts = {}
    for a in A:
        for b in A:
            q = inv[b] * a
            counts[q] = counts.get(q, 0) + 1
    return counts


def quotient_sets(A):
    """(left = A*A^-1, right = A^-1*A, ratioset = intersection)."""
    left_counts = left_quotient_counts(A)
    right_counts = right_quotient_counts(A)
    left = ElementSet(left_counts)
    right = ElementSet(right_counts)
    common = set(left_counts) & set(right_counts)
    ratioset = ElementSet(common) if common else None
    # 1 = a * a^-1 is always in both quotient sets.
    assert ratioset is not None
    return left, right, ratioset


def ratio_profiles(A):
    """One RatioProfile per element of the ratioset A/A, in canonical order."""
    left_counts = left_quotient_counts(A)
    right_counts = right_quotient_counts(A)
    common = sorted(set(left_counts) & set(right_counts), key=lambda e: e.sort_key())
    return [RatioProfile(x, left_counts[x], right_counts[x]) for x in common]


def energy(A):
    """E(A) = #{(a,b,c,d) in A^4 : c*a == d*b}, by quadruple enumeration.

    Pair products are computed once; the quadruple loop itself only
    compares them."""
    elems = A.elements
    prod = {(c, a): c * a for c in elems for a in elems}
    count = 0
    for c in elems:
        for a in elems:
            ca = prod[(c, a)]
            for d in elems:
                for b in elems:
                    if prod[(d, b)] == ca:
                        count += 1
    return count


def energy_hashed(A):
    """E(A) again, via product representation counts (independent route)."""
    counts = {}
    for c in A:
        for a in A:
            p = c * a
            counts[p] = counts.get(p, 0) + 1
    return sum(n * n for n in counts.values())


def energy_prime(A):
    """E'(A) = #{(a,b,c,d) in A^4 : a*b^-1 == c^-1*d}, by enumeration.

    Pair quotients are computed once; the quadruple loop only compares."""
    A.require_nonzero()
    inv = {x: x.inverse() for x in A}
    elems = A.elements
    lq = {(a, b): a * inv[b] for a in elems for b in elems}
    rq = {(c, d): inv[c] * d for c in elems for d in elems}
    count = 0
    for a in elems:
        for b in elems:
            q = lq[(a, b)]
            for c in elems:
                for d in elems:
                    if rq[(c, d)] == q:
                        count += 1
    return count


def energy_prime_from_profiles(profiles):
    """E'(A) via the identity sum of ell(x) * r(x) over x in A/A."""
    return sum(p.ell * p.r for p in profiles)


@dataclass(frozen=True)
class HypothesisReport:
    holds: bool
    min_side: str       # "left" when sum ell^2 attains the min
    sum_lr: int
    sum_ll: int
    sum_rr: int


def hypothesis_check(profiles):
    """The Cauchy-Schwarz hypothesis: sum ell*r >= min(sum ell^2, sum r^2)."""
    sum_lr = sum(p.ell * p.r for p in profiles)
    sum_ll = sum(p.ell * p.ell for p in profiles)
    sum_rr = sum(p.r * p.r for p in profiles)
    min_side = "left" if sum_ll <= sum_rr else "right"
    return HypothesisReport(
        holds=sum_lr >= min(sum_ll, sum_rr),
        min_side=min_side,
        sum_lr=sum_lr,
        sum_ll=sum_ll,
        sum_rr=sum_rr,
    )


@dataclass(frozen=True)
class Lemma1Report:
    applicable: bool
    lhs: int                      # E'(A)
    rhs: Fraction | None          # |A|^4 |A/A| / min(|AA^-1|, |A^-1A|)^2
    satisfied: bool | None
    inverse_closed: bool
    rhs_simple: Fraction | None   # |A|^4 / |AA|, when inverse-closed
    satisfied_simple: bool | None
    # Sum-of-counts identity assumed in the source argument; reported, not
    # relied upon: sum of ell over A/A == |A|^2 |A/A| / |AA^-1|.
    sum_ell: int = 0
    sum_ell_identity_holds: bool | None = None


def lemma1_bound(A):
    """Evaluate both sides of the E'(A) lower bound exactly."""
    A.require_nonzero()
    profiles = ratio_profiles(A)
    hyp = hypothesis_check(profiles)
    lhs = energy_prime(A)
    left, right, ratioset = quotient_sets(A)
    n = len(A)
    sum_ell = sum(p.ell for p in profiles)
    identity = Fraction(n * n * len(ratioset), len(left))
    if not hyp.holds:
        return Lemma1Report(
            applicable=False, lhs=lhs, rhs=None, satisfied=None,
            inverse_closed=A.is_inverse_closed(), rhs_simple=None,
            satisfied_simple=None, sum_ell=sum_ell,
            sum_ell_identity_holds=(sum_ell == identity),
        )
    rhs = Fraction(n**4 * len(ratioset), min(len(left), len(right)) ** 2)
    inv_closed = A.is_inverse_closed()
    rhs_simple = None
    satisfied_simple = None
    if inv_closed:
        rhs_simple = Fraction(n**4, len(productset(A)))
        satisfied_simple = lhs >= rhs_simple
    return Lemma1Report(
        applicable=True, lhs=lhs, rhs=rhs, satisfied=lhs >= rhs,
        inverse_closed=inv_closed, rhs_simple=rhs_simple,
        satisfied_simple=satisfied_simple, sum_ell=sum_ell,
        sum_ell_identity_holds=(sum_ell == identity),
    )
