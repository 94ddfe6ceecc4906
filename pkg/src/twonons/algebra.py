"""Exact arithmetic for the doubled-number tower (levels 0..4).

Level n elements have 2^n rational coordinates laid out by the recursive
(a, b) pair split: the low half of the index range is a, the high half is b.
Level 3 is the octonions, level 4 the 16-dimensional division left
semialgebra whose right-distributivity only survives for "niner" right
factors (coordinates 9..15 all zero).

All arithmetic is exact; there is no floating point in this module.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .backend import kernel as K

MAX_LEVEL = 4


class LevelMismatchError(ValueError):
    pass


class SignClass(Enum):
    ALL_POSITIVE = "all_positive"
    ALL_NEGATIVE = "all_negative"
    MIXED = "mixed"
    HAS_ZERO_COORD = "has_zero_coord"


def _classify(flat):
    pos = neg = zero = False
    for i in range(0, len(flat), 2):
        n = flat[i]
        if n > 0:
            pos = True
        elif n < 0:
            neg = True
        else:
            zero = True
    if zero:
        return SignClass.HAS_ZERO_COORD
    if pos and neg:
        return SignClass.MIXED
    return SignClass.ALL_POSITIVE if pos else SignClass.ALL_NEGATIVE


class CDNumber:
    """Immutable element of the tower; hashable, exactly comparable."""

    __slots__ = ("level", "data")

    def __init__(self, level, data):
        # `data` is the flat normalized (num, den) tuple; use the
        # classmethods below rather than building tuples by hand.
        if not 0 <= level <= MAX_LEVEL:
            raise ValueError(f"level must be in 0..{MAX_LEVEL}, got {level}")
        if len(data) != 2 ** (level + 1):
            raise ValueError("coordinate count does not match level")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("CDNumber is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coords(cls, level, coords):
        coords = list(coords)
        if len(coords) != 2**level:
            raise ValueError(
                f"level {level} needs {2 ** level} coordinates, got {len(coords)}"
            )
        flat = []
        for c in coords:
            f = Fraction(c)
            flat.extend((f.numerator, f.denominator))
        return cls(level, tuple(flat))

    @classmethod
    def zero(cls, level):
        return cls(level, K.v_zero(2**level))

    @classmethod
    def one(cls, level):
        return cls.basis(level, 0)

    @classmethod
    def basis(cls, level, i):
        if not 0 <= i < 2**level:
            raise ValueError("basis index out of range")
        flat = [0, 1] * (2**level)
        flat[2 * i] = 1
        return cls(level, tuple(flat))

    @classmethod
    def scalar(cls, level, value):
        f = Fraction(value)
        flat = [0, 1] * (2**level)
        flat[0], flat[1] = f.numerator, f.denominator
        return cls(level, tuple(flat))

    # -- views -------------------------------------------------------------

    @property
    def coords(self):
        d = self.data
        return tuple(Fraction(d[i], d[i + 1]) for i in range(0, len(d), 2))

    def is_zero(self):
        return K.v_is_zero(self.data)

    def sort_key(self):
        return self.coords

    def __eq__(self, other):
        if not isinstance(other, CDNumber):
            return NotImplemented
        return self.level == other.level and self.data == other.data

    def __hash__(self):
        return hash((self.level, self.data))

    def __repr__(self):
        return f"CDNumber.parse({self.render()!r})"

    # -- arithmetic --------------------------------------------------------

    def _check_level(self, other):
        if not isinstance(other, CDNumber):
            raise TypeError(f"expected CDNumber, got {type(other).__name__}")
        if self.level != other.level:
            raise LevelMismatchError(
                f"level mismatch: {self.level} vs {other.level}"
            )

    def __add__(self, other):
        self._check_level(other)
        return CDNumber(self.level, K.v_add(self.data, other.data))

    def __sub__(self, other):
        self._check_level(other)
        return CDNumber(self.level, K.v_sub(self.data, other.data))

    def __neg__(self):
        return CDNumber(self.level, K.v_neg(self.data))

    def __mul__(self, other):
        """The general doubling product (valid at every level)."""
        self._check_level(other)
        return CDNumber(self.level, K.cd_mul(self.data, other.data))

    def scale(self, s):
        f = Fraction(s)
        return CDNumber(self.level, K.v_scale(self.data, f.numerator, f.denominator))

    def conjugate(self):
        return CDNumber(self.level, K.v_conj(self.data))

    def norm_sq(self):
        return Fraction(*K.v_norm_sq(self.data))

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero element")
        return CDNumber(self.level, K.v_inv(self.data))

    # -- structure ---------------------------------------------------------

    def is_niner(self):
        """True iff level 4 and coordinates 9..15 vanish."""
        if self.level != 4:
            raise LevelMismatchError("is_niner is defined for level-4 elements")
        d = self.data
        return all(d[2 * i] == 0 for i in range(9, 16))

    def sign_class(self):
        return _classify(self.data)

    def niner_sign_class(self):
        """Sign class of the 9-coordinate support (level 4 only).

        For niner sets "same privileged orthant" has to be read on the
        support: a niner always has zero coordinates 9..15, so the full
        16-coordinate vector can never be strictly signed.
        """
        if self.level != 4:
            raise LevelMismatchError("niner_sign_class is defined for level 4")
        return _classify(self.data[: 2 * 9])

    def embed(self, target_level):
        """Inject as (x, 0) pairs up to target_level."""
        if target_level < self.level:
            raise ValueError("cannot embed into a lower level")
        if target_level > MAX_LEVEL:
            raise ValueError(f"target level above {MAX_LEVEL}")
        data = self.data
        for _ in range(target_level - self.level):
            data = data + K.v_zero(len(data) // 2)
        return CDNumber(target_level, data)

    # -- text format -------------------------------------------------------

    def render(self):
        """Canonical text: level tag plus num/den coordinate tokens."""
        parts = []
        for c in self.coords:
            if c.denominator == 1:
                parts.append(str(c.numerator))
            else:
                parts.append(f"{c.numerator}/{c.denominator}")
        return f"L{self.level} " + " ".join(parts)

    @classmethod
    def parse(cls, text):
        tokens = text.split()
        if not tokens or not tokens[0].startswith("L"):
            raise ValueError(f"missing level tag in {text!r}")
        try:
            level = int(tokens[0][1:])
        except ValueError:
            raise ValueError(f"bad level tag {tokens[0]!r}") from None
        return cls.from_coords(level, [Fraction(t) for t in tokens[1:]])


def mul_simplified16(x, y):
    """The level-4 shortcut product; agrees exactly with x * y."""
    if x.level != 4 or y.level != 4:
        raise LevelMismatchError("mul_simplified16 needs level-4 operands")
    return CDNumber(4, K.mul16_simplified(x.data, y.data))


# -- seeded random elements (shared by the verify suites and the search) ---

def random_rational(rng, max_num=4, dens=(1, 1, 1, 2)):
    return Fraction(rng.randint(-max_num, max_num), rng.choice(dens))


def random_element(rng, level, max_num=4, dens=(1, 1, 1, 2)):
    return CDNumber.from_coords(
        level, [random_rational(rng, max_num, dens) for _ in range(2**level)]
    )


def random_nonzero(rng, level, max_num=4, dens=(1, 1, 1, 2)):
    while True:
        x = random_element(rng, level, max_num, dens)
        if not x.is_zero():
            return x


def random_niner(rng, max_num=4, dens=(1, 1, 1, 2), positive=False):
    """Random level-4 niner; with positive=True all 9 support coords are > 0."""
    coords = []
    for _ in range(9):
        if positive:
            coords.append(Fraction(rng.randint(1, max_num), rng.choice(dens)))
        else:
            coords.append(random_rational(rng, max_num, dens))
    coords.extend([0] * 7)
    x = CDNumber.from_coords(4, coords)
    if x.is_zero():
        return random_niner(rng, max_num, dens, positive)
    return x
