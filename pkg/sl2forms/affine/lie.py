"""Generators and brackets of affine sl2."""

from dataclasses import dataclass
from typing import NamedTuple, Tuple

LETTERS = ("e", "f", "h", "c")

# [a, b] in sl2 as {letter: coefficient}
SL2_BRACKET = {
    ("e", "f"): {"h": 1},
    ("f", "e"): {"h": -1},
    ("h", "e"): {"e": 2},
    ("e", "h"): {"e": -2},
    ("h", "f"): {"f": -2},
    ("f", "h"): {"f": 2},
}

# invariant form: <e, f> = <f, e> = 1, <h, h> = 2
PAIRING = {("e", "f"): 1, ("f", "e"): 1, ("h", "h"): 2}

_TWIST = {"e": ("f", 1), "f": ("e", 1), "h": ("h", -1), "c": ("c", 1)}
_TRANSPOSE = {"e": "f", "f": "e", "h": "h", "c": "c"}


@dataclass(frozen=True)
class Gen:
    """ The loop generator letter * T^tpow; the central element c has tpow 0. """

    letter: str
    tpow: int = 0

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise ValueError(f"Unknown generator letter {self.letter!r}")
        if self.letter == "c" and self.tpow != 0:
            raise ValueError("The central element carries no power of T")

    @property
    def degree(self) -> Tuple[int, int]:
        """Bidegree (p1, p2); lowering generators have non-negative components."""
        p = self.tpow
        if self.letter == "f":
            return (1 - p, -p)
        if self.letter == "h":
            return (-p, -p)
        if self.letter == "e":
            return (-1 - p, -p)
        return (0, 0)

    @property
    def is_lowering(self) -> bool:
        if self.letter == "f":
            return self.tpow <= 0
        if self.letter in ("h", "e"):
            return self.tpow <= -1
        return False

    def __str__(self) -> str:
        if self.tpow == 0:
            return self.letter
        if self.tpow == -1:
            return f"{self.letter}/T"
        if self.tpow < 0:
            return f"{self.letter}/T^{-self.tpow}"
        if self.tpow == 1:
            return f"{self.letter}T"
        return f"{self.letter}T^{self.tpow}"


class LieElement(NamedTuple):
    """Integer combination of loop generators plus a multiple of c."""

    terms: Tuple[Tuple[Gen, int], ...]
    central: int


def bracket(a: Gen, b: Gen) -> LieElement:
    """ [a T^i, b T^j] = [a, b] T^(i+j) + i <a, b> delta_{i+j, 0} c. """
    if a.letter == "c" or b.letter == "c":
        return LieElement((), 0)
    power = a.tpow + b.tpow
    terms = tuple((Gen(letter, power), coeff) for letter, coeff in SL2_BRACKET.get((a.letter, b.letter), {}).items())
    central = a.tpow * PAIRING.get((a.letter, b.letter), 0) if power == 0 else 0
    return LieElement(terms, central)


def pi_twist(g: Gen) -> Tuple[int, Gen]:
    """ The automorphism swapping e and f, negating h and fixing c, as (sign, generator). """
    letter, sign = _TWIST[g.letter]
    return sign, Gen(letter, g.tpow)


def transpose(g: Gen) -> Gen:
    """ The Chevalley anti-involution on a single generator: e <-> f and T^m -> T^(-m). """
    return Gen(_TRANSPOSE[g.letter], -g.tpow)


def transpose_anti(word: Tuple[Gen, ...]) -> Tuple[Gen, ...]:
    return tuple(transpose(g) for g in reversed(word))
