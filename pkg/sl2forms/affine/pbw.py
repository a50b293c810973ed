"""Graded PBW bases of the Verma module.

A monomial is stored as three weakly decreasing index lists: fs for f T^-i
(i >= 0), hs for h T^-j (j >= 1) and es for e T^-l (l >= 1), written in one
of two block orders. The standard order of a grade (p1, p2) puts the f block
first when p1 >= p2 and the e block first otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Tuple

from sl2forms.affine.lie import Gen


class Order(str, Enum):
    FHE = "FHE"
    EHF = "EHF"


BLOCK_RANK = {
    Order.FHE: {"f": 0, "h": 1, "e": 2},
    Order.EHF: {"e": 0, "h": 1, "f": 2},
}


def gen_rank(order: Order, g: Gen) -> Tuple[int, int]:
    """Position of a lowering generator in a normally ordered word."""
    return (BLOCK_RANK[order][g.letter], g.tpow)


@dataclass(frozen=True, order=True)
class Grade:
    p1: int
    p2: int

    def __add__(self, other) -> "Grade":
        d1, d2 = other if isinstance(other, tuple) else (other.p1, other.p2)
        return Grade(self.p1 + d1, self.p2 + d2)

    @property
    def is_valid(self) -> bool:
        return self.p1 >= 0 and self.p2 >= 0

    @property
    def total(self) -> int:
        return self.p1 + self.p2

    @property
    def order(self) -> Order:
        return Order.FHE if self.p1 >= self.p2 else Order.EHF

    def __str__(self) -> str:
        return f"({self.p1},{self.p2})"


@dataclass(frozen=True)
class PBWMonomial:
    fs: Tuple[int, ...] = ()
    hs: Tuple[int, ...] = ()
    es: Tuple[int, ...] = ()
    order: Order = Order.FHE

    def __post_init__(self):
        for name, values, low in (("fs", self.fs, 0), ("hs", self.hs, 1), ("es", self.es, 1)):
            if any(v < low for v in values):
                raise ValueError(f"{name} indices must be >= {low}, got {values}")
            if list(values) != sorted(values, reverse=True):
                raise ValueError(f"{name} indices must be weakly decreasing, got {values}")

    @classmethod
    def standard(cls, fs=(), hs=(), es=()) -> "PBWMonomial":
        """The monomial written in the standard order of its grade."""
        probe = cls(tuple(fs), tuple(hs), tuple(es))
        return cls(probe.fs, probe.hs, probe.es, probe.grade.order)

    @classmethod
    def from_word(cls, word: Tuple[Gen, ...], order: Order) -> "PBWMonomial":
        fs = sorted((-g.tpow for g in word if g.letter == "f"), reverse=True)
        hs = sorted((-g.tpow for g in word if g.letter == "h"), reverse=True)
        es = sorted((-g.tpow for g in word if g.letter == "e"), reverse=True)
        return cls(tuple(fs), tuple(hs), tuple(es), order)

    @property
    def grade(self) -> Grade:
        p2 = sum(self.fs) + sum(self.hs) + sum(self.es)
        return Grade(p2 + len(self.fs) - len(self.es), p2)

    @property
    def length(self) -> int:
        return len(self.fs) + len(self.hs) + len(self.es)

    @property
    def word(self) -> Tuple[Gen, ...]:
        blocks = {
            "f": tuple(Gen("f", -i) for i in self.fs),
            "h": tuple(Gen("h", -j) for j in self.hs),
            "e": tuple(Gen("e", -l) for l in self.es),
        }
        letters = sorted(blocks, key=lambda letter: BLOCK_RANK[self.order][letter])
        return sum((blocks[letter] for letter in letters), ())

    def in_order(self, order: Order) -> "PBWMonomial":
        return PBWMonomial(self.fs, self.hs, self.es, order)

    def sort_key(self):
        return (self.length, tuple(gen_rank(self.order, g) for g in self.word))

    def __str__(self) -> str:
        factors = []
        for g in self.word:
            text = str(g)
            factors.append(f"({text})" if "/" in text else text)
        return "".join(factors) + "v"


def lowering_candidates(grade: Grade) -> List[Gen]:
    """Lowering generators whose bidegree fits inside the grade."""
    gens = [Gen("f", -i) for i in range(0, min(grade.p1 - 1, grade.p2) + 1)]
    gens += [Gen("h", -j) for j in range(1, min(grade.p1, grade.p2) + 1)]
    gens += [Gen("e", -l) for l in range(1, min(grade.p1 + 1, grade.p2) + 1)]
    return gens


def _multisets(cands: List[Gen], start: int, p1: int, p2: int) -> Iterator[Tuple[Gen, ...]]:
    if p1 == 0 and p2 == 0:
        yield ()
        return
    for idx in range(start, len(cands)):
        d1, d2 = cands[idx].degree
        if d1 <= p1 and d2 <= p2:
            for rest in _multisets(cands, idx, p1 - d1, p2 - d2):
                yield (cands[idx],) + rest


@lru_cache(maxsize=None)
def component_basis(grade: Grade, order: Order = None) -> Tuple[PBWMonomial, ...]:
    """ All PBW monomials of a grade, sorted by length and then generator position. """
    if not grade.is_valid:
        return ()
    order = order or grade.order
    monomials = {PBWMonomial.from_word(word, order) for word in _multisets(lowering_candidates(grade), 0, grade.p1, grade.p2)}
    return tuple(sorted(monomials, key=lambda m: m.sort_key()))


def dimension(grade: Grade) -> int:
    return len(component_basis(grade))
