"""Verma modules V(M, k - M) over affine sl2 and the normal-ordering engine."""

import logging
from typing import Dict, Hashable, Iterable, Mapping, Optional, Sequence, Tuple

from sl2forms.affine.lie import Gen, bracket
from sl2forms.affine.pbw import Grade, Order, PBWMonomial, component_basis, gen_rank
from sl2forms.combination import Combination
from sl2forms.field import RatFunc

logger = logging.getLogger("sl2forms.affine")

Word = Tuple[Gen, ...]
Terms = Dict[Word, RatFunc]


class VermaVector(Combination):
    """ Homogeneous vector of a Verma module in PBW coordinates. """

    __slots__ = ("module", "grade")

    def __init__(self, module: "VermaModule", grade: Grade, terms=None):
        super().__init__(terms)
        self.module = module
        self.grade = grade

    def _new(self, terms):
        return type(self)(self.module, self.grade, terms)

    def to_text(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in self.sorted_items(lambda m: m.sort_key()))


def _accumulate(out: Dict, key, value):
    if key in out:
        out[key] = out[key] + value
    else:
        out[key] = value


class VermaModule:
    """ The Verma module with highest weight M and level k over a fraction field.

    The highest-weight vector v satisfies h v = M v and c v = k v; all raising
    generators annihilate it. Normal forms of (generator, monomial) insertions
    are memoized on the instance, so one module object should be used per
    worker process.
    """

    def __init__(self, weight: RatFunc, level: RatFunc):
        self.weight = weight
        self.level = level
        self.kappa = level + 2
        self.field = weight.field
        self.zero = self.field.zero
        self.one = self.field.one
        self._inserts: Dict[Tuple[Order, Gen, Word], Terms] = {}
        self.memo: Dict[Hashable, object] = {}

    def __repr__(self) -> str:
        return f"VermaModule(M={self.weight}, k={self.level})"

    # -- Vectors --

    def vector(self, grade: Grade, terms: Optional[Mapping[PBWMonomial, RatFunc]] = None) -> VermaVector:
        return VermaVector(self, grade, terms)

    def vacuum(self) -> VermaVector:
        return self.vector(Grade(0, 0), {PBWMonomial(): self.one})

    def monomial(self, mono: PBWMonomial) -> VermaVector:
        return self.vector(mono.grade, {mono: self.one})

    def component_basis(self, grade: Grade) -> Tuple[PBWMonomial, ...]:
        return component_basis(grade)

    # -- Normal ordering --

    def eigenvalue(self, g: Gen) -> RatFunc:
        """Scalar by which a non-lowering generator acts on v."""
        if g.letter == "h" and g.tpow == 0:
            return self.weight
        if g.letter == "c":
            return self.level
        return self.zero

    def _insert(self, order: Order, g: Gen, mono: Word) -> Terms:
        key = (order, g, mono)
        cached = self._inserts.get(key)
        if cached is None:
            cached = self._insert_uncached(order, g, mono)
            self._inserts[key] = cached
        return cached

    def _insert_uncached(self, order: Order, g: Gen, mono: Word) -> Terms:
        if g.letter == "c":
            return {mono: self.level}
        if g.is_lowering and (not mono or gen_rank(order, g) <= gen_rank(order, mono[0])):
            return {(g,) + mono: self.one}
        if not mono:
            value = self.eigenvalue(g)
            return {(): value} if value else {}
        head, rest = mono[0], mono[1:]
        out: Terms = {}
        # g head rest = head (g rest) + [g, head] rest
        for m, c in self._insert(order, g, rest).items():
            for m2, c2 in self._insert(order, head, m).items():
                _accumulate(out, m2, c * c2)
        lie = bracket(g, head)
        for gen, coeff in lie.terms:
            for m, c in self._insert(order, gen, rest).items():
                _accumulate(out, m, coeff * c)
        if lie.central:
            _accumulate(out, rest, lie.central * self.level)
        return {m: c for m, c in out.items() if c}

    def normal_form(self, word: Sequence[Gen], order: Order) -> Terms:
        """ word * v as normally ordered words with coefficients. """
        current: Terms = {(): self.one}
        for g in reversed(tuple(word)):
            updated: Terms = {}
            for mono, c in current.items():
                for m2, c2 in self._insert(order, g, mono).items():
                    _accumulate(updated, m2, c * c2)
            current = {m: c for m, c in updated.items() if c}
        return current

    # -- Action --

    def act(self, g: Gen, x: VermaVector) -> VermaVector:
        target = x.grade + g.degree
        if not target.is_valid or not x:
            return self.vector(target)
        order = target.order
        out: Dict[PBWMonomial, RatFunc] = {}
        for mono, c in x.items():
            for word, c2 in self.normal_form((g,) + mono.word, order).items():
                _accumulate(out, PBWMonomial.from_word(word, order), c * c2)
        return self.vector(target, out)

    def act_word(self, word: Iterable[Gen], x: VermaVector) -> VermaVector:
        """ Apply a word of generators, rightmost first. """
        for g in reversed(tuple(word)):
            x = self.act(g, x)
        return x

    def act_element(self, terms: Iterable[Tuple[Gen, int]], central: int, x: VermaVector) -> VermaVector:
        """Action of an integer combination of generators plus central multiple."""
        result = x.scale(central * self.level) if central else self.vector(x.grade)
        for g, coeff in terms:
            result = _add_graded(result, self.act(g, x).scale(coeff))
        return result

    def rebase(self, x: VermaVector, order: Order) -> VermaVector:
        """ The same vector in coordinates of the given block order. """
        out: Dict[PBWMonomial, RatFunc] = {}
        for mono, c in x.items():
            for word, c2 in self.normal_form(mono.word, order).items():
                _accumulate(out, PBWMonomial.from_word(word, order), c * c2)
        return self.vector(x.grade, out)

    def cache_size(self) -> int:
        return len(self._inserts)


def _add_graded(a: VermaVector, b: VermaVector) -> VermaVector:
    """Sum of two vectors where either may be an empty placeholder of another grade."""
    if not a:
        return b
    if not b:
        return a
    if a.grade != b.grade:
        raise ValueError(f"Cannot add vectors of grades {a.grade} and {b.grade}")
    return a + b
