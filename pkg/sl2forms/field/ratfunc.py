"""Rational functions over the integers in a fixed, declared alphabet.

An `Alphabet` owns one sympy fraction field ZZ(u_1, ..., u_m) with graded
lexicographic term order. Elements are sympy `FracElement`s: numerator and
denominator are sparse integer polynomials, always cancelled, with a positive
leading denominator coefficient, so equal values have equal representations.
"""

import logging
import operator
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from sl2forms.errors import DenominatorVanishes, DivisionByZero, PoleAtZero, UnknownSymbol

logger = logging.getLogger("sl2forms.field")

RatFunc = FracElement
Scalar = Union[int, Fraction, FracElement, str]

EPS = "eps"

_OPERATORS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class Alphabet:
    """A fixed ordered set of symbols and the field of rational functions in them."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise ValueError("An alphabet needs at least one symbol")
        if len(set(names)) != len(names):
            raise ValueError(f"Repeated symbol in alphabet {names}")
        self.names = names
        self.field = FracField(names, ZZ, grlex)
        self.ring = self.field.ring
        self._index = {name: i for i, name in enumerate(names)}
        self._symbols = {name: sympy.Symbol(name) for name in names}

    @classmethod
    def standard(cls, n: int, points: bool = True, t: bool = False, eps: bool = False) -> "Alphabet":
        """ Level k, weights M1..Mn, optionally points z1..zn, coordinate t and deformation eps. """
        names = ["k"] + [f"M{i}" for i in range(1, n + 1)]
        if points:
            names += [f"z{i}" for i in range(1, n + 1)]
        if t:
            names.append("t")
        if eps:
            names.append(EPS)
        return cls(names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __getitem__(self, name: str) -> RatFunc:
        if name not in self._index:
            raise UnknownSymbol(name)
        return self.field.gens[self._index[name]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and other.names == self.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({', '.join(self.names)})"

    # -- Construction --

    @property
    def zero(self) -> RatFunc:
        return self.field.zero

    @property
    def one(self) -> RatFunc:
        return self.field.one

    def const(self, value: Union[int, Fraction]) -> RatFunc:
        value = Fraction(value)
        return self.field(value.numerator) / self.field(value.denominator)

    def coerce(self, value: Scalar) -> RatFunc:
        if isinstance(value, FracElement):
            if value.field != self.field:
                raise ValueError(f"{value} belongs to a different field than {self}")
            return value
        if isinstance(value, PolyElement):
            return self.field.new(value)
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    # -- Serialization --

    def to_text(self, f: RatFunc) -> str:
        return str(f)

    def parse(self, text: str) -> RatFunc:
        expr = sympy.sympify(text, locals=self._symbols)
        unknown = {str(s) for s in expr.free_symbols} - set(self.names)
        if unknown:
            raise UnknownSymbol(sorted(unknown)[0])
        return self.field.from_expr(expr)

    # -- Inspection --

    def as_rational(self, f: RatFunc) -> Optional[Fraction]:
        """The value of a constant rational function, or None when it depends on a symbol."""
        f = self.coerce(f)
        if not (f.numer.is_ground and f.denom.is_ground):
            return None
        return Fraction(int(f.numer.const()), int(f.denom.const()))

    def is_constant(self, f: RatFunc) -> bool:
        return self.as_rational(f) is not None

    def depends_on(self, f: RatFunc, name: str) -> bool:
        i = self._index[name]
        return any(m[i] for m in f.numer.monoms()) or any(m[i] for m in f.denom.monoms())

    def diff(self, f: RatFunc, name: str) -> RatFunc:
        return f.diff(self[name])

    # -- Specialization --

    def substitute(self, f: RatFunc, bindings: Mapping[str, Scalar]) -> RatFunc:
        """ Simultaneous substitution of rational functions for symbols.

        Both numerator and denominator are multiplied by the same power product
        of the bound denominators, so the result is computed with polynomial
        arithmetic only and reduced once at the end.
        """
        f = self.coerce(f)
        for name in bindings:
            if name not in self._index:
                raise UnknownSymbol(name)
        if not bindings:
            return f
        values: List[Tuple[PolyElement, PolyElement]] = []
        for name, gen in zip(self.names, self.ring.gens):
            if name in bindings:
                value = self.coerce(bindings[name])
                values.append((value.numer, value.denom))
            else:
                values.append((gen, self.ring.one))
        degrees = [max(a, b) for a, b in zip(_degrees(f.numer), _degrees(f.denom))]
        numer = self._specialize(f.numer, values, degrees)
        denom = self._specialize(f.denom, values, degrees)
        if not denom:
            shown = ", ".join(f"{k}={self.coerce(v)}" for k, v in bindings.items())
            raise DenominatorVanishes(self.to_text(f), "{" + shown + "}")
        return self.field.new(numer, denom)

    def _specialize(self, poly: PolyElement, values, degrees) -> PolyElement:
        ring = self.ring
        total = ring.zero
        powers: Dict[Tuple[int, int, int], PolyElement] = {}

        def power(i: int, which: int, e: int) -> PolyElement:
            key = (i, which, e)
            if key not in powers:
                powers[key] = values[i][which] ** e
            return powers[key]

        for monom, coeff in poly.iterterms():
            term = ring.ground_new(coeff)
            for i, e in enumerate(monom):
                num, den = values[i]
                if e:
                    term = term * power(i, 0, e)
                if degrees[i] - e and not (den.is_ground and den == 1):
                    term = term * power(i, 1, degrees[i] - e)
            total += term
        return total

    def limit_eps(self, f: RatFunc, name: str = EPS) -> RatFunc:
        """ Value at name = 0 of f regarded as a function of that symbol alone. """
        f = self.coerce(f)
        if name not in self._index:
            raise UnknownSymbol(name)
        if not f:
            return f
        i = self._index[name]
        order_num = min(m[i] for m in f.numer.monoms())
        order_den = min(m[i] for m in f.denom.monoms())
        if order_num < order_den:
            raise PoleAtZero(self.to_text(f), order_den - order_num)
        if order_num > order_den:
            return self.zero
        return self.field.new(_lowest_part(f.numer, i, order_num), _lowest_part(f.denom, i, order_den))


def _degrees(poly: PolyElement) -> Tuple[int, ...]:
    if not poly:
        return (0,) * poly.ring.ngens
    return tuple(max(m[i] for m in poly.monoms()) for i in range(poly.ring.ngens))


def _lowest_part(poly: PolyElement, i: int, order: int) -> PolyElement:
    terms = {}
    for monom, coeff in poly.iterterms():
        if monom[i] == order:
            shifted = monom[:i] + (0,) + monom[i + 1:]
            terms[shifted] = coeff
    return poly.ring.from_dict(terms)


def arith(op: str, a: RatFunc, b: RatFunc) -> RatFunc:
    """ Field operation by name; one of add, sub, mul, div. """
    try:
        func = _OPERATORS[op]
    except KeyError:
        raise ValueError(f"Unknown operation {op!r}, expected one of {sorted(_OPERATORS)}")
    if op == "div" and not b:
        raise DivisionByZero(str(a))
    return func(a, b)
