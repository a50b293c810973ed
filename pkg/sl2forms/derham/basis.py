"""Elementary functions and forms on the punctured line, and the twisting data."""

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from sl2forms.combination import Combination
from sl2forms.field import Alphabet, RatFunc


@dataclass(frozen=True)
class PoleAt:
    """(t - z_site)^(-order), or the form d(t - z_site)/(t - z_site)^order."""

    site: int
    order: int

    def __post_init__(self):
        if self.site < 1 or self.order < 1:
            raise ValueError(f"Invalid pole label site={self.site}, order={self.order}")

    def sort_key(self):
        return (0, self.site, self.order)

    def __str__(self) -> str:
        return f"pole:{self.site}:{self.order}"


@dataclass(frozen=True)
class PolyPow:
    """t^degree, or the form t^degree dt."""

    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"Invalid power label degree={self.degree}")

    def sort_key(self):
        return (1, self.degree, 0)

    def __str__(self) -> str:
        return f"t^{self.degree}"


Elementary = Union[PoleAt, PolyPow]


def parse_elementary(text: str) -> Elementary:
    """ Inverse of str() on labels: "pole:i:b", "t^b", plus the shorthands "1" and "t". """
    text = text.strip()
    if text == "1":
        return PolyPow(0)
    if text == "t":
        return PolyPow(1)
    if text.startswith("t^"):
        return PolyPow(int(text[2:]))
    if text.startswith("pole:"):
        _, site, order = text.split(":")
        return PoleAt(int(site), int(order))
    raise ValueError(f"Cannot parse elementary label {text!r}")


class DFunc(Combination):
    """Linear combination of elementary functions."""

    __slots__ = ()

    def to_text(self) -> str:
        return _text(self)


class DForm(Combination):
    """Linear combination of elementary 1-forms."""

    __slots__ = ()

    def to_text(self) -> str:
        return _text(self)


def _text(combo: Combination) -> str:
    if not combo:
        return "0"
    return " + ".join(f"({value})*[{key}]" for key, value in combo.sorted_items(lambda k: k.sort_key()))


@dataclass(frozen=True)
class Config:
    """ Twisting data of the master function on the line punctured at z_1..z_n.

    Attributes:
        alphabet: Coefficient alphabet every parameter lives in.
        weights: M^1..M^n.
        points: z_1..z_n, symbolic or numeric, pairwise distinct.
        kappa: Nonzero twisting parameter.
    """

    alphabet: Alphabet
    weights: Tuple[RatFunc, ...]
    points: Tuple[RatFunc, ...]
    kappa: RatFunc

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.alphabet.coerce(m) for m in self.weights))
        object.__setattr__(self, "points", tuple(self.alphabet.coerce(z) for z in self.points))
        object.__setattr__(self, "kappa", self.alphabet.coerce(self.kappa))
        if not self.weights:
            raise ValueError("At least one marked point is required")
        if len(self.weights) != len(self.points):
            raise ValueError(f"{len(self.weights)} weights for {len(self.points)} points")
        if not self.kappa:
            raise ValueError("kappa must be nonzero")
        for i, zi in enumerate(self.points):
            for zj in self.points[i + 1:]:
                if zi == zj:
                    raise ValueError(f"Marked points must be distinct, got {zi} twice")

    @classmethod
    def symbolic(cls, n: int, points: Optional[Sequence[Union[int, Fraction]]] = None,
                 t: bool = False, alphabet: Optional[Alphabet] = None) -> "Config":
        """ Symbolic weights M1..Mn and kappa = k + 2; symbolic points unless given. """
        if alphabet is None:
            alphabet = Alphabet.standard(n, points=points is None, t=t)
        weights = tuple(alphabet[f"M{i}"] for i in range(1, n + 1))
        if points is None:
            pts = tuple(alphabet[f"z{i}"] for i in range(1, n + 1))
        else:
            pts = tuple(alphabet.const(z) for z in points)
        return cls(alphabet, weights, pts, alphabet["k"] + 2)

    @classmethod
    def numeric(cls, weights: Sequence, points: Sequence, kappa, alphabet: Optional[Alphabet] = None) -> "Config":
        alphabet = alphabet or Alphabet.standard(len(weights), points=False)
        return cls(alphabet, tuple(weights), tuple(points), kappa)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def infinity_weight(self) -> RatFunc:
        """M^(n+1) = M^1 + ... + M^n - 2."""
        return sum(self.weights, self.alphabet.zero) - 2

    @property
    def weight_sum(self) -> RatFunc:
        return sum(self.weights, self.alphabet.zero)

    def weight(self, i: int) -> RatFunc:
        return self.weights[i - 1]

    def point(self, i: int) -> RatFunc:
        return self.points[i - 1]

    def sites(self) -> range:
        return range(1, self.n + 1)

    def replace(self, **changes) -> "Config":
        return dataclasses.replace(self, **changes)

    def with_weight(self, i: int, value) -> "Config":
        weights = list(self.weights)
        weights[i - 1] = self.alphabet.coerce(value)
        return self.replace(weights=tuple(weights))

    def specialize(self, bindings) -> "Config":
        """Substitute symbol values into every parameter."""
        sub = self.alphabet.substitute
        return self.replace(weights=tuple(sub(m, bindings) for m in self.weights),
                            points=tuple(sub(z, bindings) for z in self.points),
                            kappa=sub(self.kappa, bindings))

    def is_numeric(self) -> bool:
        values = self.weights + (self.kappa,)
        return all(self.alphabet.is_constant(v) for v in values)
