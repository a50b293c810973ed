"""Sites, tensor products of contragradient Verma modules, and sl2-valued functions."""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Tuple

from sl2forms.affine.pbw import PBWMonomial
from sl2forms.affine.verma import VermaModule
from sl2forms.combination import Combination
from sl2forms.derham.basis import Config, DFunc, Elementary
from sl2forms.field import Alphabet, RatFunc

TensorKey = Tuple[PBWMonomial, ...]


@dataclass(frozen=True)
class SiteConfig:
    """ Marked points z_1..z_n plus infinity, each carrying a contragradient Verma module.

    Attributes:
        forms: Twisting data for the same points; kappa = k + 2 fixes the level.
        grade_bound: Largest total degree p1 + p2 allowed in any tensor factor.
    """

    forms: Config
    grade_bound: int = 8

    @classmethod
    def symbolic(cls, n: int, points: Optional[Sequence] = None, grade_bound: int = 8,
                 alphabet: Optional[Alphabet] = None) -> "SiteConfig":
        return cls(Config.symbolic(n, points=points, alphabet=alphabet), grade_bound)

    @property
    def n(self) -> int:
        return self.forms.n

    @property
    def alphabet(self) -> Alphabet:
        return self.forms.alphabet

    @property
    def kappa(self) -> RatFunc:
        return self.forms.kappa

    @property
    def level(self) -> RatFunc:
        return self.forms.kappa - 2

    @property
    def infinity(self) -> int:
        return self.n + 1

    def sites(self) -> range:
        """All sites, the last one being infinity."""
        return range(1, self.n + 2)

    def weight(self, site: int) -> RatFunc:
        if site == self.infinity:
            return self.forms.infinity_weight
        return self.forms.weight(site)

    @cached_property
    def modules(self) -> Tuple[VermaModule, ...]:
        return tuple(VermaModule(self.weight(s), self.level) for s in self.sites())

    def module(self, site: int) -> VermaModule:
        return self.modules[site - 1]


class TensorDual(Combination):
    """ Linear combination of pure tensors of dual PBW basis vectors, one factor per site. """

    __slots__ = ()

    def to_text(self) -> str:
        if not self:
            return "0"
        parts = []
        for key, c in self.sorted_items(tensor_sort_key):
            parts.append(f"({c})*" + "@".join(f"({m})*" for m in key))
        return " + ".join(parts)


def tensor_sort_key(key: TensorKey):
    return tuple(m.sort_key() for m in key)


def vacuum_key(cfg: SiteConfig) -> TensorKey:
    return tuple(PBWMonomial() for _ in cfg.sites())


def vacuum_tensor(cfg: SiteConfig) -> TensorDual:
    return TensorDual({vacuum_key(cfg): cfg.alphabet.one})


def replace_factor(key: TensorKey, site: int, mono: PBWMonomial) -> TensorKey:
    return key[:site - 1] + (mono,) + key[site:]


def site_tensor(cfg: SiteConfig, site: int, mono: PBWMonomial, coeff=None) -> TensorDual:
    """The vacuum tensor with one factor replaced by a dual basis vector."""
    coeff = cfg.alphabet.one if coeff is None else coeff
    return TensorDual({replace_factor(vacuum_key(cfg), site, mono.in_order(mono.grade.order)): coeff})


class GlobalSl2Func(Combination):
    """ sl2-valued rational function: keys (letter, elementary function). """

    __slots__ = ()

    def to_text(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"({c})*{letter}[{elem}]" for (letter, elem), c in self.sorted_items(_func_key))


def _func_key(key):
    letter, elem = key
    return (letter, elem.sort_key())


def sl2_function(letter: str, scalar: DFunc) -> GlobalSl2Func:
    return GlobalSl2Func([((letter, elem), c) for elem, c in scalar.items()])


def sl2_elementary(letter: str, elem: Elementary, coeff=1) -> GlobalSl2Func:
    return GlobalSl2Func({(letter, elem): coeff})


class Chain1(Combination):
    """ Degree -1 chains: keys (letter, elementary function, tensor key). """

    __slots__ = ()

    def to_text(self) -> str:
        if not self:
            return "0"
        parts = []
        for (letter, elem, key), c in self.sorted_items(lambda k: (k[0], k[1].sort_key(), tensor_sort_key(k[2]))):
            parts.append(f"({c})*{letter}[{elem}]#" + "@".join(f"({m})*" for m in key))
        return " + ".join(parts)


def chain_term(letter: str, elem: Elementary, tensor: TensorDual, coeff=1) -> Chain1:
    return Chain1([((letter, elem, key), coeff * c) for key, c in tensor.items()])


@dataclass
class TensorCheck:
    """ An equality of tensors; holds when the residual vanishes. """

    name: str
    lhs: TensorDual
    rhs: TensorDual

    @property
    def residual(self) -> TensorDual:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return not self.residual
