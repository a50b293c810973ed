"""Resonance data and the restricted subcomplex."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from sl2forms.derham.basis import Config, DForm, DFunc, Elementary, PoleAt, PolyPow

logger = logging.getLogger("sl2forms.derham")


@dataclass(frozen=True)
class ResonanceProfile:
    """Resonance orders a_1..a_(n+1); None stands for infinity."""

    orders: Tuple[Optional[int], ...]

    @property
    def count(self) -> int:
        return sum(1 for a in self.orders if a is not None)

    def order(self, site: int) -> Optional[int]:
        return self.orders[site - 1]


def _numeric(cfg: Config, value) -> Fraction:
    q = cfg.alphabet.as_rational(value)
    if q is None:
        raise ValueError(f"Resonance data needs numeric parameters, got {value}")
    return q


def resonance_profile(cfg: Config) -> ResonanceProfile:
    kappa = _numeric(cfg, cfg.kappa)
    orders = []
    for m in cfg.weights:
        a = -_numeric(cfg, m) / kappa
        orders.append(int(a) if a.denominator == 1 and a >= 0 else None)
    a = _numeric(cfg, cfg.weight_sum) / kappa
    orders.append(int(a) if a.denominator == 1 and a >= 1 else None)
    return ResonanceProfile(tuple(orders))


def pole_order(key: Elementary, site: int, n: int, form: bool) -> int:
    """ Order of the pole of an elementary function or form at a site (n+1 is infinity).

    At infinity t^b dt has a pole of order b + 2, a logarithmic form a simple
    pole, higher pole forms none; the function t^b has order b.
    """
    if site <= n:
        return key.order if isinstance(key, PoleAt) and key.site == site else 0
    if isinstance(key, PolyPow):
        return key.degree + 2 if form else key.degree
    if form and key.order == 1:
        return 1
    return 0


def restricted_check(cfg: Config, element: Union[DForm, DFunc]) -> bool:
    """ True when the pole order at every resonant point is within its resonance order. """
    profile = resonance_profile(cfg)
    form = isinstance(element, DForm)
    for site, bound in enumerate(profile.orders, start=1):
        if bound is None:
            continue
        for key in element.keys():
            if pole_order(key, site, cfg.n, form) > bound:
                logger.debug("%s violates the pole bound %d at site %d", key, bound, site)
                return False
    return True
