"""Cohomological relations between logarithmic forms at resonant weights."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sl2forms.derham import Config, NotExact, verify_relation
from sl2forms.field import RatFunc
from sl2forms.utils import compositions

logger = logging.getLogger("sl2forms.singular")


@dataclass(frozen=True)
class RelationCase:
    """ Kind "B": sum of the weights equals b kappa. Kind "A": M^p = -b kappa. """

    kind: str
    b: int
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"Relation kind must be 'A' or 'B', got {self.kind!r}")
        if self.b < 1:
            raise ValueError("Relations need b >= 1")
        if self.kind == "A" and (self.p is None or self.p < 1):
            raise ValueError("Kind A relations need a site p >= 1")

    def __str__(self) -> str:
        return f"B({self.b})" if self.kind == "B" else f"A({self.b},p={self.p})"


def resonant_weights(case: RelationCase, cfg: Config) -> Tuple[RatFunc, ...]:
    """ The weights with one of them solved from the resonance condition.

    Kind B fixes M^n = b kappa - (M^1 + ... + M^(n-1)); kind A fixes M^p = -b kappa.
    """
    weights = list(cfg.weights)
    if case.kind == "B":
        weights[-1] = case.b * cfg.kappa - sum(weights[:-1], cfg.alphabet.zero)
    else:
        if case.p > cfg.n:
            raise ValueError(f"Site p = {case.p} is beyond n = {cfg.n}")
        weights[case.p - 1] = -case.b * cfg.kappa
    return tuple(weights)


def resonant_config(case: RelationCase, cfg: Config) -> Config:
    return cfg.replace(weights=resonant_weights(case, cfg))


def _weighted_products(moments, b: int, kappa: RatFunc, lead: bool):
    """ Pairs (l0, c) summing (-kappa)^-m prod_i moments[l_i] / (l_1 + ... + l_i) over compositions.

    With `lead` the compositions are (l0; l1..lm) with l0 > 0 and m >= 0; without it
    l0 = 0 and m >= 1.
    """
    out = []
    first_parts = range(1, b + 1) if lead else (0,)
    for l0 in first_parts:
        rest = b - l0
        for m in range(0 if rest == 0 else 1, rest + 1):
            for parts in compositions(rest, m):
                value = kappa.field.one / (-kappa) ** m
                partial = 0
                for l in parts:
                    partial += l
                    value = value * moments[l] / partial
                out.append((l0, value))
    return out


def resonance_relation(case: RelationCase, cfg: Config) -> List[RatFunc]:
    """ Coefficients lambda_1..lambda_n with sum_j lambda_j omega_j exact at the resonant weights.

    The weights of `cfg` are replaced by `resonant_weights(case, cfg)` first.
    """
    cfg = resonant_config(case, cfg)
    kappa, zero = cfg.kappa, cfg.alphabet.zero
    n, b = cfg.n, case.b
    if case.kind == "B":
        moments = {l: sum((m * z ** l for m, z in zip(cfg.weights, cfg.points)), zero) for l in range(1, b + 1)}
        coefficients = [zero] * n
        for l0, value in _weighted_products(moments, b, kappa, lead=True):
            for j in range(n):
                coefficients[j] += value * cfg.points[j] ** l0
        return coefficients
    p = case.p
    zp = cfg.point(p)
    others = [j for j in cfg.sites() if j != p]
    moments = {l: sum((cfg.weight(j) / (cfg.point(j) - zp) ** l for j in others), zero) for l in range(1, b + 1)}
    coefficients = [zero] * n
    for l0, value in _weighted_products(moments, b, kappa, lead=True):
        for j in others:
            coefficients[j - 1] += value / (cfg.point(j) - zp) ** l0
    for _, value in _weighted_products(moments, b, kappa, lead=False):
        coefficients[p - 1] -= value
    return coefficients


def check_relation(case: RelationCase, cfg: Config, bound: Optional[int] = None):
    """ Look for a witness of the relation among functions of order <= bound (default b + 1). """
    coefficients = resonance_relation(case, cfg)
    result = verify_relation(resonant_config(case, cfg), coefficients, bound or case.b + 1)
    if isinstance(result, NotExact):
        logger.debug("no witness for %s up to order %d", case, result.bound)
    return coefficients, result
