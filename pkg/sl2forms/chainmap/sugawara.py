"""The translation operator L_-1 and the KZ derivative on tensor products of duals."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from sl2forms.affine.lie import Gen
from sl2forms.affine.pbw import Grade, component_basis
from sl2forms.affine.verma import VermaModule
from sl2forms.chainmap.action import derivative_in_point, mu_act
from sl2forms.chainmap.tensor import (GlobalSl2Func, SiteConfig, TensorCheck, TensorDual, TensorKey, replace_factor,
                                      vacuum_tensor)
from sl2forms.combination import Combination
from sl2forms.dualform.shapovalov import contragradient_act, dual_monomial
from sl2forms.errors import TruncationTooSmall
from sl2forms.field import RatFunc

logger = logging.getLogger("sl2forms.chainmap")

# e (x) f + f (x) e + 1/2 h (x) h, scaled by 2
CASIMIR_TERMS = (("e", "f", 2), ("f", "e", 2), ("h", "h", 1))


def l_minus_one(act: Callable[[Gen, Combination], Combination], x: Combination, kappa: RatFunc) -> Combination:
    """ L_-1 x = 1/(2 kappa) sum_{i >= 0} [2 eT^(-i-1) fT^i + 2 fT^(-i-1) eT^i + hT^(-i-1) hT^i] x.

    Works for Verma vectors and for contragradient vectors alike: `act` is the
    action of one generator and `x` carries `module` and `grade`.
    """
    target = x.grade + (1, 1)
    result = type(x)(x.module, target)
    for i in range(0, x.grade.p2 + 2):
        for left, right, weight in CASIMIR_TERMS:
            inner = act(Gen(right, i), x)
            if not inner:
                continue
            outer = act(Gen(left, -i - 1), inner)
            if outer:
                result = result + outer.scale(weight)
    return result / (2 * kappa)


def verma_l_minus_one(module: VermaModule, x):
    return l_minus_one(module.act, x, module.kappa)


def dual_l_minus_one(module: VermaModule, phi):
    return l_minus_one(lambda g, p: contragradient_act(module, g, p), phi, module.kappa)


@dataclass
class CommutatorCheck:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def l_minus1_commutator_check(module: VermaModule, letter: str, i: int, degree_max: int) -> CommutatorCheck:
    """ [L_-1, X T^i] = -i X T^(i-1) on every basis vector of total degree <= degree_max. """
    g, shifted = Gen(letter, i), Gen(letter, i - 1)
    check = CommutatorCheck(f"l-minus-one/{g}")
    for total in range(degree_max + 1):
        for p2 in range(total + 1):
            for mono in component_basis(Grade(total - p2, p2)):
                x = module.monomial(mono)
                lhs = verma_l_minus_one(module, module.act(g, x)) - module.act(g, verma_l_minus_one(module, x))
                rhs = module.act(shifted, x).scale(-i)
                check.checked += 1
                residual = lhs - rhs
                if residual:
                    check.failures.append(f"{mono}: {residual.to_text()}")
    if check.failures:
        logger.debug("%s failed on %d of %d vectors", check.name, len(check.failures), check.checked)
    return check


def kz_derivative(cfg: SiteConfig, w: TensorDual, i: int) -> TensorDual:
    """ (d/dz_i + L_-1 at site i) w; the points must be symbolic. """
    alphabet = cfg.alphabet
    module = cfg.module(i)
    out: Dict[TensorKey, RatFunc] = {}

    def add(key: TensorKey, value: RatFunc):
        out[key] = out[key] + value if key in out else value

    for key, c in w.items():
        dc = alphabet.diff(alphabet.coerce(c), f"z{i}")
        if dc:
            add(key, dc)
        image = dual_l_minus_one(module, dual_monomial(module, key[i - 1]))
        if image and image.grade.total > cfg.grade_bound:
            raise TruncationTooSmall(i, image.grade, cfg.grade_bound)
        for mono, d in image.items():
            add(replace_factor(key, i, mono), c * d)
    return TensorDual(out)


def kz_leibniz_check(cfg: SiteConfig, F: GlobalSl2Func, i: int, G: Optional[TensorDual] = None) -> TensorCheck:
    """ nabla_i(mu(F) G) against mu(d F/dz_i) G + mu(F) nabla_i G. """
    G = vacuum_tensor(cfg) if G is None else G
    lhs = kz_derivative(cfg, mu_act(cfg, F, G), i)
    rhs = mu_act(cfg, derivative_in_point(cfg, F, i), G) + mu_act(cfg, F, kz_derivative(cfg, G, i))
    return TensorCheck(f"kz-leibniz/z{i}/{F.to_text()}", lhs, rhs)
