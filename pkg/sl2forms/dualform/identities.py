"""Contragradient identities relating (f/T^b) v* and (e/T^b) v* to raising corrections."""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from sl2forms.affine.lie import Gen
from sl2forms.affine.pbw import PBWMonomial
from sl2forms.affine.verma import VermaModule
from sl2forms.dualform.shapovalov import DualVector, contragradient_act, dual_monomial, dual_vacuum

logger = logging.getLogger("sl2forms.dualform")


@dataclass
class IdentityCheck:
    name: str
    lhs: DualVector
    rhs: DualVector

    @property
    def residual(self) -> DualVector:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return not self.residual


def f_pairs(total: int) -> List[Tuple[int, int]]:
    """(i, j) with i + j = total and i >= j >= 0."""
    return [(i, total - i) for i in range(total, -1, -1) if i >= total - i]


def e_pairs(total: int) -> List[Tuple[int, int]]:
    """(i, j) with i + j = total and i >= j >= 1."""
    return [(i, total - i) for i in range(total - 1, 0, -1) if i >= total - i]


def _dual_sum(module: VermaModule, monomials: List[PBWMonomial]) -> DualVector:
    result = dual_monomial(module, monomials[0])
    for mono in monomials[1:]:
        result = result + dual_monomial(module, mono)
    return result


def f_correction_duals(module: VermaModule, total: int) -> DualVector:
    """ sum over i + j = total, i >= j >= 0 of ((f/T^i)(f/T^j) v)*. """
    return _dual_sum(module, [PBWMonomial.standard(fs=pair) for pair in f_pairs(total)])


def e_correction_duals(module: VermaModule, total: int) -> DualVector:
    """ sum over i + j = total, i >= j >= 1 of ((e/T^i)(e/T^j) v)*. """
    return _dual_sum(module, [PBWMonomial.standard(es=pair) for pair in e_pairs(total)])


def identity_a_rhs(module: VermaModule, b: int) -> DualVector:
    rhs = contragradient_act(module, Gen("f", -b), dual_vacuum(module))
    for l in range(1, b + 1):
        corr_e = contragradient_act(module, Gen("e", -l), f_correction_duals(module, b - l))
        corr_h = contragradient_act(module, Gen("h", -l), dual_monomial(module, PBWMonomial.standard(fs=(b - l,))))
        rhs = rhs - corr_e.scale(2) - corr_h
    return rhs


def verify_identity_a(module: VermaModule, b: int) -> IdentityCheck:
    """ (M + b kappa) ((f/T^b) v)* against (f/T^b) v* minus the raising corrections. """
    if b < 1:
        raise ValueError("identity (a) needs b >= 1")
    lhs = dual_monomial(module, PBWMonomial.standard(fs=(b,))).scale(module.weight + b * module.kappa)
    return IdentityCheck(f"identity-a/b={b}", lhs, identity_a_rhs(module, b))


def identity_b_rhs(module: VermaModule, b: int) -> DualVector:
    rhs = contragradient_act(module, Gen("e", -b), dual_vacuum(module))
    for l in range(0, b - 1):
        corr_f = contragradient_act(module, Gen("f", -l), e_correction_duals(module, b - l))
        corr_h = contragradient_act(module, Gen("h", -(l + 1)),
                                    dual_monomial(module, PBWMonomial.standard(es=(b - l - 1,))))
        rhs = rhs - corr_f.scale(2) + corr_h
    return rhs


def verify_identity_b(module: VermaModule, b: int) -> IdentityCheck:
    """ (k - M + (b - 1) kappa) ((e/T^b) v)* against (e/T^b) v* plus the corrections. """
    if b < 2:
        raise ValueError("identity (b) needs b >= 2")
    factor = module.level - module.weight + (b - 1) * module.kappa
    lhs = dual_monomial(module, PBWMonomial.standard(es=(b,))).scale(factor)
    return IdentityCheck(f"identity-b/b={b}", lhs, identity_b_rhs(module, b))
