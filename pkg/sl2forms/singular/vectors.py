"""Singular vectors X_b, Y_b by Shapovalov inversion, at generic parameters and on resonance lines."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from sl2forms.affine.kac_kazhdan import ReducibilityLine, lines_through
from sl2forms.affine.lie import Gen
from sl2forms.affine.pbw import Grade, Order, PBWMonomial
from sl2forms.affine.verma import VermaModule, VermaVector
from sl2forms.dualform.identities import e_correction_duals, f_correction_duals
from sl2forms.dualform.shapovalov import dual_monomial, shapovalov_inverse_apply
from sl2forms.errors import GramSingular, PoleAtZero
from sl2forms.field import EPS, Alphabet, RatFunc

logger = logging.getLogger("sl2forms.singular")

METHODS = ("direct", "limit")


def verma_alphabet() -> Alphabet:
    """Level k, highest weight M and the deformation parameter."""
    return Alphabet(("k", "M", EPS))


def generic_module(alphabet: Optional[Alphabet] = None) -> VermaModule:
    alphabet = alphabet or verma_alphabet()
    return VermaModule(alphabet["M"], alphabet["k"])


@dataclass(frozen=True)
class ResonancePoint:
    """ A point of the line M = -b kappa (kind "A") or M = -2 + b kappa (kind "B").

    Attributes:
        kind: "A" for the X_b lines, "B" for the Y_b lines.
        b: Position on the family of lines.
        kappa: Numeric kappa_0, or None for a generic symbolic point k + 2.
    """

    kind: str
    b: int
    kappa: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"Resonance kind must be 'A' or 'B', got {self.kind!r}")
        if self.b < (0 if self.kind == "A" else 1):
            raise ValueError(f"b = {self.b} is out of range for kind {self.kind}")
        if self.kappa is not None and Fraction(self.kappa) == 0:
            raise ValueError("kappa_0 must be nonzero")

    @property
    def line(self) -> ReducibilityLine:
        if self.kind == "A":
            return ReducibilityLine("a", 1, self.b + 1)
        return ReducibilityLine("b", 1, self.b)

    @property
    def grade(self) -> Grade:
        return self.line.degree

    def kappa_value(self, alphabet: Alphabet) -> RatFunc:
        if self.kappa is None:
            return alphabet["k"] + 2
        return alphabet.const(self.kappa)

    def weight(self, alphabet: Alphabet, deformed: bool = False) -> RatFunc:
        kappa = self.kappa_value(alphabet)
        weight = -self.b * kappa if self.kind == "A" else self.b * kappa - 2
        return weight + alphabet[EPS] if deformed else weight

    def module(self, alphabet: Alphabet, deformed: bool = False) -> VermaModule:
        return VermaModule(self.weight(alphabet, deformed), self.kappa_value(alphabet) - 2)

    def other_lines(self, l_max: int = 3, a_max: Optional[int] = None) -> List[ReducibilityLine]:
        """Reducibility lines other than the point's own that also pass through it."""
        alphabet = verma_alphabet()
        a_max = a_max or self.b + 2
        through = lines_through(self.weight(alphabet), self.kappa_value(alphabet), l_max, a_max)
        return [line for line in through if line != self.line]

    def __str__(self) -> str:
        base = "k+2" if self.kappa is None else str(self.kappa)
        return f"{self.kind}{self.b}@kappa={base}"


def _aux_x(module: VermaModule, b: int) -> VermaVector:
    """ (f/T^b)v minus the e- and h-corrections, each through Shapovalov inversion. """
    x = module.monomial(PBWMonomial.standard(fs=(b,)))
    for l in range(1, b + 1):
        pairs = shapovalov_inverse_apply(module, f_correction_duals(module, b - l))
        single = shapovalov_inverse_apply(module, dual_monomial(module, PBWMonomial.standard(fs=(b - l,))))
        x = x - module.act(Gen("e", -l), pairs).scale(2) - module.act(Gen("h", -l), single)
    return x


def _aux_y(module: VermaModule, b: int) -> VermaVector:
    y = module.monomial(PBWMonomial.standard(es=(b,)))
    for l in range(0, b - 1):
        pairs = shapovalov_inverse_apply(module, e_correction_duals(module, b - l))
        single = shapovalov_inverse_apply(module, dual_monomial(module, PBWMonomial.standard(es=(b - l - 1,))))
        y = y - module.act(Gen("f", -l), pairs).scale(2) + module.act(Gen("h", -(l + 1)), single)
    return y


def _limit(point: ResonancePoint, aux, b: int) -> VermaVector:
    alphabet = verma_alphabet()
    deformed = aux(point.module(alphabet, deformed=True), b)
    module = point.module(alphabet)
    return module.vector(deformed.grade, {m: alphabet.limit_eps(c) for m, c in deformed.items()})


def _compute(aux, b: int, target: Union[VermaModule, ResonancePoint], method: str) -> VermaVector:
    if method not in METHODS:
        raise ValueError(f"Unknown method {method!r}, expected one of {METHODS}")
    if isinstance(target, VermaModule):
        return aux(target, b)
    if method == "limit":
        return _limit(target, aux, b)
    try:
        return aux(target.module(verma_alphabet()), b)
    except GramSingular as exc:
        logger.warning("direct evaluation at %s failed (%s), taking the eps-limit", target, exc)
        try:
            return _limit(target, aux, b)
        except PoleAtZero:
            raise exc


def compute_Xb(b: int, target: Union[VermaModule, ResonancePoint], method: str = "direct") -> VermaVector:
    """ X_b = S^-1((M + b kappa) ((f/T^b) v)*) in grade (b + 1, b).

    Arguments:
        b: Non-negative index.
        target: A Verma module with generic parameters, or a point of the line M = -b kappa.
        method: At a resonance point, "direct" substitutes the point and falls back to the
            eps-limit if a gram matrix degenerates; "limit" always takes the eps-limit.

    Raises:
        GramSingular: Both the direct evaluation and the eps-limit failed.
    """
    if b < 0:
        raise ValueError("X_b needs b >= 0")
    return _compute(_aux_x, b, target, method)


def compute_Yb(b: int, target: Union[VermaModule, ResonancePoint], method: str = "direct") -> VermaVector:
    """ Y_b = S^-1((k - M + (b - 1) kappa) ((e/T^b) v)*) in grade (b - 1, b). """
    if b < 1:
        raise ValueError("Y_b needs b >= 1")
    return _compute(_aux_y, b, target, method)


@dataclass
class SingularityCertificate:
    e_image: VermaVector
    ft_image: VermaVector
    nonzero: bool
    vacuum_multiple: bool

    @property
    def singular(self) -> bool:
        return not self.e_image and not self.ft_image and self.nonzero and not self.vacuum_multiple


def is_singular(x: VermaVector) -> SingularityCertificate:
    """ Both Chevalley raising generators e and fT kill x, and x is a nonzero vector outside C v. """
    module = x.module
    return SingularityCertificate(
        e_image=module.act(Gen("e"), x),
        ft_image=module.act(Gen("f", 1), x),
        nonzero=bool(x),
        vacuum_multiple=x.grade == Grade(0, 0),
    )


def leading_coefficient(x: VermaVector, mono: PBWMonomial, order: Optional[Order] = None) -> RatFunc:
    """ Coefficient of a monomial after rewriting x in a block order, by default the
    one opposite to the standard order of x's grade.
    """
    if order is None:
        order = Order.EHF if x.grade.order == Order.FHE else Order.FHE
    rebased = x.module.rebase(x, order)
    return rebased.coeff(mono.in_order(order), x.module.zero)


def proportional(x: VermaVector, y: VermaVector) -> bool:
    """ True iff every 2x2 minor of the coordinate matrix of x and y vanishes. """
    if x.grade != y.grade:
        return not x or not y
    order = x.grade.order
    x, y = x.module.rebase(x, order), y.module.rebase(y, order)
    keys = sorted(set(x.keys()) | set(y.keys()), key=lambda m: m.sort_key())
    zero = x.module.zero
    xs = [x.coeff(m, zero) for m in keys]
    ys = [y.coeff(m, zero) for m in keys]
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if xs[i] * ys[j] - xs[j] * ys[i]:
                return False
    return True


MFF_CASES = ("F21_a1", "F21_a2")


def mff_vector(case: str, module: VermaModule) -> VermaVector:
    """ F21_a1 = (e/T) v; F21_a2 = f (e/T)^2 v + (1 + kappa)(h/T)(e/T) v - (1 + kappa) kappa (e/T^2) v. """
    vacuum = module.vacuum()
    if case == "F21_a1":
        return module.act(Gen("e", -1), vacuum)
    if case == "F21_a2":
        kappa = module.kappa
        first = module.act_word((Gen("f"), Gen("e", -1), Gen("e", -1)), vacuum)
        second = module.act_word((Gen("h", -1), Gen("e", -1)), vacuum).scale(1 + kappa)
        third = module.act(Gen("e", -2), vacuum).scale((1 + kappa) * kappa)
        return first + second - third
    raise ValueError(f"Unknown MFF case {case!r}, expected one of {MFF_CASES}")
