"""Shapovalov form, contragradient duals and Shapovalov inversion."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from sl2forms.affine.kac_kazhdan import kac_kazhdan_lines
from sl2forms.affine.lie import Gen, transpose, transpose_anti
from sl2forms.affine.pbw import Grade, Order, PBWMonomial, component_basis
from sl2forms.affine.verma import VermaModule, VermaVector
from sl2forms.combination import Combination
from sl2forms.errors import GramSingular, Singular
from sl2forms.field import RatFunc, determinant, solve_linear

logger = logging.getLogger("sl2forms.dualform")


class DualVector(Combination):
    """ Element of a graded piece of the contragradient module, in the basis dual to the PBW basis. """

    __slots__ = ("module", "grade")

    def __init__(self, module: VermaModule, grade: Grade, terms=None):
        super().__init__(terms)
        self.module = module
        self.grade = grade

    def _new(self, terms):
        return type(self)(self.module, self.grade, terms)

    def to_text(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"({c})*({m})*" for m, c in self.sorted_items(lambda m: m.sort_key()))


def dual_vacuum(module: VermaModule) -> DualVector:
    return DualVector(module, Grade(0, 0), {PBWMonomial(): module.one})


def dual_monomial(module: VermaModule, mono: PBWMonomial) -> DualVector:
    """The dual basis functional of a PBW monomial, taken in the standard order of its grade."""
    mono = mono.in_order(mono.grade.order)
    return DualVector(module, mono.grade, {mono: module.one})


@dataclass
class GramMatrix:
    grade: Grade
    basis: Tuple[PBWMonomial, ...]
    entries: List[List[RatFunc]]

    @property
    def size(self) -> int:
        return len(self.basis)

    def entry(self, left: PBWMonomial, right: PBWMonomial) -> RatFunc:
        return self.entries[self.basis.index(left)][self.basis.index(right)]


def shapovalov_entry(module: VermaModule, left: PBWMonomial, right: PBWMonomial) -> RatFunc:
    """ S(left v, right v): the coefficient of v in tau(left) right v. """
    if left.grade != right.grade:
        return module.zero
    terms = module.normal_form(transpose_anti(left.word) + right.word, Order.FHE)
    return terms.get((), module.zero)


def shapovalov_gram(module: VermaModule, grade: Grade) -> GramMatrix:
    key = ("gram", grade)
    cached = module.memo.get(key)
    if cached is not None:
        return cached
    basis = component_basis(grade)
    size = len(basis)
    entries = [[module.zero] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = shapovalov_entry(module, basis[i], basis[j])
            entries[i][j] = value
            entries[j][i] = value
    gram = GramMatrix(grade, basis, entries)
    module.memo[key] = gram
    logger.debug("Gram matrix of grade %s has size %d", grade, size)
    return gram


def gram_determinant(module: VermaModule, grade: Grade) -> RatFunc:
    gram = shapovalov_gram(module, grade)
    if not gram.size:
        return module.one
    return determinant(gram.entries)


def shapovalov_pairing(x: VermaVector, y: VermaVector) -> RatFunc:
    module = x.module
    if x.grade != y.grade:
        return module.zero
    gram = shapovalov_gram(module, x.grade)
    index = {m: i for i, m in enumerate(gram.basis)}
    total = module.zero
    for a, ca in x.items():
        for b, cb in y.items():
            value = gram.entries[index[a]][index[b]]
            if value:
                total += ca * cb * value
    return total


def shapovalov_apply(x: VermaVector) -> DualVector:
    """ The functional S(x, -) in dual coordinates. """
    module = x.module
    gram = shapovalov_gram(module, x.grade)
    index = {m: i for i, m in enumerate(gram.basis)}
    coords: Dict[PBWMonomial, RatFunc] = {}
    for j, target in enumerate(gram.basis):
        total = module.zero
        for a, ca in x.items():
            value = gram.entries[index[a]][j]
            if value:
                total += ca * value
        coords[target] = total
    return DualVector(module, x.grade, coords)


def _transposed_image(module: VermaModule, g: Gen, mono: PBWMonomial) -> VermaVector:
    key = ("transposed", g, mono)
    cached = module.memo.get(key)
    if cached is None:
        cached = module.act(transpose(g), module.monomial(mono))
        module.memo[key] = cached
    return cached


def contragradient_act(module: VermaModule, g: Gen, phi: DualVector) -> DualVector:
    """ (g phi)(x) = phi(tau(g) x), landing in grade phi.grade + deg(g). """
    target = phi.grade + g.degree
    if not target.is_valid or not phi:
        return DualVector(module, target)
    if g.letter == "c":
        return phi.scale(module.level)
    coords: Dict[PBWMonomial, RatFunc] = {}
    for x in component_basis(target):
        image = _transposed_image(module, g, x)
        total = module.zero
        for mono, c in image.items():
            value = phi.coeff(mono)
            if value:
                total += value * c
        if total:
            coords[x] = total
    return DualVector(module, target, coords)


def shapovalov_inverse_apply(module: VermaModule, phi: DualVector) -> VermaVector:
    """ The vector x with S(x, -) = phi.

    Raises:
        GramSingular: The gram matrix of phi's grade is degenerate at these parameters.
    """
    gram = shapovalov_gram(module, phi.grade)
    rhs = [phi.coeff(m, module.zero) for m in gram.basis]
    try:
        solution = solve_linear(gram.entries, rhs)
    except Singular as exc:
        raise GramSingular(phi.grade, exc.rank, exc.size) from exc
    return module.vector(phi.grade, dict(zip(gram.basis, solution)))


@dataclass
class GramFactorization:
    grade: Grade
    determinant: RatFunc
    factors: Dict[str, int] = field(default_factory=dict)
    residual: Optional[RatFunc] = None

    @property
    def is_complete(self) -> bool:
        """The leftover after trial division is a nonzero constant."""
        r = self.residual
        return r is not None and bool(r) and r.numer.is_ground and r.denom.is_ground


def factor_gram_determinant(module: VermaModule, grade: Grade) -> GramFactorization:
    """ Divide the gram determinant by every reducibility form that fits the grade. """
    det = gram_determinant(module, grade)
    result = GramFactorization(grade, det)
    if not det:
        result.residual = det
        return result
    numer = det.numer
    bound = grade.total + 1
    for line in kac_kazhdan_lines(bound, bound):
        divisor = line.form(module.weight, module.kappa).numer
        if divisor.is_ground:
            continue
        count = 0
        while True:
            quotient, remainder = numer.div(divisor)
            if remainder:
                break
            numer = quotient
            count += 1
        if count:
            result.factors[str(line)] = count
    result.residual = det.field.new(numer, det.denom)
    return result
