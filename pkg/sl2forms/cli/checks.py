"""Check functions run by the verification driver.

Every function here is module-level and takes only plain values (ints,
strings, lists and dicts of strings) so that joblib can ship it to worker
processes; each one builds its own parameters and returns a CheckRecord.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional

from sl2forms.affine import Grade, PBWMonomial, VermaModule
from sl2forms.chainmap import (SiteConfig, central_residue, eta_injectivity_check, kz_leibniz_check,
                               l_minus1_commutator_check, lie_action_check, sl2_elementary, vacuum_tensor,
                               verify_chain_map)
from sl2forms.cli.models import FAIL, PASS, CheckRecord
from sl2forms.derham import Config, DForm, DFunc, PoleAt, PolyPow, Witness, log_form, parse_elementary
from sl2forms.dualform import factor_gram_determinant, gram_determinant, verify_identity_a, verify_identity_b
from sl2forms.field import Alphabet
from sl2forms.gaussmanin import (closed_matches_direct, covariant_derivative, covariant_matches_direct,
                                 defect_is_exact, flatness_defect, gm_connection_matrix,
                                 log_connection_formula, restricted_invariance)
from sl2forms.singular import (RelationCase, ResonancePoint, check_relation, compute_Xb, compute_Yb, is_singular,
                               leading_coefficient, mff_vector, proportional, verma_alphabet)

logger = logging.getLogger("sl2forms.cli")

Values = Dict[str, str]


def _record(name: str, suite: str, ok: bool, residual: str = "0", **details) -> CheckRecord:
    return CheckRecord(name=name, suite=suite, status=PASS if ok else FAIL, residual=residual,
                       details={key: str(value) for key, value in details.items()})


def _scalar(alphabet: Alphabet, values: Values, name: str):
    return alphabet.const(Fraction(values[name])) if name in values else alphabet[name]


def forms_config(n: int, points: Optional[List[str]], values: Values, t: bool = False) -> Config:
    """ Weights and level symbolic unless assigned; points symbolic when `points` is None. """
    alphabet = Alphabet.standard(n, points=points is None, t=t)
    weights = [_scalar(alphabet, values, f"M{i}") for i in range(1, n + 1)]
    if points is None:
        pts = [alphabet[f"z{i}"] for i in range(1, n + 1)]
    else:
        pts = [alphabet.const(Fraction(z)) for z in points]
    return Config(alphabet, tuple(weights), tuple(pts), _scalar(alphabet, values, "k") + 2)


def verma_module(values: Values) -> VermaModule:
    alphabet = verma_alphabet()
    return VermaModule(_scalar(alphabet, values, "M"), _scalar(alphabet, values, "k"))


# -- chain-map --

def chain_map(name: str, n: int, points: List[str], elem: str, grade_bound: int, values: Values) -> CheckRecord:
    cfg = SiteConfig(forms_config(n, points, values), grade_bound)
    check = verify_chain_map(cfg, DFunc({parse_elementary(elem): 1}))
    return _record(name, "chain-map", check.holds, check.residual.to_text())


def eta_injectivity(name: str, n: int, points: List[str], bound: int, values: Values) -> CheckRecord:
    cfg = SiteConfig(forms_config(n, points, values))
    check = eta_injectivity_check(cfg, bound)
    residual = "0" if check.injective else f"ranks {check.function_rank}/{check.functions}, {check.form_rank}/{check.forms}"
    return _record(name, "chain-map", check.injective, residual, functions=check.functions, forms=check.forms)


def lie_action(name: str, n: int, points: List[str], grade_bound: int, values: Values) -> CheckRecord:
    cfg = SiteConfig(forms_config(n, points, values), grade_bound)
    F = sl2_elementary("e", PoleAt(1, 1))
    G = sl2_elementary("f", PolyPow(1)) + sl2_elementary("h", PoleAt(n, 2))
    check = lie_action_check(cfg, F, G, vacuum_tensor(cfg))
    residue = central_residue(cfg, F, G)
    ok = check.holds and not residue
    return _record(name, "chain-map", ok, check.residual.to_text(), central_residue=residue)


# -- identities --

def identity(name: str, kind: str, b: int, values: Values) -> CheckRecord:
    module = verma_module(values)
    check = verify_identity_a(module, b) if kind == "a" else verify_identity_b(module, b)
    return _record(name, "identities", check.holds, check.residual.to_text())


# -- singular --

def _point(kind: str, b: int, kappa: Optional[str]) -> ResonancePoint:
    return ResonancePoint(kind, b, Fraction(kappa) if kappa is not None else None)


def _singular_vector(point: ResonancePoint, method: str = "direct"):
    if point.kind == "A":
        return compute_Xb(point.b, point, method)
    return compute_Yb(point.b, point, method)


def singular(name: str, kind: str, b: int, kappa: Optional[str]) -> CheckRecord:
    point = _point(kind, b, kappa)
    others = point.other_lines() if kappa is not None else []
    if others:
        return _record(name, "singular", False, "point also lies on " + ", ".join(map(str, others)))
    x = _singular_vector(point)
    cert = is_singular(x)
    lead_mono = PBWMonomial.standard(fs=(b,)) if kind == "A" else PBWMonomial.standard(es=(b,))
    lead = leading_coefficient(x, lead_mono)
    ok = cert.singular and lead == 1 and x.grade == point.grade
    residual = "0" if ok else f"e: {cert.e_image.to_text()}; fT: {cert.ft_image.to_text()}; leading: {lead}"
    return _record(name, "singular", ok, residual, grade=x.grade, leading=lead, vector=x.to_text())


def limit_consistency(name: str, kind: str, b: int, kappa: Optional[str]) -> CheckRecord:
    point = _point(kind, b, kappa)
    difference = _singular_vector(point, "direct") - _singular_vector(point, "limit")
    return _record(name, "singular", not difference, difference.to_text())


def mff(name: str, case: str, kappa: Optional[str]) -> CheckRecord:
    b = 1 if case == "F21_a1" else 2
    point = _point("B", b, kappa)
    y = compute_Yb(b, point)
    expected = mff_vector(case, point.module(verma_alphabet()))
    if case == "F21_a1":
        difference = y - expected
        return _record(name, "singular", not difference, difference.to_text())
    ok = proportional(y, expected) and is_singular(expected).singular
    return _record(name, "singular", ok, "0" if ok else f"{y.to_text()} vs {expected.to_text()}")


# -- relations --

def relation(name: str, kind: str, b: int, p: Optional[int], n: int, points: List[str], values: Values) -> CheckRecord:
    cfg = forms_config(n, points, values)
    coefficients, result = check_relation(RelationCase(kind, b, p), cfg)
    ok = isinstance(result, Witness)
    witness = result.primitive.to_text() if ok else "none"
    return _record(name, "relations", ok, "0" if ok else f"no witness up to order {result.bound}",
                   coefficients="; ".join(str(c) for c in coefficients), witness=witness)


# -- gauss-manin --

def closed_form(name: str, n: int, elem: str) -> CheckRecord:
    cfg = forms_config(n, None, {}, t=True)
    key = parse_elementary(elem)
    ok = closed_matches_direct(cfg, key)
    ok = ok and all(covariant_matches_direct(cfg, DForm({key: 1}), j) for j in cfg.sites())
    return _record(name, "gauss-manin", ok)


def log_connection(name: str, n: int, i: int, j: int) -> CheckRecord:
    cfg = forms_config(n, None, {})
    lhs = covariant_derivative(cfg, log_form(cfg, i), j).scale(cfg.kappa)
    residual = lhs - log_connection_formula(cfg, i, j)
    return _record(name, "gauss-manin", not residual, residual.to_text())


def flatness(name: str, n: int) -> CheckRecord:
    cfg = forms_config(n, None, {})
    matrix = gm_connection_matrix(cfg)
    failures = []
    for p in cfg.sites():
        for q in range(p + 1, cfg.n + 1):
            for source in cfg.sites():
                defect = flatness_defect(cfg, matrix, p, q, source)
                if not defect_is_exact(cfg, defect):
                    failures.append(f"[{p},{q}] omega_{source}: " + ", ".join(map(str, defect)))
    return _record(name, "gauss-manin", not failures, "; ".join(failures) or "0")


def restricted(name: str, n: int) -> CheckRecord:
    """ Resonant data kappa = 1, M^1 = -1 (resonance order 1 at z_1), other weights 1/3. """
    alphabet = Alphabet.standard(n)
    weights = [Fraction(-1)] + [Fraction(1, 3)] * (n - 1)
    cfg = Config(alphabet, tuple(weights), tuple(alphabet[f"z{i}"] for i in range(1, n + 1)), 1)
    return _record(name, "gauss-manin", restricted_invariance(cfg))


# -- gram --

def gram(name: str, p1: int, p2: int, values: Values) -> CheckRecord:
    factorization = factor_gram_determinant(verma_module(values), Grade(p1, p2))
    factors = ", ".join(f"{line}^{count}" for line, count in sorted(factorization.factors.items()))
    return _record(name, "gram", factorization.is_complete, str(factorization.residual),
                   determinant=factorization.determinant, factors=factors)


def gram_oracle(name: str, values: Values) -> CheckRecord:
    """ The grade (1,1) determinant is 2M(k - M)(k + 2) up to sign. """
    module = verma_module(values)
    det = gram_determinant(module, Grade(1, 1))
    expected = 2 * module.weight * (module.level - module.weight) * module.kappa
    ok = det == expected or det == -expected
    return _record(name, "gram", ok, "0" if ok else f"{det} != +-({expected})")


# -- l-minus-one --

def commutator(name: str, letter: str, i: int, degree_max: int, values: Values) -> CheckRecord:
    check = l_minus1_commutator_check(verma_module(values), letter, i, degree_max)
    return _record(name, "l-minus-one", check.holds, "; ".join(check.failures) or "0", checked=check.checked)


def kz_leibniz(name: str, n: int, site: int, grade_bound: int) -> CheckRecord:
    cfg = SiteConfig(forms_config(n, None, {}), grade_bound)
    check = kz_leibniz_check(cfg, sl2_elementary("f", PoleAt(1, 1)), site)
    return _record(name, "l-minus-one", check.holds, check.residual.to_text())
