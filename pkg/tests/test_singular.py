from fractions import Fraction

import pytest

from sl2forms.affine import Grade, Order, PBWMonomial, ReducibilityLine
from sl2forms.derham import Config, DFunc, NotExact, PolyPow, Witness, log_combination, twisted_d, verify_relation
from sl2forms.dualform import dual_monomial, shapovalov_apply
from sl2forms.field import EPS
from sl2forms.singular import (RelationCase, ResonancePoint, check_relation, compute_Xb, compute_Yb, is_singular,
                               leading_coefficient, mff_vector, proportional, resonance_relation, resonant_config,
                               resonant_weights, verma_alphabet)
from sl2forms.utils import compositions


def mono(**kwargs) -> PBWMonomial:
    return PBWMonomial.standard(**kwargs)


@pytest.fixture
def relation_cfg():
    return Config.symbolic(2, points=(Fraction(1, 2), 3))


def test_resonance_point_validation():
    with pytest.raises(ValueError):
        ResonancePoint("C", 1)
    with pytest.raises(ValueError):
        ResonancePoint("B", 0)
    with pytest.raises(ValueError):
        ResonancePoint("A", 1, Fraction(0))
    assert ResonancePoint("A", 1).grade == Grade(2, 1)
    assert ResonancePoint("B", 1).grade == Grade(0, 1)
    assert str(ResonancePoint("A", 2, Fraction(1, 3))) == "A2@kappa=1/3"


def test_resonance_point_weights():
    A = verma_alphabet()
    kappa = A["k"] + 2
    assert ResonancePoint("A", 2).weight(A) == -2 * kappa
    assert ResonancePoint("B", 1).weight(A) == A["k"]
    assert ResonancePoint("B", 1, Fraction(1, 2)).weight(A, deformed=True) == A.const(Fraction(-3, 2)) + A[EPS]


def test_other_lines():
    assert ReducibilityLine("a", 2, 3) in ResonancePoint("A", 1, Fraction(1)).other_lines()
    assert ResonancePoint("A", 1, Fraction(1, 3)).other_lines() == []
    assert ResonancePoint("A", 1).other_lines() == []


@pytest.mark.parametrize("b", [1, pytest.param(2, marks=pytest.mark.slow)])
def test_xb_inverts_shapovalov(module, b):
    x = compute_Xb(b, module)
    assert x.grade == Grade(b + 1, b)
    expected = dual_monomial(module, mono(fs=(b,))).scale(module.weight + b * module.kappa)
    assert shapovalov_apply(x) == expected


@pytest.mark.parametrize("b", [1, 2])
def test_yb_inverts_shapovalov(module, b):
    y = compute_Yb(b, module)
    assert y.grade == Grade(b - 1, b)
    M, k, kappa = module.weight, module.level, module.kappa
    expected = dual_monomial(module, mono(es=(b,))).scale(k - M + (b - 1) * kappa)
    assert shapovalov_apply(y) == expected


def test_index_ranges(module):
    with pytest.raises(ValueError):
        compute_Xb(-1, module)
    with pytest.raises(ValueError):
        compute_Yb(0, module)
    with pytest.raises(ValueError):
        compute_Xb(1, ResonancePoint("A", 1), method="series")


def test_x1_on_its_line():
    point = ResonancePoint("A", 1)
    x = compute_Xb(1, point)
    M = point.weight(verma_alphabet())
    assert is_singular(x).singular
    assert leading_coefficient(x, mono(fs=(1,)), Order.EHF) == 1
    assert leading_coefficient(x, mono(es=(1,), fs=(0, 0)), Order.EHF) == -1 / (M * (M - 1))
    assert leading_coefficient(x, mono(hs=(1,), fs=(0,)), Order.EHF) == -1 / M


def test_limit_matches_direct_evaluation():
    point = ResonancePoint("A", 1)
    assert compute_Xb(1, point, method="limit") == compute_Xb(1, point)


def test_x0_is_f_v():
    point = ResonancePoint("A", 0)
    x = compute_Xb(0, point)
    assert dict(x.items()) == {mono(fs=(0,)): 1}
    assert is_singular(x).singular


def test_y1_is_singular_on_its_line():
    point = ResonancePoint("B", 1)
    y = compute_Yb(1, point)
    assert dict(y.items()) == {mono(es=(1,)): 1}
    assert is_singular(y).singular


@pytest.mark.parametrize("kind,b,grade", [
    ("A", 1, Grade(2, 1)),
    ("A", 2, Grade(3, 2)),
    ("A", 3, Grade(4, 3)),
    ("B", 1, Grade(0, 1)),
    ("B", 2, Grade(1, 2)),
    ("B", 3, Grade(2, 3)),
])
def test_singular_on_own_line(kind, b, grade):
    point = ResonancePoint(kind, b)
    if kind == "A":
        x, lead = compute_Xb(b, point), mono(fs=(b,))
    else:
        x, lead = compute_Yb(b, point), mono(es=(b,))
    assert x.grade == grade
    assert is_singular(x).singular
    assert leading_coefficient(x, lead) == 1


def test_vacuum_is_not_singular(module):
    certificate = is_singular(module.vacuum())
    assert not certificate.e_image and not certificate.ft_image
    assert certificate.vacuum_multiple
    assert not certificate.singular


def test_proportional(module):
    x = module.monomial(mono(hs=(1,))) + module.monomial(mono(fs=(0,), es=(1,))).scale(module.weight)
    assert proportional(x, x.scale(3))
    assert not proportional(module.monomial(mono(hs=(1,))), module.monomial(mono(fs=(0,), es=(1,))))


def test_mff_vectors():
    point = ResonancePoint("B", 1)
    assert mff_vector("F21_a1", point.module(verma_alphabet())) == compute_Yb(1, point)
    point = ResonancePoint("B", 2)
    module = point.module(verma_alphabet())
    z = mff_vector("F21_a2", module)
    assert is_singular(z).singular
    assert proportional(z, compute_Yb(2, point))
    with pytest.raises(ValueError):
        mff_vector("F32", module)


def test_relation_case_validation(relation_cfg):
    with pytest.raises(ValueError):
        RelationCase("A", 1)
    with pytest.raises(ValueError):
        RelationCase("B", 0)
    with pytest.raises(ValueError):
        RelationCase("C", 1)
    with pytest.raises(ValueError):
        resonant_weights(RelationCase("A", 1, p=3), relation_cfg)
    assert str(RelationCase("A", 2, p=1)) == "A(2,p=1)"


def test_resonant_weights(relation_cfg):
    cfg = relation_cfg
    M1 = cfg.weight(1)
    assert resonant_weights(RelationCase("B", 2), cfg) == (M1, 2 * cfg.kappa - M1)
    assert resonant_weights(RelationCase("A", 1, p=2), cfg) == (M1, -cfg.kappa)
    assert resonant_config(RelationCase("B", 1), cfg).weight_sum == cfg.kappa


def test_relation_b1(relation_cfg):
    cfg = relation_cfg
    coefficients, result = check_relation(RelationCase("B", 1), cfg)
    assert coefficients == [cfg.point(1), cfg.point(2)]
    assert isinstance(result, Witness)
    assert result.primitive == DFunc({PolyPow(1): -cfg.kappa})


def test_relation_b2(relation_cfg):
    cfg = relation_cfg
    case = RelationCase("B", 2)
    weights = resonant_weights(case, cfg)
    p1 = sum(m * z for m, z in zip(weights, cfg.points))
    coefficients, result = check_relation(case, cfg)
    assert coefficients == [z ** 2 - p1 / cfg.kappa * z for z in cfg.points]
    assert isinstance(result, Witness)
    assert result.primitive == DFunc({PolyPow(2): -cfg.kappa, PolyPow(1): p1})


@pytest.fixture
def numeric3():
    """Three points with numeric weights that only resonate where a case puts them."""
    return Config.numeric([Fraction(1, 3), Fraction(1, 5), Fraction(2, 9)], [0, 1, 3], Fraction(3, 7))


def _index_weighted(moments, b, kappa, lead):
    # each moment divided by its own index instead of the running total
    for l0 in (range(1, b + 1) if lead else (0,)):
        rest = b - l0
        for m in range(0 if rest == 0 else 1, rest + 1):
            for parts in compositions(rest, m):
                value = kappa.field.one / (-kappa) ** m
                for l in parts:
                    value = value * moments[l] / l
                yield l0, value


def index_weighted_relation(case, cfg):
    cfg = resonant_config(case, cfg)
    zero, b = cfg.alphabet.zero, case.b
    coefficients = [zero] * cfg.n
    if case.kind == "B":
        moments = {l: sum((m * z ** l for m, z in zip(cfg.weights, cfg.points)), zero) for l in range(1, b + 1)}
        for l0, value in _index_weighted(moments, b, cfg.kappa, True):
            for j in range(cfg.n):
                coefficients[j] += value * cfg.points[j] ** l0
        return coefficients
    zp = cfg.point(case.p)
    others = [j for j in cfg.sites() if j != case.p]
    moments = {l: sum((cfg.weight(j) / (cfg.point(j) - zp) ** l for j in others), zero) for l in range(1, b + 1)}
    for l0, value in _index_weighted(moments, b, cfg.kappa, True):
        for j in others:
            coefficients[j - 1] += value / (cfg.point(j) - zp) ** l0
    for _, value in _index_weighted(moments, b, cfg.kappa, False):
        coefficients[case.p - 1] -= value
    return coefficients


@pytest.mark.parametrize("case", [RelationCase("B", 3), RelationCase("B", 4), RelationCase("A", 2, p=1),
                                  RelationCase("A", 3, p=2)], ids=str)
def test_relation_three_points(numeric3, case):
    cfg = resonant_config(case, numeric3)
    coefficients, result = check_relation(case, numeric3)
    assert isinstance(result, Witness)
    assert twisted_d(cfg, result.primitive) == log_combination(cfg, coefficients)

    unit = [cfg.alphabet.zero] * cfg.n
    unit[(case.p or 1) - 1] = cfg.alphabet.one
    assert isinstance(verify_relation(cfg, unit, case.b + 1), NotExact)

    other = index_weighted_relation(case, numeric3)
    assert other != coefficients
    assert isinstance(verify_relation(cfg, other, case.b + 1), NotExact)


def test_relation_a1(relation_cfg):
    cfg = relation_cfg
    z1, z2 = cfg.points
    M2 = cfg.weight(2)
    case = RelationCase("A", 1, p=1)
    assert resonance_relation(case, cfg) == [M2 / (cfg.kappa * (z2 - z1)), 1 / (z2 - z1)]
    _, result = check_relation(case, cfg)
    assert isinstance(result, Witness)


def test_relation_fails_off_resonance(relation_cfg):
    cfg = relation_cfg
    result = verify_relation(cfg, [cfg.point(1), cfg.point(2)], 2)
    assert isinstance(result, NotExact)
