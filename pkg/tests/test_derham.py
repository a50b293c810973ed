from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2forms.derham import (Config, DForm, DFunc, NotExact, PoleAt, PolyPow, Witness, function_basis, log_combination,
                             log_form, parse_elementary, pole_order, reduce_to_log, resonance_profile,
                             restricted_check, truncated_cohomology, twisted_d, verify_relation)
from sl2forms.errors import ResonanceObstruction
from sl2forms.field import Alphabet


def test_elementary_labels():
    assert parse_elementary("pole:2:3") == PoleAt(2, 3)
    assert parse_elementary("t") == PolyPow(1)
    assert parse_elementary("1") == PolyPow(0)
    assert parse_elementary("t^4") == PolyPow(4)
    for label in (PoleAt(1, 5), PolyPow(0), PolyPow(7)):
        assert parse_elementary(str(label)) == label
    with pytest.raises(ValueError):
        parse_elementary("sin(t)")
    with pytest.raises(ValueError):
        PoleAt(0, 1)
    with pytest.raises(ValueError):
        PolyPow(-1)


def test_config_validation():
    A = Alphabet.standard(2, points=False)
    with pytest.raises(ValueError):
        Config(A, (A["M1"], A["M2"]), (1, 1), A["k"] + 2)
    with pytest.raises(ValueError):
        Config(A, (A["M1"], A["M2"]), (0, 1), 0)
    with pytest.raises(ValueError):
        Config(A, (A["M1"],), (0, 1), 1)


def test_infinity_weight(symbolic2):
    A = symbolic2.alphabet
    assert symbolic2.infinity_weight == A["M1"] + A["M2"] - 2


def test_twisted_d_of_constant(symbolic2):
    cfg = symbolic2
    expected = DForm({PoleAt(i, 1): -cfg.weight(i) / cfg.kappa for i in cfg.sites()})
    assert twisted_d(cfg, DFunc({PolyPow(0): 1})) == expected


def test_twisted_d_single_pole():
    cfg = Config.symbolic(1)
    M1, kappa = cfg.weight(1), cfg.kappa
    assert twisted_d(cfg, DFunc({PoleAt(1, 1): 1})) == DForm({PoleAt(1, 2): -(M1 + kappa) / kappa})


def test_twisted_d_of_t(symbolic2):
    cfg = symbolic2
    kappa = cfg.kappa
    expected = DForm({PolyPow(0): (kappa - cfg.weight_sum) / kappa})
    for j in cfg.sites():
        expected += DForm({PoleAt(j, 1): -cfg.weight(j) * cfg.point(j) / kappa})
    assert twisted_d(cfg, DFunc({PolyPow(1): 1})) == expected


@given(st.lists(st.tuples(st.sampled_from(["pole:1:1", "pole:1:2", "pole:2:3", "1", "t", "t^3"]),
                          st.fractions(max_denominator=5)), max_size=4),
       st.fractions(max_denominator=5))
def test_twisted_d_is_linear(terms, scalar):
    cfg = Config.symbolic(2, points=(0, 3))
    f = DFunc([(parse_elementary(label), cfg.alphabet.const(c)) for label, c in terms])
    g = DFunc({PoleAt(2, 1): cfg.alphabet.one})
    s = cfg.alphabet.const(scalar)
    assert twisted_d(cfg, f.scale(s) + g) == twisted_d(cfg, f).scale(s) + twisted_d(cfg, g)


def test_log_forms(symbolic2):
    cfg = symbolic2
    assert log_form(cfg, 1) == DForm({PoleAt(1, 1): cfg.weight(1)})
    total = log_form(cfg, 1) + log_form(cfg, 2)
    assert not total + twisted_d(cfg, DFunc({PolyPow(0): 1})).scale(cfg.kappa)
    assert log_combination(cfg, [1, 1]) == total
    with pytest.raises(IndexError):
        log_form(cfg, 3)


def test_resonance_profile():
    profile = resonance_profile(Config.numeric([-2], [0], 1))
    assert profile.orders == (2, None)
    assert profile.count == 1

    profile = resonance_profile(Config.numeric([Fraction(1, 3)], [0], 1))
    assert profile.orders == (None, None)
    assert profile.count == 0

    profile = resonance_profile(Config.numeric([1, 1], [0, 1], 1))
    assert profile.orders == (None, None, 2)
    assert profile.order(3) == 2

    with pytest.raises(ValueError):
        resonance_profile(Config.symbolic(1, points=(0,)))


def test_restricted_check():
    cfg = Config.numeric([-2], [0], 1)
    assert restricted_check(cfg, DForm({PoleAt(1, 2): 1}))
    assert not restricted_check(cfg, DForm({PoleAt(1, 3): 1}))
    assert restricted_check(cfg, log_form(cfg, 1))

    cfg = Config.numeric([1, 1], [0, 1], 1)
    assert restricted_check(cfg, DForm({PolyPow(0): 1}))
    assert not restricted_check(cfg, DForm({PolyPow(1): 1}))
    assert all(restricted_check(cfg, log_form(cfg, i)) for i in cfg.sites())
    assert restricted_check(cfg, DFunc({PolyPow(2): 1}))
    assert not restricted_check(cfg, DFunc({PolyPow(3): 1}))


def test_pole_order_bookkeeping():
    assert pole_order(PoleAt(1, 3), 1, 2, form=True) == 3
    assert pole_order(PoleAt(1, 3), 2, 2, form=True) == 0
    assert pole_order(PolyPow(2), 3, 2, form=True) == 4
    assert pole_order(PolyPow(2), 3, 2, form=False) == 2
    assert pole_order(PoleAt(2, 1), 3, 2, form=True) == 1
    assert pole_order(PoleAt(2, 2), 3, 2, form=True) == 0


def test_verify_relation_total_log_form(numeric_points2):
    cfg = numeric_points2
    result = verify_relation(cfg, [1, 1], bound=1)
    assert isinstance(result, Witness)
    assert result.primitive == DFunc({PolyPow(0): -cfg.kappa})
    assert twisted_d(cfg, result.primitive) == log_combination(cfg, [1, 1])


def test_verify_relation_not_exact(numeric_points2):
    result = verify_relation(numeric_points2, [1, 0], bound=2)
    assert isinstance(result, NotExact)
    assert result.bound == 2
    with pytest.raises(ValueError):
        verify_relation(numeric_points2, [1, 0], bound=0)


def test_reduce_dt_to_log_forms(symbolic2):
    cfg = symbolic2
    gap = cfg.kappa - cfg.weight_sum
    reduction = reduce_to_log(cfg, DForm({PolyPow(0): 1}))
    assert reduction.coefficients == tuple(cfg.point(j) / gap for j in cfg.sites())
    assert reduction.primitive == DFunc({PolyPow(1): cfg.kappa / gap})


@pytest.mark.parametrize("label", ["pole:1:2", "pole:2:3", "t^2", "pole:1:1"])
def test_reduce_to_log_reconstructs(numeric_points2, label):
    cfg = numeric_points2
    omega = DForm({parse_elementary(label): 1})
    reduction = reduce_to_log(cfg, omega)
    assert log_combination(cfg, reduction.coefficients) + twisted_d(cfg, reduction.primitive) == omega


def functions(keys):
    return st.dictionaries(st.sampled_from(keys), st.integers(-3, 3).filter(bool), min_size=1).map(DFunc)


RESTRICTED_KEYS = [PoleAt(1, 1), PoleAt(1, 2), PoleAt(2, 1), PolyPow(0), PolyPow(1), PolyPow(2), PolyPow(3)]
GENERIC_KEYS = [PoleAt(i, b) for i in (1, 2) for b in (1, 2, 3)] + [PolyPow(b) for b in range(4)]


@given(functions(RESTRICTED_KEYS))
def test_restricted_complex_is_closed(f):
    # resonance orders 2 at z_1 and 1 at z_2, none at infinity
    cfg = Config.numeric([-2, -1], [0, 1], 1)
    assert resonance_profile(cfg).orders == (2, 1, None)
    assert restricted_check(cfg, f)
    assert restricted_check(cfg, twisted_d(cfg, f))


@given(functions(GENERIC_KEYS))
def test_differentials_reduce_to_exact_log_combinations(f):
    cfg = Config.numeric([Fraction(1, 3), Fraction(1, 5)], [0, 1], Fraction(2, 7))
    omega = twisted_d(cfg, f)
    reduction = reduce_to_log(cfg, omega)
    assert log_combination(cfg, reduction.coefficients) + twisted_d(cfg, reduction.primitive) == omega
    assert isinstance(verify_relation(cfg, reduction.coefficients, bound=4), Witness)


def test_reduce_to_log_obstruction():
    cfg = Config.numeric([-1, Fraction(1, 2)], [0, 1], 1)
    with pytest.raises(ResonanceObstruction) as info:
        reduce_to_log(cfg, DForm({PoleAt(1, 2): 1}))
    assert (info.value.site, info.value.order) == (1, 2)


@pytest.mark.parametrize("n,bound", [(1, 1), (2, 2), (3, 1)])
def test_truncated_cohomology_dimension(n, bound):
    weights = [Fraction(1, 3 + i) for i in range(n)]
    cfg = Config.numeric(weights, list(range(n)), Fraction(2, 7))
    result = truncated_cohomology(cfg, bound)
    assert result.functions == n * bound + bound + 1 == len(function_basis(cfg, bound))
    assert result.forms == n * (bound + 1) + bound
    assert result.rank == result.functions
    assert result.quotient == n - 1
