from fractions import Fraction

import pytest

from sl2forms.derham import Config, DForm, PoleAt, PolyPow, log_form
from sl2forms.errors import NonLogarithmicRemainder
from sl2forms.field import Alphabet
from sl2forms.gaussmanin import (DT, MixedForm1, MixedForm2, closed_matches_direct, covariant_derivative,
                                 covariant_matches_direct, defect_is_exact, exterior_derivative, flatness_defect,
                                 gm_connection_matrix, log_connection_formula,
                                 log_coordinates, normalize_pair, restricted_invariance, wedge)

ELEMENTARY = [PoleAt(1, 1), PoleAt(1, 2), PoleAt(2, 3), PolyPow(0), PolyPow(1), PolyPow(2)]


@pytest.fixture
def with_t():
    return Config.symbolic(2, t=True)


def test_normalize_pair():
    assert normalize_pair(2, 2) == (0, None)
    assert normalize_pair(DT, 3) == (-1, (3, DT))
    assert normalize_pair(3, DT) == (1, (3, DT))
    assert normalize_pair(1, 2) == (1, (1, 2))
    assert normalize_pair(2, 1) == (-1, (1, 2))


def test_wedge_is_antisymmetric(with_t):
    A = with_t.alphabet
    a = MixedForm1({DT: A["t"], 1: A["z2"]})
    b = MixedForm1({2: A["M1"], DT: 1})
    assert wedge(a, b) == -wedge(b, a)
    assert not wedge(a, a)


def test_exterior_derivative(with_t):
    A = with_t.alphabet
    t, z1 = A["t"], A["z1"]
    form = MixedForm1({DT: t * z1, 1: t ** 2})
    assert exterior_derivative(with_t, form) == MixedForm2({(1, DT): -t})
    assert exterior_derivative(with_t, form).component(DT, 1) == t


def test_exterior_derivative_needs_symbolic_points():
    cfg = Config.symbolic(2, points=(0, 1), t=True)
    with pytest.raises(ValueError):
        exterior_derivative(cfg, MixedForm1({DT: 1}))


@pytest.mark.parametrize("key", ELEMENTARY, ids=str)
def test_beta_wedge_closed_form(with_t, key):
    assert closed_matches_direct(with_t, key)


@pytest.mark.parametrize("key", ELEMENTARY, ids=str)
def test_covariant_derivative_matches_definition(with_t, key):
    for direction in with_t.sites():
        assert covariant_matches_direct(with_t, DForm({key: 1}), direction)


@pytest.mark.slow
@pytest.mark.parametrize("key", [PoleAt(3, 2), PolyPow(2)], ids=str)
def test_covariant_derivative_three_points(key):
    cfg = Config.symbolic(3, t=True)
    assert closed_matches_direct(cfg, key)
    assert all(covariant_matches_direct(cfg, DForm({key: 1}), j) for j in cfg.sites())


def test_log_connection_two_points(symbolic2):
    cfg = symbolic2
    M1, M2 = cfg.weights
    z1, z2 = cfg.points
    image = covariant_derivative(cfg, log_form(cfg, 1), 2).scale(cfg.kappa)
    expected = log_form(cfg, 1).scale(M2 * (M1 - 2) / (2 * (z2 - z1))) + log_form(cfg, 2).scale(M1 / (z2 - z1))
    assert image == expected

    matrix = gm_connection_matrix(cfg)
    assert matrix.entry(2, 1, 1) == M2 * (M1 - 2) / (2 * (z2 - z1))
    assert matrix.entry(2, 1, 2) == M1 / (z2 - z1)


@pytest.mark.parametrize("n", [2, 3])
def test_log_connection_formula(n):
    cfg = Config.symbolic(n)
    for i in cfg.sites():
        for j in cfg.sites():
            image = covariant_derivative(cfg, log_form(cfg, i), j).scale(cfg.kappa)
            assert image == log_connection_formula(cfg, i, j)


@pytest.mark.parametrize("n", [2, pytest.param(3, marks=pytest.mark.slow)])
def test_flatness_on_log_span(n):
    cfg = Config.symbolic(n)
    matrix = gm_connection_matrix(cfg)
    for p in cfg.sites():
        for q in range(p + 1, n + 1):
            for source in cfg.sites():
                assert defect_is_exact(cfg, flatness_defect(cfg, matrix, p, q, source))


def test_defect_is_exact(symbolic2):
    cfg = symbolic2
    kappa = cfg.kappa
    assert defect_is_exact(cfg, [kappa, kappa])
    assert defect_is_exact(cfg, [0, 0])
    assert not defect_is_exact(cfg, [1, 0])
    assert not defect_is_exact(cfg, [cfg.point(1), cfg.point(2)])


def test_log_coordinates(symbolic2):
    cfg = symbolic2
    coords = log_coordinates(cfg, log_form(cfg, 2).scale(3), 1)
    assert coords == [0, 3]
    with pytest.raises(NonLogarithmicRemainder):
        log_coordinates(cfg, DForm({PoleAt(1, 2): 1}), 1)


def test_restricted_invariance():
    A = Alphabet.standard(2)
    cfg = Config(A, (Fraction(-1), Fraction(1, 3)), (A["z1"], A["z2"]), 1)
    assert restricted_invariance(cfg)
