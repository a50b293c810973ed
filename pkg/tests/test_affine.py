import pytest
from hypothesis import given, strategies as st

from sl2forms.affine import (Gen, Grade, LieElement, Order, PBWMonomial, ReducibilityLine, bracket,
                             component_basis, dimension, kac_kazhdan_lines, lines_through, pi_twist, transpose,
                             transpose_anti)


def mono(**kwargs) -> PBWMonomial:
    return PBWMonomial.standard(**kwargs)


def test_generator_degrees():
    assert Gen("f").degree == (1, 0)
    assert Gen("f", -1).degree == (2, 1)
    assert Gen("h", -1).degree == (1, 1)
    assert Gen("e", -1).degree == (0, 1)
    assert Gen("e").degree == (-1, 0)
    assert Gen("f", 1).degree == (0, -1)
    assert Gen("f").is_lowering and not Gen("e").is_lowering and not Gen("h").is_lowering
    with pytest.raises(ValueError):
        Gen("x")
    with pytest.raises(ValueError):
        Gen("c", 1)


def test_bracket():
    assert bracket(Gen("e", -1), Gen("f", 1)) == LieElement(((Gen("h"), 1),), -1)
    assert bracket(Gen("h", 2), Gen("h", -2)) == LieElement((), 4)
    assert bracket(Gen("h", 1), Gen("e", -3)) == LieElement(((Gen("e", -2), 2),), 0)
    assert bracket(Gen("c"), Gen("e")) == LieElement((), 0)


def test_pi_twist_and_transpose():
    assert pi_twist(Gen("e", 2)) == (1, Gen("f", 2))
    assert pi_twist(Gen("h", -1)) == (-1, Gen("h", -1))
    assert pi_twist(Gen("c")) == (1, Gen("c"))
    assert transpose(Gen("f", -2)) == Gen("e", 2)
    assert transpose_anti((Gen("f", -1), Gen("h"))) == (Gen("h"), Gen("e", 1))


def test_monomial_grades():
    assert mono(fs=(0,)).grade == Grade(1, 0)
    assert mono(es=(1,)).grade == Grade(0, 1)
    assert mono(fs=(1,)).grade == Grade(2, 1)
    assert mono(es=(1, 1), fs=(0,)).grade == Grade(1, 2)
    assert mono(es=(1, 1), fs=(0,)).order == Order.EHF
    assert mono(fs=(0,), hs=(1,)).order == Order.FHE
    with pytest.raises(ValueError):
        PBWMonomial(hs=(0,))
    with pytest.raises(ValueError):
        PBWMonomial(fs=(0, 1))


def test_component_bases():
    assert component_basis(Grade(1, 1)) == (mono(hs=(1,)), mono(fs=(0,), es=(1,)))
    assert set(component_basis(Grade(2, 1))) == {mono(fs=(1,)), mono(fs=(0,), hs=(1,)), mono(fs=(0, 0), es=(1,))}
    assert dimension(Grade(2, 0)) == 1
    assert dimension(Grade(0, 2)) == 1
    assert dimension(Grade(1, 2)) == 3
    assert component_basis(Grade(-1, 0)) == ()


def character(top):
    """ Coefficients of prod 1/(1 - x^d1 y^d2) over the lowering generators, up to total degree `top`. """
    series = {Grade(p1, t - p1): 0 for t in range(top + 1) for p1 in range(t + 1)}
    series[Grade(0, 0)] = 1
    gens = [Gen("f")] + [Gen(letter, -m) for m in range(1, top + 1) for letter in "fhe"]
    for g in gens:
        d = Grade(*g.degree)
        if d.total > top:
            continue
        for grade in sorted(series):
            lower = Grade(grade.p1 - d.p1, grade.p2 - d.p2)
            if lower in series:
                series[grade] += series[lower]
    return series


def test_dimensions_match_character():
    mismatches = {str(grade): (count, dimension(grade)) for grade, count in character(8).items()
                  if dimension(grade) != count}
    assert mismatches == {}


def test_action_on_highest_weight_vector(module):
    M, k = module.weight, module.level
    v = module.vacuum()
    assert module.act(Gen("h"), v) == v.scale(M)
    assert module.act(Gen("c"), v) == v.scale(k)
    assert not module.act(Gen("e"), v)
    assert not module.act(Gen("f", 1), v)
    fv = module.act(Gen("f"), v)
    assert fv == module.monomial(mono(fs=(0,)))
    assert module.act(Gen("e"), fv) == v.scale(M)
    f2v = module.act_word((Gen("f"), Gen("f")), v)
    assert module.act(Gen("e"), f2v) == fv.scale(2 * M - 2)
    assert module.act(Gen("f", 1), module.monomial(mono(es=(1,)))) == v.scale(k - M)


def test_rebase(module):
    x = module.monomial(mono(fs=(0,), es=(1,)))
    rebased = module.rebase(x, Order.EHF)
    expected = {PBWMonomial((0,), (), (1,), Order.EHF): 1, PBWMonomial((), (1,), (), Order.EHF): -1}
    assert dict(rebased.items()) == expected
    assert module.rebase(rebased, Order.FHE) == x


@st.composite
def basis_vectors(draw):
    total = draw(st.integers(0, 3))
    p2 = draw(st.integers(0, total))
    basis = component_basis(Grade(total - p2, p2))
    return draw(st.sampled_from(basis))


@given(basis_vectors())
def test_cartan_acts_diagonally(module, m):
    x = module.monomial(m)
    p1, p2 = m.grade.p1, m.grade.p2
    assert module.act(Gen("h"), x) == x.scale(module.weight - 2 * (p1 - p2))
    assert module.act(Gen("c"), x) == x.scale(module.level)


@given(basis_vectors(), st.sampled_from([Gen("e"), Gen("f", 1), Gen("h", 1), Gen("e", 1), Gen("f", -1)]))
def test_action_lands_in_shifted_grade(module, m, g):
    image = module.act(g, module.monomial(m))
    assert image.grade == m.grade + g.degree
    assert all(key.grade == image.grade for key in image.keys())


@st.composite
def generators(draw):
    letter = draw(st.sampled_from("efhc"))
    return Gen(letter) if letter == "c" else Gen(letter, draw(st.integers(-2, 2)))


@given(basis_vectors(), generators(), generators())
def test_commutator_matches_bracket(module, m, a, b):
    x = module.monomial(m)
    lhs = module.act(a, module.act(b, x)) - module.act(b, module.act(a, x))
    lie = bracket(a, b)
    rhs = module.act_element(lie.terms, lie.central, x)
    assert module.rebase(lhs, lhs.grade.order) == module.rebase(rhs, lhs.grade.order)


def test_kac_kazhdan_lines(module):
    M, kappa = module.weight, module.kappa
    line_a = ReducibilityLine("a", 1, 1)
    assert line_a.degree == Grade(1, 0)
    assert line_a.form(M, kappa) == M
    line_b = ReducibilityLine("b", 1, 1)
    assert line_b.degree == Grade(0, 1)
    assert line_b.form(M, kappa) == M - module.level
    assert ReducibilityLine("a", 2, 3).degree == Grade(6, 4)
    assert ReducibilityLine("b", 1, 2).degree == Grade(1, 2)
    assert ReducibilityLine("kappa").degree is None

    lines = kac_kazhdan_lines(2, 2)
    assert len(lines) == 9
    assert lines_through(module.zero, kappa, 2, 2) == [line_a]
    with pytest.raises(ValueError):
        kac_kazhdan_lines(0, 1)
