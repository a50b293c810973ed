from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from sl2forms.errors import DenominatorVanishes, DivisionByZero, NoSolution, PoleAtZero, Singular, UnknownSymbol
from sl2forms.field import EPS, Alphabet, arith, determinant, mat_vec, rank, solve_linear

A = Alphabet(("k", "M", "x", "y", EPS))
k, M, x, y, eps = (A[name] for name in ("k", "M", "x", "y", EPS))
kappa = k + 2


@st.composite
def ratfuncs(draw, nonzero=False):
    """Quotients of small integer polynomials in x and y."""
    def poly():
        c = draw(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
        return c[0] + c[1] * x + c[2] * y + c[3] * x * y

    numer = poly()
    denom = poly()
    assume(denom)
    if nonzero:
        assume(numer)
    return numer / denom


def test_arith_examples():
    assert arith("add", 1 / kappa, 1 / kappa) == 2 / kappa
    assert arith("mul", M / kappa, kappa / M) == 1
    assert arith("sub", (kappa ** 2 - 1) / (kappa - 1), kappa) == 1
    assert arith("div", M, M) == 1


def test_arith_errors():
    with pytest.raises(DivisionByZero):
        arith("div", M, A.zero)
    with pytest.raises(ValueError):
        arith("pow", M, M)


def test_canonical_form():
    a = (M ** 2 - k ** 2) / (M - k)
    b = M + k
    assert a == b
    assert a.numer == b.numer and a.denom == b.denom


@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(ratfuncs(nonzero=True))
def test_inverse(a):
    assert a * (1 / a) == 1


@given(ratfuncs(), ratfuncs(), st.fractions(max_denominator=7))
def test_substitute_commutes_with_arith(a, b, value):
    bindings = {"x": value}
    try:
        sa, sb = A.substitute(a, bindings), A.substitute(b, bindings)
        together = A.substitute(a * b + a, bindings)
    except DenominatorVanishes:
        assume(False)
    assert together == sa * sb + sa


def test_substitute_examples():
    for b in (1, 2, 3):
        assert A.substitute(M + b * kappa, {"M": -b * kappa}) == 0
    assert A.substitute(M ** 2, {"M": k / 2}) == k ** 2 / 4
    assert A.substitute(M * x, {"M": 2, "x": Fraction(1, 3)}) == A.const(Fraction(2, 3))
    assert A.substitute(M, {}) == M


def test_substitute_errors():
    with pytest.raises(DenominatorVanishes):
        A.substitute(1 / (k - M), {"M": k})
    with pytest.raises(UnknownSymbol):
        A.substitute(M, {"q": 1})


def test_limit_eps():
    assert A.limit_eps(eps / eps) == 1
    assert A.limit_eps((M * eps + eps ** 2) / eps) == M
    assert A.limit_eps(eps / (M + eps)) == 0
    assert A.limit_eps((M + eps) / (k - eps)) == M / k
    with pytest.raises(PoleAtZero) as info:
        A.limit_eps(1 / eps)
    assert info.value.order == 1


def test_text_round_trip():
    for f in ((M + k) / (2 * kappa), M ** 3 - x * y / 5, A.const(Fraction(-7, 3)), A.zero):
        assert A.parse(A.to_text(f)) == f
    with pytest.raises(UnknownSymbol):
        A.parse("q + 1")


def test_alphabet_basics():
    assert "M" in A and "q" not in A
    with pytest.raises(UnknownSymbol):
        A["q"]
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    assert A.as_rational(A.const(Fraction(3, 4))) == Fraction(3, 4)
    assert A.as_rational(M) is None
    assert A.depends_on(M / k, "k") and not A.depends_on(M, "k")
    assert A.diff(M ** 2 / k, "M") == 2 * M / k
    with pytest.raises(ValueError):
        A.coerce(Alphabet(("M",))["M"])


def test_standard_alphabet():
    names = Alphabet.standard(2, t=True, eps=True).names
    assert names == ("k", "M1", "M2", "z1", "z2", "t", EPS)
    assert Alphabet.standard(1, points=False).names == ("k", "M1")


def test_solve_linear_examples():
    assert solve_linear([[1, 0], [0, 1]], [kappa, M], alphabet=A) == [kappa, M]
    assert solve_linear([[M]], [M ** 2], alphabet=A) == [M]


def test_solve_linear_gram_inverse():
    gram = [[2 * k, -2 * (k - M)], [-2 * (k - M), (M + 2) * (k - M)]]
    solution = solve_linear(gram, [1, 0], alphabet=A)
    assert solution == [(M + 2) / (2 * M * kappa), 1 / (M * kappa)]
    assert determinant(gram, alphabet=A) == 2 * M * (k - M) * kappa


def test_solve_linear_degenerate():
    with pytest.raises(Singular) as info:
        solve_linear([[1, 2], [2, 4]], [1, 2], alphabet=A)
    assert info.value.rank == 1
    assert solve_linear([[1, 2], [2, 4]], [1, 2], alphabet=A, strict=False) == [1, 0]
    with pytest.raises(NoSolution):
        solve_linear([[1, 2], [2, 4]], [1, 3], alphabet=A, strict=False)
    with pytest.raises(NoSolution):
        solve_linear([[1], [1]], [1, 2], alphabet=A)
    with pytest.raises(ValueError):
        solve_linear([[1, 0]], [1, 2], alphabet=A)


def test_solve_linear_without_rows():
    solution = solve_linear([], [], alphabet=A, strict=False, columns=3)
    assert solution == [0, 0, 0]
    assert all(v == A.zero for v in solution)
    assert solve_linear([], [], alphabet=A) == []
    with pytest.raises(TypeError):
        solve_linear([], [], columns=2)
    with pytest.raises(ValueError):
        solve_linear([[1, 0]], [1], alphabet=A, columns=3)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_solution_satisfies_system(rows, rhs):
    matrix = [[value * (1 + M) if i == j else value for j, value in enumerate(row)] for i, row in enumerate(rows)]
    try:
        solution = solve_linear(matrix, rhs, alphabet=A, strict=False)
    except NoSolution:
        assume(False)
    assert mat_vec(matrix, solution) == [A.const(v) for v in rhs]


def test_determinant_and_rank():
    a, b = A["x"], A["y"]
    assert determinant([[a, b], [k, M]], alphabet=A) == a * M - b * k
    assert determinant([[0, 1], [1, 0]], alphabet=A) == -1
    assert determinant([[1, 2], [2, 4]], alphabet=A) == 0
    assert rank([[1, 2], [2, 4]], alphabet=A) == 1
    assert rank([[M, 0], [0, k]], alphabet=A) == 2
    with pytest.raises(TypeError):
        determinant([[1, 0], [0, 1]])
