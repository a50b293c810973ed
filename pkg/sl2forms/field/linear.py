"""Fraction-free (Bareiss) elimination over rational function fields."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from sl2forms.errors import NoSolution, Singular
from sl2forms.field.ratfunc import Alphabet, RatFunc

logger = logging.getLogger("sl2forms.field")

Matrix = Sequence[Sequence[RatFunc]]


@dataclass
class Echelon:
    rows: List[List[RatFunc]]
    pivots: List[int]
    sign: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _lift(alphabet: Optional[Alphabet], matrix: Matrix, extra: Sequence = ()) -> List[List[RatFunc]]:
    if alphabet is not None:
        return [[alphabet.coerce(v) for v in row] for row in matrix]
    fields = [v.field for row in matrix for v in row if isinstance(v, RatFunc)]
    fields += [v.field for v in extra if isinstance(v, RatFunc)]
    if not fields:
        raise TypeError("Cannot infer the coefficient field of an all-integer matrix; pass an alphabet")
    return [[fields[0](v) for v in row] for row in matrix]


def echelon(rows: List[List[RatFunc]], columns: int) -> Echelon:
    """ Bareiss elimination in place on the first `columns` columns.

    Rows below each pivot are updated as (p * a_ij - a_ic * a_rj) / p_prev, where
    p_prev is the previous pivot; the division is exact in the polynomial case and
    keeps intermediate entries small in general.
    """
    if not rows:
        return Echelon(rows, [], 1)
    width = len(rows[0])
    zero = rows[0][0] * 0
    prev = zero + 1
    pivots: List[int] = []
    sign = 1
    r = 0
    m = len(rows)
    for c in range(columns):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        pivot = rows[r][c]
        for i in range(r + 1, m):
            lead = rows[i][c]
            for j in range(c + 1, width):
                rows[i][j] = (pivot * rows[i][j] - lead * rows[r][j]) / prev
            rows[i][c] = zero
        prev = pivot
        pivots.append(c)
        r += 1
    return Echelon(rows, pivots, sign)


def solve_linear(A: Matrix, b: Sequence[RatFunc], alphabet: Optional[Alphabet] = None,
                 strict: bool = True, columns: Optional[int] = None) -> List[RatFunc]:
    """ One exact solution of A x = b.

    Arguments:
        A: Rectangular matrix of rational functions (list of rows).
        b: Right-hand side, one entry per row of A.
        alphabet: Coefficient alphabet; inferred from the entries when omitted.
        strict: Raise `Singular` for rank-deficient square systems instead of
            returning the solution with free variables set to zero.
        columns: Number of unknowns; required when A has no rows.

    Raises:
        NoSolution: The system is inconsistent.
        Singular: Square system of deficient rank (only when `strict`).
    """
    m = len(A)
    n = len(A[0]) if m else (columns or 0)
    if columns is not None and columns != n:
        raise ValueError(f"Matrix has {n} columns, expected {columns}")
    if len(b) != m:
        raise ValueError(f"Right-hand side has {len(b)} entries for {m} rows")
    rows = _lift(alphabet, [list(row) + [rhs] for row, rhs in zip(A, b)])
    logger.debug("Solving %dx%d system", m, n)
    ech = echelon(rows, n)
    if strict and m == n and ech.rank < n:
        raise Singular(ech.rank, n)
    for i in range(ech.rank, m):
        if rows[i][n]:
            raise NoSolution(m, n, ech.rank)
    zero = alphabet.zero if alphabet is not None else rows[0][n] * 0
    x = [zero] * n
    for idx in reversed(range(ech.rank)):
        c = ech.pivots[idx]
        acc = rows[idx][n]
        for j in range(c + 1, n):
            if x[j]:
                acc = acc - rows[idx][j] * x[j]
        x[c] = acc / rows[idx][c]
    return x


def determinant(A: Matrix, alphabet: Optional[Alphabet] = None) -> RatFunc:
    n = len(A)
    if n == 0:
        raise ValueError("Determinant of an empty matrix")
    rows = _lift(alphabet, A)
    ech = echelon(rows, n)
    if ech.rank < n:
        return rows[0][0] * 0
    # the last Bareiss pivot is the determinant up to the row-swap sign
    return rows[n - 1][n - 1] * ech.sign


def rank(A: Matrix, alphabet: Optional[Alphabet] = None) -> int:
    if not A:
        return 0
    return echelon(_lift(alphabet, A), len(A[0])).rank


def mat_vec(A: Matrix, x: Sequence[RatFunc]) -> List[RatFunc]:
    out = []
    for row in A:
        acc = 0
        for a, v in zip(row, x):
            if a and v:
                acc = acc + a * v
        out.append(acc)
    return out
