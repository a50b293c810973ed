from sl2forms.field.ratfunc import EPS, Alphabet, RatFunc, Scalar, arith
from sl2forms.field.linear import determinant, echelon, mat_vec, rank, solve_linear
