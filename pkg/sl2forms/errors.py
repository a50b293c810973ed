"""Exceptions raised by the exact-arithmetic kernel and the verification layers."""

import logging

logger = logging.getLogger("sl2forms")


class DivisionByZero(ZeroDivisionError):
    """Raised when a rational function is divided by zero."""

    def __init__(self, dividend: str):
        self.dividend = dividend
        super().__init__(f"Division of {dividend} by zero")


class UnknownSymbol(KeyError):
    """Raised when a symbol is not part of the declared alphabet."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown symbol: {name}")


class DenominatorVanishes(ArithmeticError):
    """Raised when a substitution makes a denominator identically zero."""

    def __init__(self, expression: str, bindings: str):
        self.expression = expression
        self.bindings = bindings
        super().__init__(f"Denominator of {expression} vanishes under {bindings}")


class PoleAtZero(ArithmeticError):
    """Raised when an eps-limit does not exist."""

    def __init__(self, expression: str, order: int):
        self.expression = expression
        self.order = order
        super().__init__(f"{expression} has a pole of order {order} at eps = 0")


class NoSolution(ArithmeticError):
    """Raised when a linear system is inconsistent."""

    def __init__(self, rows: int, cols: int, rank: int):
        self.rows = rows
        self.cols = cols
        self.rank = rank
        super().__init__(f"Inconsistent {rows}x{cols} system (rank {rank})")


class Singular(ArithmeticError):
    """Raised when a square system is rank deficient."""

    def __init__(self, rank: int, size: int):
        self.rank = rank
        self.size = size
        super().__init__(f"Singular {size}x{size} system (rank {rank})")


class GramSingular(Singular):
    """Raised when a Shapovalov gram matrix cannot be inverted."""

    def __init__(self, grade, rank: int, size: int):
        self.grade = grade
        super().__init__(rank, size)
        self.args = (f"Gram matrix of grade {grade} is singular (rank {rank} of {size})",)


class ResonanceObstruction(ArithmeticError):
    """Raised when reduction to logarithmic forms hits a vanishing leading coefficient."""

    def __init__(self, site: int, order: int):
        self.site = site
        self.order = order
        super().__init__(f"Resonance obstruction at site {site}, order {order}")


class NonLogarithmicRemainder(ArithmeticError):
    """Raised when a covariant derivative leaves the span of the logarithmic forms."""

    def __init__(self, direction: int, remainder: str):
        self.direction = direction
        self.remainder = remainder
        super().__init__(f"Non-logarithmic remainder in direction z{direction}: {remainder}")


class TruncationTooSmall(ValueError):
    """Raised when a tensor computation needs a graded component beyond the bound."""

    def __init__(self, site: int, grade, bound: int):
        self.site = site
        self.grade = grade
        self.bound = bound
        super().__init__(f"Site {site} needs grade {grade}, above the truncation bound {bound}")
