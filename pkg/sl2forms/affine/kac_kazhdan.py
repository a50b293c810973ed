"""Reducibility lines of Verma modules over affine sl2."""

from dataclasses import dataclass
from typing import List, Optional

from sl2forms.affine.pbw import Grade
from sl2forms.field import RatFunc


@dataclass(frozen=True)
class ReducibilityLine:
    """ One condition on (M, kappa) under which V(M, k - M) has a singular vector.

    kind "a": M = l - 1 - (a - 1) kappa, singular vector of degree (l a, l (a - 1)).
    kind "b": M = -l - 1 + a kappa, singular vector of degree (l (a - 1), l a).
    kind "kappa": the critical level kappa = 0.
    """

    kind: str
    l: int = 0
    a: int = 0

    @property
    def degree(self) -> Optional[Grade]:
        if self.kind == "a":
            return Grade(self.l * self.a, self.l * (self.a - 1))
        if self.kind == "b":
            return Grade(self.l * (self.a - 1), self.l * self.a)
        return None

    def form(self, weight: RatFunc, kappa: RatFunc) -> RatFunc:
        """The affine form vanishing exactly on the line."""
        if self.kind == "a":
            return weight - (self.l - 1) + (self.a - 1) * kappa
        if self.kind == "b":
            return weight + self.l + 1 - self.a * kappa
        return kappa

    def contains(self, weight: RatFunc, kappa: RatFunc) -> bool:
        return not self.form(weight, kappa)

    def __str__(self) -> str:
        if self.kind == "a":
            return f"M = {self.l - 1} - {self.a - 1}*kappa"
        if self.kind == "b":
            return f"M = -{self.l + 1} + {self.a}*kappa"
        return "kappa = 0"


def kac_kazhdan_lines(l_max: int, a_max: int) -> List[ReducibilityLine]:
    if l_max < 1 or a_max < 1:
        raise ValueError("Bounds must be at least 1")
    lines = [ReducibilityLine("a", l, a) for l in range(1, l_max + 1) for a in range(1, a_max + 1)]
    lines += [ReducibilityLine("b", l, a) for l in range(1, l_max + 1) for a in range(1, a_max + 1)]
    lines.append(ReducibilityLine("kappa"))
    return lines


def lines_through(weight: RatFunc, kappa: RatFunc, l_max: int, a_max: int) -> List[ReducibilityLine]:
    return [line for line in kac_kazhdan_lines(l_max, a_max) if line.contains(weight, kappa)]
