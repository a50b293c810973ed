"""Mixed differential forms in the coordinates (t, z_1, ..., z_n).

Coordinate 0 is t and coordinate j >= 1 is z_j. A 1-form is keyed by the
coordinate index; a 2-form by a normalized pair: (j, k) with 1 <= j < k for
dz_j ^ dz_k and (i, 0) for dz_i ^ dt.
"""

from typing import Optional, Tuple

from sl2forms.combination import Combination
from sl2forms.derham.basis import Config, DForm, Elementary, PoleAt
from sl2forms.field import RatFunc

DT = 0


class MixedForm1(Combination):
    __slots__ = ()


class MixedForm2(Combination):
    __slots__ = ()

    def component(self, first: int, second: int = DT) -> RatFunc:
        sign, key = normalize_pair(first, second)
        if key is None:
            return 0
        return sign * self.coeff(key)


def normalize_pair(p: int, q: int) -> Tuple[int, Optional[Tuple[int, int]]]:
    """Sign and canonical key of dx_p ^ dx_q."""
    if p == q:
        return 0, None
    if p == DT:
        return -1, (q, DT)
    if q == DT:
        return 1, (p, DT)
    if p < q:
        return 1, (p, q)
    return -1, (q, p)


def wedge(alpha: MixedForm1, beta: MixedForm1) -> MixedForm2:
    terms = []
    for p, a in alpha.items():
        for q, b in beta.items():
            sign, key = normalize_pair(p, q)
            if key is not None:
                terms.append((key, sign * a * b))
    return MixedForm2(terms)


def coordinate(cfg: Config, index: int) -> str:
    return "t" if index == DT else f"z{index}"


def _check_symbolic(cfg: Config):
    for j in cfg.sites():
        name = f"z{j}"
        if name not in cfg.alphabet or cfg.point(j) != cfg.alphabet[name]:
            raise ValueError("Mixed forms need the marked points to be the symbols z1..zn")


def exterior_derivative(cfg: Config, form: MixedForm1) -> MixedForm2:
    """ d(sum_p a_p dx_p) = sum_{q, p} (d a_p / d x_q) dx_q ^ dx_p. """
    _check_symbolic(cfg)
    terms = []
    for p, a in form.items():
        for q in range(cfg.n + 1):
            sign, key = normalize_pair(q, p)
            if key is None:
                continue
            da = cfg.alphabet.diff(a, coordinate(cfg, q))
            if da:
                terms.append((key, sign * da))
    return MixedForm2(terms)


def point_difference(j: int, k: int) -> MixedForm1:
    """d(z_j - z_k)."""
    return MixedForm1({j: 1, k: -1})


def global_form(cfg: Config, key: Elementary) -> MixedForm1:
    """ The elementary form as a global form: d(t - z_i)/(t - z_i)^b keeps its -dz_i part. """
    t = cfg.alphabet["t"]
    if isinstance(key, PoleAt):
        scalar = 1 / (t - cfg.point(key.site)) ** key.order
        return MixedForm1({DT: scalar, key.site: -scalar})
    return MixedForm1({DT: t ** key.degree})


def global_section(cfg: Config, omega: DForm) -> MixedForm1:
    result = MixedForm1()
    for key, c in omega.items():
        result += global_form(cfg, key).scale(c)
    return result


def as_function_of_t(cfg: Config, omega: DForm) -> RatFunc:
    """The dt-coefficient of an elementary combination, as a rational function of t."""
    return global_section(cfg, omega).coeff(DT, cfg.alphabet.zero)
