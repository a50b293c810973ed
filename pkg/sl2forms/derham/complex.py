"""The twisted differential, logarithmic forms and cohomological relations."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from sl2forms.derham.basis import Config, DForm, DFunc, Elementary, PoleAt, PolyPow
from sl2forms.errors import NoSolution, ResonanceObstruction
from sl2forms.field import RatFunc, rank, solve_linear

logger = logging.getLogger("sl2forms.derham")


@lru_cache(maxsize=None)
def kappa_d_elementary(cfg: Config, key: Elementary) -> DForm:
    """ kappa times the twisted differential of one elementary function.

    For a pole (t - z_i)^(-b) at site i:
        -(M^i + b kappa) d(t-z_i)/(t-z_i)^(b+1)
        + sum_{k=1..b} sum_{j != i} M^j/(z_j - z_i)^k d(t-z_i)/(t-z_i)^(b+1-k)
        - sum_{j != i} M^j/(z_j - z_i)^b d(t-z_j)/(t-z_j)
    For t^b:
        (b kappa - sum M^j) t^(b-1) dt - sum_{k=1..b-1} (sum_j M^j z_j^k) t^(b-1-k) dt
        - sum_j M^j z_j^b d(t-z_j)/(t-z_j)
    """
    terms: List[Tuple[Elementary, RatFunc]] = []
    if isinstance(key, PoleAt):
        i, b = key.site, key.order
        zi = cfg.point(i)
        terms.append((PoleAt(i, b + 1), -(cfg.weight(i) + b * cfg.kappa)))
        for j in cfg.sites():
            if j == i:
                continue
            gap = cfg.point(j) - zi
            for k in range(1, b + 1):
                terms.append((PoleAt(i, b + 1 - k), cfg.weight(j) / gap ** k))
            terms.append((PoleAt(j, 1), -cfg.weight(j) / gap ** b))
    else:
        b = key.degree
        if b >= 1:
            terms.append((PolyPow(b - 1), b * cfg.kappa - cfg.weight_sum))
        for k in range(1, b):
            moment = sum((m * z ** k for m, z in zip(cfg.weights, cfg.points)), cfg.alphabet.zero)
            terms.append((PolyPow(b - 1 - k), -moment))
        for j in cfg.sites():
            terms.append((PoleAt(j, 1), -cfg.weight(j) * cfg.point(j) ** b))
    return DForm(terms)


def twisted_d(cfg: Config, f: DFunc) -> DForm:
    """ The twisted differential of f, linear in f. """
    result = DForm()
    for key, coeff in f.items():
        result += kappa_d_elementary(cfg, key).scale(coeff)
    return result / cfg.kappa


def log_form(cfg: Config, i: int) -> DForm:
    """ omega_i = M^i d(t - z_i)/(t - z_i). """
    if not 1 <= i <= cfg.n:
        raise IndexError(f"Site {i} out of range 1..{cfg.n}")
    return DForm({PoleAt(i, 1): cfg.weight(i)})


def log_combination(cfg: Config, coefficients: Sequence[RatFunc]) -> DForm:
    result = DForm()
    for i, c in zip(cfg.sites(), coefficients):
        result += log_form(cfg, i).scale(c)
    return result


@dataclass
class LogReduction:
    coefficients: Tuple[RatFunc, ...]
    primitive: DFunc


def _reduction_order(key: Elementary):
    if isinstance(key, PoleAt):
        return (0, key.order, -key.site)
    return (1, key.degree, 0)


def reduce_to_log(cfg: Config, omega: DForm) -> LogReduction:
    """ Write omega = sum_i c_i omega_i + d(g).

    Repeatedly cancels the highest non-logarithmic term with the twisted
    differential of one elementary function.

    Raises:
        ResonanceObstruction: A needed leading coefficient vanishes. Site n+1
            stands for the point at infinity.
    """
    rest = omega
    primitive = DFunc()
    while True:
        pending = [key for key in rest.keys() if not (isinstance(key, PoleAt) and key.order == 1)]
        if not pending:
            break
        key = max(pending, key=_reduction_order)
        if isinstance(key, PoleAt):
            source: Elementary = PoleAt(key.site, key.order - 1)
            site, order = key.site, key.order
        else:
            source = PolyPow(key.degree + 1)
            site, order = cfg.n + 1, key.degree
        image = kappa_d_elementary(cfg, source)
        lead = image.coeff(key)
        if not lead:
            raise ResonanceObstruction(site, order)
        scale = rest.coeff(key) / lead
        rest = rest - image.scale(scale)
        primitive = primitive + DFunc({source: scale * cfg.kappa})
    coefficients = []
    for i in cfg.sites():
        residue = rest.coeff(PoleAt(i, 1))
        if not residue:
            coefficients.append(cfg.alphabet.zero)
        elif not cfg.weight(i):
            raise ResonanceObstruction(i, 1)
        else:
            coefficients.append(residue / cfg.weight(i))
    return LogReduction(tuple(coefficients), primitive)


@dataclass
class Witness:
    primitive: DFunc


@dataclass
class NotExact:
    bound: int


def function_basis(cfg: Config, bound: int) -> List[Elementary]:
    """Elementary functions of pole order and degree at most `bound`."""
    basis: List[Elementary] = [PoleAt(i, b) for i in cfg.sites() for b in range(1, bound + 1)]
    basis += [PolyPow(b) for b in range(bound + 1)]
    return basis


def _form_rows(columns: Sequence[DForm], extra: Sequence[DForm] = ()) -> List[Elementary]:
    keys = set()
    for form in list(columns) + list(extra):
        keys.update(form.keys())
    return sorted(keys, key=lambda k: k.sort_key())


def verify_relation(cfg: Config, coefficients: Sequence[RatFunc], bound: int) -> Union[Witness, NotExact]:
    """ Look for g among functions of order <= bound with d(g) = sum_i lambda_i omega_i. """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    basis = function_basis(cfg, bound)
    columns = [twisted_d(cfg, DFunc({f: 1})) for f in basis]
    target = log_combination(cfg, [cfg.alphabet.coerce(c) for c in coefficients])
    rows = _form_rows(columns, [target])
    zero = cfg.alphabet.zero
    A = [[col.coeff(r, zero) for col in columns] for r in rows]
    b = [target.coeff(r, zero) for r in rows]
    logger.debug("verify_relation: %d unknowns, %d equations", len(basis), len(rows))
    try:
        x = solve_linear(A, b, alphabet=cfg.alphabet, strict=False, columns=len(basis))
    except NoSolution:
        return NotExact(bound)
    return Witness(DFunc(zip(basis, x)))


@dataclass
class TruncatedCohomology:
    bound: int
    functions: int
    forms: int
    rank: int

    @property
    def quotient(self) -> int:
        return self.forms - self.rank


def truncated_cohomology(cfg: Config, bound: int) -> TruncatedCohomology:
    """ Rank of the twisted differential from functions of order <= bound to the
    forms of order <= bound + 1 (poles) and degree <= bound - 1 (polynomial part).
    """
    basis = function_basis(cfg, bound)
    forms = [PoleAt(i, b) for i in cfg.sites() for b in range(1, bound + 2)]
    forms += [PolyPow(b) for b in range(bound)]
    columns = [twisted_d(cfg, DFunc({f: 1})) for f in basis]
    zero = cfg.alphabet.zero
    A = [[col.coeff(r, zero) for col in columns] for r in forms]
    return TruncatedCohomology(bound, len(basis), len(forms), rank(A, alphabet=cfg.alphabet))
