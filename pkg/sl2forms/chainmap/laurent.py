"""Local expansions of elementary functions and products via principal parts."""

from math import comb
from typing import Dict

from sl2forms.derham.basis import Config, DFunc, Elementary, PoleAt, PolyPow
from sl2forms.field import RatFunc


def lowest_order(cfg: Config, elem: Elementary, site: int) -> int:
    """ Order of vanishing (negative for a pole) at a site; site n+1 is infinity with coordinate 1/t. """
    if site == cfg.n + 1:
        return -elem.degree if isinstance(elem, PolyPow) else elem.order
    if isinstance(elem, PoleAt) and elem.site == site:
        return -elem.order
    return 0


def expand_elementary(cfg: Config, elem: Elementary, site: int, up_to: int) -> Dict[int, RatFunc]:
    """ Coefficients of u^m, m <= up_to, with u = t - z_site or u = 1/t at site n+1. """
    one = cfg.alphabet.one
    out: Dict[int, RatFunc] = {}
    if site == cfg.n + 1:
        if isinstance(elem, PolyPow):
            if -elem.degree <= up_to:
                out[-elem.degree] = one
            return out
        # (t - z_j)^(-b) = sum_s C(b+s-1, s) z_j^s u^(b+s)
        b, z = elem.order, cfg.point(elem.site)
        for s in range(0, up_to - b + 1):
            out[b + s] = comb(b + s - 1, s) * z ** s
        return out
    z_site = cfg.point(site)
    if isinstance(elem, PolyPow):
        # t^b = (u + z_site)^b
        b = elem.degree
        for m in range(0, min(b, up_to) + 1):
            out[m] = comb(b, m) * z_site ** (b - m)
        return out
    if elem.site == site:
        if -elem.order <= up_to:
            out[-elem.order] = one
        return out
    # (t - z_j)^(-b) = (u + c)^(-b) with c = z_site - z_j
    b, c = elem.order, z_site - cfg.point(elem.site)
    for m in range(0, up_to + 1):
        out[m] = (-1) ** m * comb(b + m - 1, m) / c ** (b + m)
    return out


def laurent_coeffs(cfg: Config, scalar: DFunc, site: int, up_to: int) -> Dict[int, RatFunc]:
    """ Local expansion of a combination of elementary functions, truncated above `up_to`. """
    out: Dict[int, RatFunc] = {}
    for elem, c in scalar.items():
        for m, a in expand_elementary(cfg, elem, site, up_to).items():
            out[m] = out[m] + c * a if m in out else c * a
    return {m: out[m] for m in sorted(out) if out[m]}


def _product_coeffs(left: Dict[int, RatFunc], right: Dict[int, RatFunc], top: int) -> Dict[int, RatFunc]:
    out: Dict[int, RatFunc] = {}
    for p, a in left.items():
        for q, b in right.items():
            if p + q <= top:
                out[p + q] = out[p + q] + a * b if p + q in out else a * b
    return out


def multiply(cfg: Config, a: Elementary, b: Elementary) -> DFunc:
    """ Product of two elementary functions as a sum of its principal parts at all poles. """
    if isinstance(a, PolyPow) and isinstance(b, PolyPow):
        return DFunc({PolyPow(a.degree + b.degree): 1})
    if isinstance(a, PoleAt) and isinstance(b, PoleAt) and a.site == b.site:
        return DFunc({PoleAt(a.site, a.order + b.order): 1})
    result = DFunc()
    for site in range(1, cfg.n + 1):
        la, lb = lowest_order(cfg, a, site), lowest_order(cfg, b, site)
        if la + lb >= 0:
            continue
        product = _product_coeffs(expand_elementary(cfg, a, site, -1 - lb),
                                  expand_elementary(cfg, b, site, -1 - la), -1)
        result += DFunc([(PoleAt(site, -m), c) for m, c in product.items() if m < 0])
    infinity = cfg.n + 1
    la, lb = lowest_order(cfg, a, infinity), lowest_order(cfg, b, infinity)
    if la + lb <= 0:
        product = _product_coeffs(expand_elementary(cfg, a, infinity, -lb),
                                  expand_elementary(cfg, b, infinity, -la), 0)
        result += DFunc([(PolyPow(-m), c) for m, c in product.items() if m <= 0])
    return result


def multiply_funcs(cfg: Config, f: DFunc, g: DFunc) -> DFunc:
    result = DFunc()
    for a, ca in f.items():
        for b, cb in g.items():
            result += multiply(cfg, a, b).scale(ca * cb)
    return result
