"""Action of sl2-valued rational functions on tensor products of contragradient modules."""

import logging
from typing import Dict, Tuple

from sl2forms.affine.lie import PAIRING, SL2_BRACKET, Gen, pi_twist
from sl2forms.affine.pbw import Grade, PBWMonomial
from sl2forms.chainmap.laurent import expand_elementary, lowest_order, multiply
from sl2forms.chainmap.tensor import (Chain1, GlobalSl2Func, SiteConfig, TensorCheck, TensorDual, TensorKey,
                                      replace_factor)
from sl2forms.derham.basis import DFunc, Elementary, PoleAt
from sl2forms.dualform.shapovalov import DualVector, contragradient_act, dual_monomial
from sl2forms.errors import TruncationTooSmall
from sl2forms.field import RatFunc

logger = logging.getLogger("sl2forms.chainmap")

# largest m with X T^m able to act nontrivially on grade (p1, p2) is min(p2, p1 + shift)
_SHIFT = {"f": 1, "h": 0, "e": -1}


def cutoff(letter: str, grade: Grade) -> int:
    return min(grade.p2, grade.p1 + _SHIFT[letter])


def local_generator(cfg: SiteConfig, letter: str, power: int, site: int) -> Tuple[int, Gen]:
    """ X u^m at a site acts as X T^m, twisted by pi at infinity. """
    gen = Gen(letter, power)
    if site == cfg.infinity:
        return pi_twist(gen)
    return 1, gen


def site_action(cfg: SiteConfig, letter: str, elem: Elementary, site: int,
                phi: DualVector) -> Dict[PBWMonomial, RatFunc]:
    """ Contragradient action at one site of the local expansion of X * elem.

    The terms u^m of the expansion land in different grades, so the result is a
    plain mapping from dual basis monomials to coefficients.
    """
    module = cfg.module(site)
    acting_letter = pi_twist(Gen(letter))[1].letter if site == cfg.infinity else letter
    top = cutoff(acting_letter, phi.grade)
    result: Dict[PBWMonomial, RatFunc] = {}
    for m, a in expand_elementary(cfg.forms, elem, site, top).items():
        sign, gen = local_generator(cfg, letter, m, site)
        image = contragradient_act(module, gen, phi)
        if not image:
            continue
        if image.grade.total > cfg.grade_bound:
            raise TruncationTooSmall(site, image.grade, cfg.grade_bound)
        for mono, c in image.items():
            value = sign * a * c
            result[mono] = result[mono] + value if mono in result else value
    return {mono: c for mono, c in result.items() if c}


def mu_act(cfg: SiteConfig, F: GlobalSl2Func, w: TensorDual) -> TensorDual:
    """ Sum over all sites of the local action of F on the matching tensor factor. """
    out: Dict[TensorKey, RatFunc] = {}
    for (letter, elem), c in F.items():
        for key, wc in w.items():
            for site in cfg.sites():
                mono = key[site - 1]
                phi = dual_monomial(cfg.module(site), mono)
                image = site_action(cfg, letter, elem, site, phi)
                for mono2, d in image.items():
                    new_key = replace_factor(key, site, mono2)
                    value = c * wc * d
                    out[new_key] = out[new_key] + value if new_key in out else value
    return TensorDual(out)


def mu_chain(cfg: SiteConfig, chain: Chain1) -> TensorDual:
    """ The boundary of a degree -1 chain: mu applied to every (function, tensor) term. """
    out = TensorDual()
    for (letter, elem, key), c in chain.items():
        out += mu_act(cfg, GlobalSl2Func({(letter, elem): c}), TensorDual({key: cfg.alphabet.one}))
    return out


def pointwise_bracket(cfg: SiteConfig, F: GlobalSl2Func, G: GlobalSl2Func) -> GlobalSl2Func:
    """ [X s, Y r] = [X, Y] (s r) with the product decomposed into elementary functions. """
    out = GlobalSl2Func()
    for (x, s), cs in F.items():
        for (y, r), cr in G.items():
            lie = SL2_BRACKET.get((x, y))
            if not lie:
                continue
            product = multiply(cfg.forms, s, r)
            for letter, coeff in lie.items():
                out += GlobalSl2Func([((letter, elem), coeff * cs * cr * v) for elem, v in product.items()])
    return out


def central_residue(cfg: SiteConfig, F: GlobalSl2Func, G: GlobalSl2Func) -> RatFunc:
    """ Sum over all sites of sum_m m F_m G_(-m) <X, Y>; the central terms of the action cancel when it is zero. """
    forms = cfg.forms
    total = cfg.alphabet.zero
    for (x, s), cs in F.items():
        for (y, r), cr in G.items():
            pairing = PAIRING.get((x, y), 0)
            if not pairing:
                continue
            for site in cfg.sites():
                ls, lr = lowest_order(forms, s, site), lowest_order(forms, r, site)
                left = expand_elementary(forms, s, site, -lr)
                right = expand_elementary(forms, r, site, -ls)
                for m, a in left.items():
                    if m and -m in right:
                        total += m * pairing * cs * cr * a * right[-m]
    return total


def derivative_in_point(cfg: SiteConfig, F: GlobalSl2Func, site: int) -> GlobalSl2Func:
    """ d/dz_site of an sl2-valued function with symbolic points. """
    name = f"z{site}"
    out = GlobalSl2Func()
    for (letter, elem), c in F.items():
        dc = cfg.alphabet.diff(cfg.alphabet.coerce(c), name)
        if dc:
            out += GlobalSl2Func({(letter, elem): dc})
        if isinstance(elem, PoleAt) and elem.site == site:
            out += GlobalSl2Func({(letter, PoleAt(site, elem.order + 1)): elem.order * c})
    return out


def scalar_part(F: GlobalSl2Func, letter: str) -> DFunc:
    return DFunc([(elem, c) for (x, elem), c in F.items() if x == letter])


def lie_action_check(cfg: SiteConfig, F: GlobalSl2Func, G: GlobalSl2Func, w: TensorDual) -> TensorCheck:
    """ mu(F) mu(G) w - mu(G) mu(F) w against mu([F, G]) w. """
    lhs = mu_act(cfg, F, mu_act(cfg, G, w)) - mu_act(cfg, G, mu_act(cfg, F, w))
    rhs = mu_act(cfg, pointwise_bracket(cfg, F, G), w)
    return TensorCheck(f"lie-action/{F.to_text()}|{G.to_text()}", lhs, rhs)
