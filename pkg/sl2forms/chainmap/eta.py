"""The maps eta0 and eta1 from the twisted de Rham complex to the chain complex of
sl2-valued functions with coefficients in the tensor product of contragradient modules.
"""

import logging
from dataclasses import dataclass
from typing import Hashable, List

from sl2forms.affine.pbw import PBWMonomial
from sl2forms.chainmap.action import mu_chain
from sl2forms.chainmap.tensor import Chain1, SiteConfig, TensorCheck, TensorDual, chain_term, site_tensor, vacuum_tensor
from sl2forms.derham import DForm, DFunc, Elementary, PoleAt, PolyPow, function_basis, twisted_d
from sl2forms.dualform.identities import e_pairs, f_pairs
from sl2forms.field import rank

logger = logging.getLogger("sl2forms.chainmap")


def eta1_elementary(cfg: SiteConfig, elem: Elementary) -> TensorDual:
    """ d(t-z_m)/(t-z_m)^(b+1) -> -kappa (f/T^b v_m)* at site m; t^b dt -> kappa (e/T^(b+1) v_inf)*. """
    if isinstance(elem, PoleAt):
        mono = PBWMonomial.standard(fs=(elem.order - 1,))
        return site_tensor(cfg, elem.site, mono, -cfg.kappa)
    mono = PBWMonomial.standard(es=(elem.degree + 1,))
    return site_tensor(cfg, cfg.infinity, mono, cfg.kappa)


def eta1(cfg: SiteConfig, omega: DForm) -> TensorDual:
    result = TensorDual()
    for elem, c in omega.items():
        result += eta1_elementary(cfg, elem).scale(c)
    return result


def _pair_tensor(cfg: SiteConfig, site: int, letter: str, pairs) -> TensorDual:
    """ Sum of the duals of (X/T^i)(X/T^j) v at one site, X = f or e. """
    result = TensorDual()
    for i, j in pairs:
        mono = PBWMonomial.standard(fs=(i, j)) if letter == "f" else PBWMonomial.standard(es=(i, j))
        result += site_tensor(cfg, site, mono)
    return result


def eta0_elementary(cfg: SiteConfig, elem: Elementary) -> Chain1:
    vacuum = vacuum_tensor(cfg)
    result = chain_term("f", elem, vacuum)
    if isinstance(elem, PoleAt):
        m, b = elem.site, elem.order
        for l in range(1, b + 1):
            pairs = _pair_tensor(cfg, m, "f", f_pairs(b - l))
            single = site_tensor(cfg, m, PBWMonomial.standard(fs=(b - l,)))
            result -= chain_term("e", PoleAt(m, l), pairs, 2)
            result -= chain_term("h", PoleAt(m, l), single)
        return result
    b = elem.degree
    for l in range(0, b - 1):
        pairs = _pair_tensor(cfg, cfg.infinity, "e", e_pairs(b - l))
        single = site_tensor(cfg, cfg.infinity, PBWMonomial.standard(es=(b - l - 1,)))
        result -= chain_term("e", PolyPow(l), pairs, 2)
        result -= chain_term("h", PolyPow(l + 1), single)
    return result


def eta0(cfg: SiteConfig, f: DFunc) -> Chain1:
    result = Chain1()
    for elem, c in f.items():
        result += eta0_elementary(cfg, elem).scale(c)
    return result


def verify_chain_map(cfg: SiteConfig, f: DFunc) -> TensorCheck:
    """ Compare eta1(d f) with mu(eta0(f)).

    Raises:
        TruncationTooSmall: Some tensor factor would leave the grade bound.
    """
    lhs = eta1(cfg, twisted_d(cfg.forms, f))
    rhs = mu_chain(cfg, eta0(cfg, f))
    check = TensorCheck(f"chain-map/{f.to_text()}", lhs, rhs)
    if not check.holds:
        logger.debug("chain map residual for %s: %s", f.to_text(), check.residual.to_text())
    return check


@dataclass
class InjectivityCheck:
    degree: int
    functions: int
    function_rank: int
    forms: int
    form_rank: int

    @property
    def injective(self) -> bool:
        return self.function_rank == self.functions and self.form_rank == self.forms


def _image_rank(cfg: SiteConfig, images: List) -> int:
    keys: List[Hashable] = sorted({k for image in images for k in image.keys()}, key=repr)
    zero = cfg.alphabet.zero
    rows = [[image.coeff(k, zero) for k in keys] for image in images]
    if not keys:
        return 0
    return rank(rows, alphabet=cfg.alphabet)


def eta_injectivity_check(cfg: SiteConfig, bound: int) -> InjectivityCheck:
    """ Ranks of eta0 and eta1 on the elementary functions and forms of order <= bound. """
    functions = function_basis(cfg.forms, bound)
    forms = [PoleAt(i, b) for i in range(1, cfg.n + 1) for b in range(1, bound + 1)]
    forms += [PolyPow(b) for b in range(bound)]
    function_images = [eta0_elementary(cfg, elem) for elem in functions]
    form_images = [eta1_elementary(cfg, elem) for elem in forms]
    return InjectivityCheck(bound, len(functions), _image_rank(cfg, function_images),
                            len(forms), _image_rank(cfg, form_images))
