"""Task lists of the verification suites."""

from typing import Callable, Dict, List, NamedTuple, Optional

import numpy as np

from sl2forms.affine import Grade
from sl2forms.chainmap import SiteConfig
from sl2forms.cli import checks
from sl2forms.cli.config import RunSpec
from sl2forms.derham import function_basis
from sl2forms.utils import sample_rationals


class CheckTask(NamedTuple):
    name: str
    suite: str
    func: Callable
    kwargs: Dict[str, object]


def point_samples(spec: RunSpec) -> List[List[str]]:
    """Seeded random marked points, one list of n distinct rationals per sample."""
    rng = np.random.default_rng(spec.seed)
    return [[str(z) for z in sample_rationals(spec.n, rng)] for _ in range(spec.samples)]


def numeric_values(spec: RunSpec) -> Dict[str, str]:
    return dict(spec.values) if spec.mode == "numeric" else {}


def _kappa0(spec: RunSpec) -> Optional[str]:
    k = spec.value("k")
    return None if k is None else str(k + 2)


def chain_map_tasks(spec: RunSpec) -> List[CheckTask]:
    values = numeric_values(spec)
    tasks = []
    for s, points in enumerate(point_samples(spec)):
        cfg = SiteConfig(checks.forms_config(spec.n, points, values))
        for elem in function_basis(cfg.forms, spec.bound):
            tasks.append(CheckTask(f"chain-map/s{s}/{elem}", "chain-map", checks.chain_map,
                                   dict(n=spec.n, points=points, elem=str(elem), grade_bound=spec.grade_bound,
                                        values=values)))
        tasks.append(CheckTask(f"chain-map/s{s}/injective", "chain-map", checks.eta_injectivity,
                               dict(n=spec.n, points=points, bound=spec.bound, values=values)))
        tasks.append(CheckTask(f"chain-map/s{s}/lie-action", "chain-map", checks.lie_action,
                               dict(n=spec.n, points=points, grade_bound=spec.grade_bound, values=values)))
    return tasks


def identities_tasks(spec: RunSpec) -> List[CheckTask]:
    values = numeric_values(spec)
    tasks = [CheckTask(f"identities/a/b={b}", "identities", checks.identity, dict(kind="a", b=b, values=values))
             for b in range(1, spec.b_max + 1)]
    tasks += [CheckTask(f"identities/b/b={b}", "identities", checks.identity, dict(kind="b", b=b, values=values))
              for b in range(2, spec.b_max + 1)]
    return tasks


def singular_tasks(spec: RunSpec) -> List[CheckTask]:
    kappa = _kappa0(spec)
    tasks = [CheckTask(f"singular/X/b={b}", "singular", checks.singular, dict(kind="A", b=b, kappa=kappa))
             for b in range(0, spec.b_max + 1)]
    tasks += [CheckTask(f"singular/Y/b={b}", "singular", checks.singular, dict(kind="B", b=b, kappa=kappa))
              for b in range(1, spec.b_max + 1)]
    for b in range(1, min(spec.b_max, 2) + 1):
        tasks.append(CheckTask(f"singular/X/b={b}/limit", "singular", checks.limit_consistency,
                               dict(kind="A", b=b, kappa=kappa)))
    tasks.append(CheckTask("singular/mff/F21_a1", "singular", checks.mff, dict(case="F21_a1", kappa=kappa)))
    if spec.b_max >= 2:
        tasks.append(CheckTask("singular/mff/F21_a2", "singular", checks.mff, dict(case="F21_a2", kappa=kappa)))
    return tasks


def relations_tasks(spec: RunSpec) -> List[CheckTask]:
    values = numeric_values(spec)
    tasks = []
    for s, points in enumerate(point_samples(spec)):
        common = dict(n=spec.n, points=points, values=values)
        for b in range(1, spec.b_max + 1):
            tasks.append(CheckTask(f"relations/s{s}/B({b})", "relations", checks.relation,
                                   dict(kind="B", b=b, p=None, **common)))
            tasks.append(CheckTask(f"relations/s{s}/A({b},p=1)", "relations", checks.relation,
                                   dict(kind="A", b=b, p=1, **common)))
    return tasks


def gauss_manin_tasks(spec: RunSpec) -> List[CheckTask]:
    n = spec.n
    elems = [f"pole:1:{b}" for b in range(1, spec.bound + 1)] + [f"t^{b}" for b in range(spec.bound + 1)]
    tasks = [CheckTask(f"gauss-manin/closed/{elem}", "gauss-manin", checks.closed_form, dict(n=n, elem=elem))
             for elem in elems]
    tasks += [CheckTask(f"gauss-manin/log/{i}/z{j}", "gauss-manin", checks.log_connection, dict(n=n, i=i, j=j))
              for i in range(1, n + 1) for j in range(1, n + 1)]
    tasks.append(CheckTask("gauss-manin/flatness", "gauss-manin", checks.flatness, dict(n=n)))
    tasks.append(CheckTask("gauss-manin/restricted", "gauss-manin", checks.restricted, dict(n=n)))
    return tasks


def gram_tasks(spec: RunSpec) -> List[CheckTask]:
    values = numeric_values(spec)
    tasks = []
    for total in range(1, spec.degree_max + 1):
        for p2 in range(total + 1):
            grade = Grade(total - p2, p2)
            tasks.append(CheckTask(f"gram/{grade}", "gram", checks.gram,
                                   dict(p1=grade.p1, p2=grade.p2, values=values)))
    tasks.append(CheckTask("gram/(1,1)/determinant", "gram", checks.gram_oracle, dict(values=values)))
    return tasks


def l_minus_one_tasks(spec: RunSpec) -> List[CheckTask]:
    values = numeric_values(spec)
    tasks = [CheckTask(f"l-minus-one/{letter}/i={i}", "l-minus-one", checks.commutator,
                       dict(letter=letter, i=i, degree_max=spec.degree_max, values=values))
             for letter in ("e", "f", "h") for i in range(-2, 3)]
    tasks += [CheckTask(f"l-minus-one/kz/z{site}", "l-minus-one", checks.kz_leibniz,
                        dict(n=spec.n, site=site, grade_bound=spec.grade_bound))
              for site in range(1, spec.n + 1)]
    return tasks


BUILDERS = {
    "chain-map": chain_map_tasks,
    "identities": identities_tasks,
    "singular": singular_tasks,
    "relations": relations_tasks,
    "gauss-manin": gauss_manin_tasks,
    "gram": gram_tasks,
    "l-minus-one": l_minus_one_tasks,
}


def build_tasks(spec: RunSpec) -> List[CheckTask]:
    tasks = []
    for suite in spec.suites:
        tasks += BUILDERS[suite](spec)
    return tasks
