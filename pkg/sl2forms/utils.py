import os
from fractions import Fraction
from typing import Iterator, List, Tuple

import numpy as np


def mkdirs(dirpath: str) -> str:
    """ Create a directory and all its parents.

    If the folder already exists, its path is returned without raising any exceptions.

    Arguments:
        dirpath: Path where a folder need to be created.

    Returns:
        Path to the (created) folder.
    """
    try:
        os.makedirs(dirpath)
    except FileExistsError:
        pass

    return dirpath


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """ Positive integer compositions of `total` into exactly `parts` ordered parts. """
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def sample_rationals(count: int, rng: np.random.Generator,
                     height: int = 9, max_den: int = 5, distinct: bool = True) -> List[Fraction]:
    """ Draw small-height rationals from a seeded generator.

    Arguments:
        count: How many values to draw.
        rng: Seeded numpy generator; the same seed always gives the same values.
        height: Numerators are drawn from [-height, height].
        max_den: Denominators are drawn from [1, max_den].
        distinct: Reject draws that coincide with an earlier value.

    Returns:
        List of `count` rationals.
    """
    values: List[Fraction] = []
    while len(values) < count:
        value = Fraction(int(rng.integers(-height, height + 1)), int(rng.integers(1, max_den + 1)))
        if distinct and value in values:
            continue
        values.append(value)
    return values
