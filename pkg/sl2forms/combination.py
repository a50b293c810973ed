"""Finite formal linear combinations with exact coefficients.

Every vector-like object in the package (differential forms, Verma vectors,
dual vectors, tensors, chains) is a `Combination` keyed by hashable basis
labels. Zero coefficients are never stored, so `not x` is an exact zero test.
"""

from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, Mapping, Optional, Tuple, TypeVar, Union

C = TypeVar("C", bound="Combination")


class Combination:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Union[Mapping[Hashable, Any], Iterable[Tuple[Hashable, Any]]]] = None):
        collected: Dict[Hashable, Any] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, value in items:
                if key in collected:
                    collected[key] = collected[key] + value
                else:
                    collected[key] = value
        self._terms = {key: value for key, value in collected.items() if value}

    def _new(self: C, terms) -> C:
        """Build a combination of the same kind (subclasses carry extra attributes)."""
        return type(self)(terms)

    # -- Access --

    def coeff(self, key: Hashable, default: Any = 0) -> Any:
        return self._terms.get(key, default)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def values(self):
        return self._terms.values()

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_items(self, key: Optional[Callable[[Hashable], Any]] = None):
        return sorted(self._terms.items(), key=lambda item: key(item[0]) if key else repr(item[0]))

    # -- Arithmetic --

    def __add__(self: C, other: C) -> C:
        if not isinstance(other, Combination):
            return NotImplemented
        merged = dict(self._terms)
        for key, value in other.items():
            merged[key] = merged[key] + value if key in merged else value
        return self._new(merged)

    def __sub__(self: C, other: C) -> C:
        if not isinstance(other, Combination):
            return NotImplemented
        return self + (-other)

    def __neg__(self: C) -> C:
        return self._new({key: -value for key, value in self._terms.items()})

    def scale(self: C, scalar: Any) -> C:
        if not scalar:
            return self._new({})
        return self._new({key: scalar * value for key, value in self._terms.items()})

    def __mul__(self: C, scalar: Any) -> C:
        if isinstance(scalar, Combination):
            return NotImplemented
        return self.scale(scalar)

    __rmul__ = __mul__

    def __truediv__(self: C, scalar: Any) -> C:
        return self._new({key: value / scalar for key, value in self._terms.items()})

    def map_coefficients(self: C, func: Callable[[Any], Any]) -> C:
        return self._new({key: func(value) for key, value in self._terms.items()})

    def map_keys(self: C, func: Callable[[Hashable], Hashable]) -> C:
        return self._new([(func(key), value) for key, value in self._terms.items()])

    # -- Comparison --

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Combination):
            return NotImplemented
        return (self - other)._terms == {}

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(f"{key!r}: {value}" for key, value in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"
