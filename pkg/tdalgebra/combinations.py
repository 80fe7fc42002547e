from __future__ import annotations

import copy

from abc import ABC, abstractmethod
from typing import (
    Any,
    Callable,
    Dict,
    Hashable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    TypeVar,
    Union,
)

from tdalgebra.coefficients import ZERO, Coefficient, Number
from tdalgebra.utils import REPR_OUTPUT_SIZE

T = TypeVar("T", bound="LinearCombination")


def accumulate(
    terms: Dict[Any, Coefficient], key: Hashable, value: Coefficient
) -> None:
    """Add ``value`` to ``terms[key]``. Zeros are dropped later by ``_like``"""
    current = terms.get(key)
    terms[key] = value if current is None else current + value


class LinearCombination(ABC):
    """
    Base class for every sparse element type: a map from basis keys to
    nonzero coefficients in ℚ[λ]. Subclasses say what a valid key is and
    how keys are ordered.
    """

    def __init__(
        self, terms: Optional[Mapping[Any, Union[Coefficient, Number]]] = None
    ) -> None:
        normalized: Dict[Any, Coefficient] = {}
        for key, value in (terms or {}).items():
            self.validate(key)
            value = Coefficient.coerce(value)
            if value:
                normalized[key] = value
        self._terms = normalized
        self._hash: Optional[int] = None

    @abstractmethod
    def validate(self, key: Any) -> None:
        """Raise if ``key`` is not a basis key of this space"""

    @abstractmethod
    def sort_key(self, key: Any) -> Any:
        """Canonical ordering of the basis keys"""

    def _like(self: T, terms: Dict[Any, Coefficient]) -> T:
        """Same type and attributes as self, with new (unchecked) terms"""
        new = copy.copy(self)
        new._terms = {key: value for key, value in terms.items() if value}
        new._hash = None
        return new

    def _check_compatible(self, other: LinearCombination) -> None:
        """Hook for subclasses that refuse to be mixed"""

    # ---------------------------------------------------------------- Access

    def items(self) -> List[Tuple[Any, Coefficient]]:
        """Terms in canonical order"""
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]))

    def keys(self) -> List[Any]:
        return [key for key, _ in self.items()]

    def coefficient(self, key: Any) -> Coefficient:
        return self._terms.get(key, ZERO)

    def __iter__(self) -> Iterator[Tuple[Any, Coefficient]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key: Any) -> bool:
        return key in self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def map_coefficients(self: T, function: Callable[[Coefficient], Coefficient]) -> T:
        return self._like({key: function(value) for key, value in self._terms.items()})

    def specialize(self: T, at: Number) -> T:
        """Evaluate every coefficient at the rational weight ``at``"""
        return self.map_coefficients(
            lambda value: Coefficient.constant(value.evaluate(at))
        )

    # ------------------------------------------------------------ Arithmetic

    def _combine(self: T, other: Any, sign: int) -> T:
        if not isinstance(other, LinearCombination) or not isinstance(
            other, self.__class__
        ):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            accumulate(terms, key, value if sign > 0 else -value)
        return self._like(terms)

    def __add__(self: T, other: Any) -> T:
        return self._combine(other, 1)

    def __sub__(self: T, other: Any) -> T:
        return self._combine(other, -1)

    def __neg__(self: T) -> T:
        return self._like({key: -value for key, value in self._terms.items()})

    def scale(self: T, factor: Union[Coefficient, Number]) -> T:
        factor = Coefficient.coerce(factor)
        if not factor:
            return self._like({})
        return self._like({key: factor * value for key, value in self._terms.items()})

    def __mul__(self: T, other: Any) -> T:
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    # ------------------------------------------------------------ Comparison

    def __eq__(self, __o: object) -> bool:
        if not isinstance(__o, self.__class__) and not isinstance(self, __o.__class__):
            return False
        return self._terms == __o._terms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        from tdalgebra.render import render_text

        return render_text(self)

    def __repr__(self) -> str:
        items = self.items()
        shown = " + ".join(f"{value}*{key}" for key, value in items[:REPR_OUTPUT_SIZE])
        if len(items) > REPR_OUTPUT_SIZE:
            shown += " + ...(remaining elements truncated)..."
        return f"<{self.__class__.__name__}: {shown or 0}>"
