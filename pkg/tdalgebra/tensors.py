"""Carrier modules Ш⁺(A) = ⊕_{n≥0} A^⊗n and Ш_Λ(A) = ⊕_{n≥1} A^⊗n"""

from __future__ import annotations

import enum
import itertools

from typing import Any, Dict, Mapping, Optional, Sequence, Tuple, Union

from tdalgebra.base import BaseElement
from tdalgebra.coefficients import ONE, Coefficient, Number
from tdalgebra.combinations import LinearCombination, accumulate
from tdalgebra.exceptions import SpaceMismatch
from tdalgebra.utils import Monomial, Word, word_key

# A pure tensor a1⊗...⊗am, the empty word being 1 ∈ A^⊗0 = 𝐤
TensorWord = Word


class Space(enum.Enum):
    """Which carrier module an element lives in"""

    PLUS = "Ш⁺"
    LAMBDA = "Ш_Λ"


def _validate_word(word: Any) -> None:
    if not isinstance(word, tuple):
        raise TypeError(f"Expected a word (tuple of monomials), got {word!r}")
    width = None
    for letter in word:
        if not isinstance(letter, tuple) or not all(
            isinstance(e, int) and e >= 0 for e in letter
        ):
            raise TypeError(f"Expected an exponent tuple, got {letter!r}")
        if width is not None and len(letter) != width:
            raise ValueError(f"Letters of {word!r} have different generator counts")
        width = len(letter)


class TensorElement(LinearCombination):
    """
    Sparse combination of words. Elements tagged ``Space.LAMBDA`` never hold
    the empty word; elements tagged ``Space.PLUS`` may. Equality compares the
    terms only, Ш_Λ being a submodule of Ш⁺.
    """

    def __init__(
        self,
        terms: Optional[Mapping[Word, Union[Coefficient, Number]]] = None,
        space: Space = Space.LAMBDA,
    ) -> None:
        self.space = space
        super().__init__(terms)

    def validate(self, key: Any) -> None:
        _validate_word(key)
        if self.space is Space.LAMBDA and not key:
            raise SpaceMismatch("The empty word does not belong to Ш_Λ")

    def sort_key(self, key: Word) -> Any:
        return word_key(key)

    def _check_compatible(self, other: LinearCombination) -> None:
        if other.space is not self.space:  # type: ignore[attr-defined]
            raise SpaceMismatch(
                f"Cannot mix {self.space.value} and "
                f"{other.space.value} "  # type: ignore[attr-defined]
                "without an explicit embedding"
            )

    @classmethod
    def zero(cls, space: Space = Space.LAMBDA) -> TensorElement:
        return cls({}, space)

    @classmethod
    def _fast(cls, terms: Dict[Word, Coefficient], space: Space) -> TensorElement:
        """Build from trusted terms, skipping validation but dropping zeros"""
        element = cls.__new__(cls)
        element.space = space
        element._terms = {word: value for word, value in terms.items() if value}
        element._hash = None
        return element

    @classmethod
    def from_pure(
        cls, factors: Sequence[BaseElement], space: Space = Space.LAMBDA
    ) -> TensorElement:
        """Expand a1⊗...⊗am multilinearly into the word basis"""
        terms: Dict[Word, Coefficient] = {}
        for choice in itertools.product(*(f._terms.items() for f in factors)):
            value = ONE
            for _, coefficient in choice:
                value = value * coefficient
            accumulate(terms, tuple(m for m, _ in choice), value)
        return cls(terms, space)

    def to_plus(self) -> TensorElement:
        """Embed into Ш⁺"""
        new = self._like(self._terms)
        new.space = Space.PLUS
        return new

    def to_lambda(self) -> TensorElement:
        """Regard an element of Ш⁺ without empty word as an element of Ш_Λ"""
        if () in self._terms:
            raise SpaceMismatch("Element has a scalar component, it is not in Ш_Λ")
        new = self._like(self._terms)
        new.space = Space.LAMBDA
        return new

    def require_lambda(self) -> None:
        """Raise unless every word has length at least one"""
        if () in self._terms:
            raise SpaceMismatch("Operation is only defined on Ш_Λ, found a scalar term")


def graft_into(
    terms: Dict[Word, Coefficient],
    head: Mapping[Monomial, Coefficient],
    tail: Mapping[Word, Coefficient],
    factor: Coefficient = ONE,
) -> None:
    """
    Accumulate factor·(head ⊗ tail) into ``terms``. A scalar component c of
    the tail (the empty word) contributes c·(head) as a word of length one.
    """
    for letter, head_value in head.items():
        scale = factor * head_value
        for word, value in tail.items():
            accumulate(terms, (letter,) + word, scale * value)


def graft(head: BaseElement, tail: TensorElement) -> TensorElement:
    """head ⊗ tail, an element of Ш⁺"""
    terms: Dict[Word, Coefficient] = {}
    graft_into(terms, head._terms, tail._terms)
    return TensorElement({}, Space.PLUS)._like(terms)


class _WordTensor(LinearCombination):
    arity = 0

    def validate(self, key: Any) -> None:
        if not isinstance(key, tuple) or len(key) != self.arity:
            raise TypeError(f"Expected a tuple of {self.arity} words, got {key!r}")
        for word in key:
            _validate_word(word)
            if not word:
                raise SpaceMismatch("Tensor factors must be words of Ш_Λ")

    def sort_key(self, key: Tuple[Word, ...]) -> Any:
        return tuple(word_key(word) for word in key)


class TensorSquareElement(_WordTensor):
    """Element of Ш_Λ ⊗ Ш_Λ, keyed by pairs of words"""

    arity = 2

    @classmethod
    def from_product(cls, left: TensorElement, right: TensorElement):
        left.require_lambda()
        right.require_lambda()
        terms = {
            (u, v): a * b
            for u, a in left._terms.items()
            for v, b in right._terms.items()
        }
        return cls()._like(terms)


class TensorCubeElement(_WordTensor):
    """Element of Ш_Λ^⊗3, flat triples of words"""

    arity = 3
