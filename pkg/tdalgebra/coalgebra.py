"""
The cocycle coproduct Δ, the counit ε, the reduced coproduct, the algebra
(Ш_Λ ⊗ Ш_Λ, •, id⊗P) and convolution of linear maps.
"""

from __future__ import annotations

import functools
import itertools
import logging

from types import MappingProxyType
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from tdalgebra.coefficients import ONE, ZERO, Coefficient
from tdalgebra.combinations import accumulate
from tdalgebra.exceptions import NonZeroCounit, UnassignedWord
from tdalgebra.products import OperatedAlgebra, ShuffleAlgebra
from tdalgebra.tensors import (
    Space,
    TensorCubeElement,
    TensorElement,
    TensorSquareElement,
    _WordTensor,
)
from tdalgebra.utils import Word

logger = logging.getLogger(__name__)

PairTerms = Mapping[Tuple[Word, Word], Coefficient]


class CocycleCoalgebra:
    """
    Coalgebra structure of Ш_Λ(A). Δ is defined on words by recursion on the
    length, Δ(a1⊗𝔞′) = Δ_A(a1) • (id⊗P)Δ(𝔞′), and memoized per word.
    """

    def __init__(self, algebra: ShuffleAlgebra) -> None:
        self.algebra = algebra
        self.base = algebra.base
        self.square = SquareAlgebra(self)
        self._coproduct_cached = functools.lru_cache(maxsize=None)(self._coproduct_word)

    # ---------------------------------------------------------- Tensor squares

    def _componentwise(self, a: Mapping, b: Mapping) -> Dict[tuple, Coefficient]:
        diamond = self.algebra.diamond_words
        terms: Dict[tuple, Coefficient] = {}
        for left, left_value in a.items():
            for right, right_value in b.items():
                factor = left_value * right_value
                parts = [diamond(u, v).items() for u, v in zip(left, right)]
                for choice in itertools.product(*parts):
                    value = factor
                    for _, coefficient in choice:
                        value = value * coefficient
                    accumulate(terms, tuple(word for word, _ in choice), value)
        return terms

    def square_mul(self, a: _WordTensor, b: _WordTensor) -> _WordTensor:
        """Componentwise ⋄ on Ш_Λ^⊗k (• for k = 2)"""
        if a.arity != b.arity:
            raise ValueError("Cannot multiply tensors of different arity")
        return a._like(self._componentwise(a._terms, b._terms))

    def square_op(self, a: TensorSquareElement) -> TensorSquareElement:
        """id⊗P, the right shift applied to the right factor"""
        unit = self.algebra.unit_letter
        return a._like({(u, (unit,) + v): value for (u, v), value in a._terms.items()})

    def shift_last(self, a: TensorCubeElement) -> TensorCubeElement:
        """id⊗id⊗P"""
        unit = self.algebra.unit_letter
        return a._like({k[:-1] + ((unit,) + k[-1],): v for k, v in a._terms.items()})

    # --------------------------------------------------------------- Coproduct

    def _coproduct_word(self, word: Word) -> PairTerms:
        head = {
            ((left,), (right,)): value
            for (left, right), value in self.base.coproduct_on_basis(word[0]).items()
        }
        if len(word) == 1:
            return MappingProxyType(head)
        unit = self.algebra.unit_letter
        shifted = {
            (u, (unit,) + v): value
            for (u, v), value in self._coproduct_cached(word[1:]).items()
        }
        terms = self._componentwise(head, shifted)
        logger.debug("Δ of a word of length %d has %d terms", len(word), len(terms))
        return MappingProxyType({k: v for k, v in terms.items() if v})

    def coproduct(self, a: TensorElement) -> TensorSquareElement:
        a.require_lambda()
        terms: Dict[Tuple[Word, Word], Coefficient] = {}
        for word, value in a._terms.items():
            for pair, count in self._coproduct_cached(word).items():
                accumulate(terms, pair, value * count)
        return TensorSquareElement()._like(terms)

    def coproduct_on_left(self, a: TensorSquareElement) -> TensorCubeElement:
        """Δ⊗id"""
        terms: Dict[Tuple[Word, ...], Coefficient] = {}
        for (u, v), value in a._terms.items():
            for (u1, u2), count in self._coproduct_cached(u).items():
                accumulate(terms, (u1, u2, v), value * count)
        return TensorCubeElement()._like(terms)

    def coproduct_on_right(self, a: TensorSquareElement) -> TensorCubeElement:
        """id⊗Δ"""
        terms: Dict[Tuple[Word, ...], Coefficient] = {}
        for (u, v), value in a._terms.items():
            for (v1, v2), count in self._coproduct_cached(v).items():
                accumulate(terms, (u, v1, v2), value * count)
        return TensorCubeElement()._like(terms)

    # ------------------------------------------------------------------ Counit

    def counit_word(self, word: Word) -> Coefficient:
        if len(word) != 1:
            return ZERO
        return self.base.counit_on_basis(word[0])

    def counit(self, a: TensorElement) -> Coefficient:
        """ε(a1) on words of length one, 0 on longer words"""
        a.require_lambda()
        total = ZERO
        for word, value in a._terms.items():
            total = total + value * self.counit_word(word)
        return total

    def left_counit_image(self, a: TensorElement) -> TensorElement:
        """(ε⊗id)Δ(a), read in Ш_Λ through 𝐤 ⊗ Ш_Λ ≅ Ш_Λ"""
        terms: Dict[Word, Coefficient] = {}
        for (u, v), value in self.coproduct(a)._terms.items():
            counit = self.counit_word(u)
            if counit:
                accumulate(terms, v, value * counit)
        return TensorElement._fast(terms, Space.LAMBDA)

    def right_counit_image(self, a: TensorElement) -> TensorElement:
        """(id⊗ε)Δ(a), read in Ш_Λ through Ш_Λ ⊗ 𝐤 ≅ Ш_Λ"""
        terms: Dict[Word, Coefficient] = {}
        for (u, v), value in self.coproduct(a)._terms.items():
            counit = self.counit_word(v)
            if counit:
                accumulate(terms, u, value * counit)
        return TensorElement._fast(terms, Space.LAMBDA)

    def reduced_coproduct(self, a: TensorElement) -> TensorSquareElement:
        """Δ̃(a) = Δ(a) − 1⊗a, defined on ker ε"""
        counit = self.counit(a)
        if counit:
            raise NonZeroCounit(f"ε({a}) = {counit}, expected 0")
        one_tensor_a = TensorSquareElement.from_product(self.algebra.one(), a)
        return self.coproduct(a) - one_tensor_a

    # ------------------------------------------------------------- Convolution

    def convolution(
        self, f: LinearMapTable, g: LinearMapTable, a: TensorElement
    ) -> TensorElement:
        """(f ∗ g)(a) = m∘(f⊗g)∘Δ(a)"""
        result = self.algebra.zero()
        for (u, v), value in self.coproduct(a)._terms.items():
            product = self.algebra.diamond(f.on_word(u), g.on_word(v))
            result = result + product.scale(value)
        return result


class SquareAlgebra(OperatedAlgebra):
    """(Ш_Λ ⊗ Ш_Λ, •, id⊗P), a λ-TD algebra with unit 1⊗1"""

    def __init__(self, coalgebra: CocycleCoalgebra) -> None:
        self.coalgebra = coalgebra
        self.algebra = coalgebra.algebra
        self.weight = coalgebra.algebra.weight

    def mul(
        self, a: TensorSquareElement, b: TensorSquareElement
    ) -> TensorSquareElement:
        return self.coalgebra.square_mul(a, b)

    def one(self) -> TensorSquareElement:
        unit = (self.algebra.unit_letter,)
        return TensorSquareElement({(unit, unit): ONE})

    def shift(self, a: TensorSquareElement) -> TensorSquareElement:
        return self.coalgebra.square_op(a)

    def zero(self) -> TensorSquareElement:
        return TensorSquareElement()


class LinearMapTable:
    """
    A linear map Ш_Λ → Ш_Λ given by its values on basis words. Words missing
    from ``assignments`` go through ``default``; without a default they
    raise :class:`UnassignedWord`.
    """

    def __init__(
        self,
        assignments: Optional[Mapping[Word, TensorElement]] = None,
        default: Optional[Callable[[Word], TensorElement]] = None,
        name: str = "f",
    ) -> None:
        self.assignments: Dict[Word, TensorElement] = dict(assignments or {})
        self.default = default
        self.name = name

    @classmethod
    def identity(cls) -> LinearMapTable:
        def as_word(word: Word) -> TensorElement:
            return TensorElement._fast({word: ONE}, Space.LAMBDA)

        return cls(default=as_word, name="id")

    @classmethod
    def counit_unit(cls, coalgebra: CocycleCoalgebra) -> LinearMapTable:
        """e = μ∘ε, the unit of convolution"""
        algebra = coalgebra.algebra

        def scalar_part(word: Word) -> TensorElement:
            return algebra.unit(coalgebra.counit_word(word))

        return cls(default=scalar_part, name="e")

    @classmethod
    def from_function(
        cls,
        function: Callable[[Word], TensorElement],
        words: Iterable[Word],
        name: str = "f",
    ) -> LinearMapTable:
        """Tabulate ``function`` on a finite word set, no default"""
        return cls({word: function(word) for word in words}, name=name)

    def on_word(self, word: Word) -> TensorElement:
        if word in self.assignments:
            return self.assignments[word]
        if self.default is None:
            raise UnassignedWord(f"{self.name} has no value for the word {word!r}")
        return self.default(word)

    def __call__(self, a: TensorElement) -> TensorElement:
        result = TensorElement._fast({}, Space.LAMBDA)
        for word, value in a._terms.items():
            result = result + self.on_word(word).scale(value)
        return result

    def __repr__(self) -> str:
        return f"<LinearMapTable: {self.name}, {len(self.assignments)} assigned words>"
