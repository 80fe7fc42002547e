"""
Multiplicative structure of the free commutative λ-TD algebra: the shuffle
⊔ on Ш⁺(A), the product ⋄ and the right shift P on Ш_Λ(A), the double
product ∗_λ and the universal extension map.
"""

from __future__ import annotations

import functools
import logging

from abc import ABC, abstractmethod
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, Dict, Mapping, Optional, Union

from tdalgebra.base import BaseElement, Bialgebra
from tdalgebra.coefficients import LAMBDA, ONE, ZERO, Coefficient, Number
from tdalgebra.combinations import accumulate
from tdalgebra.tensors import Space, TensorElement, graft_into
from tdalgebra.utils import Monomial, Word, word_key

if TYPE_CHECKING:  # pragma: no cover
    from tdalgebra.laws import Operator

logger = logging.getLogger(__name__)

WordTerms = Mapping[Word, Coefficient]


class OperatedAlgebra(ABC):
    """
    What a λ-TD algebra has to provide for the law checkers and for the
    universal extension: a product, a unit, a distinguished operator and a
    zero. Elements must support ``+``, ``-`` and scaling by a coefficient.
    """

    weight: Coefficient

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        """The algebra product"""

    @abstractmethod
    def one(self) -> Any:
        """The unit element"""

    @abstractmethod
    def shift(self, a: Any) -> Any:
        """The distinguished operator"""

    @abstractmethod
    def zero(self) -> Any:
        """The zero element"""


class ShuffleAlgebra(OperatedAlgebra):
    """
    Ш_Λ(A) with its product ⋄ and right shift P, together with the λ-TD
    shuffle ⊔ on Ш⁺(A) that ⋄ is built from.

    Word products are memoized per ordered word pair. With
    ``symmetric_cache=True`` the shuffle cache is keyed on the sorted pair
    instead, which halves the cache but makes commutativity hold by
    construction.
    """

    def __init__(
        self,
        base: Bialgebra,
        weight: Union[Coefficient, Number] = LAMBDA,
        symmetric_cache: bool = False,
    ) -> None:
        self.base = base
        self.weight = Coefficient.coerce(weight)
        self.symmetric_cache = symmetric_cache
        self.unit_letter: Monomial = base.one()
        self._shuffle_cached = functools.lru_cache(maxsize=None)(self._shuffle_words)
        self._diamond_cached = functools.lru_cache(maxsize=None)(self._diamond_words)
        self._diamond_recursive_cached = functools.lru_cache(maxsize=None)(
            self._diamond_recursive_words
        )

    def __eq__(self, __o: object) -> bool:
        if not isinstance(__o, ShuffleAlgebra):
            return False
        return (self.base, self.weight) == (__o.base, __o.weight)

    def __hash__(self) -> int:
        return hash((self.base, self.weight))

    def __repr__(self) -> str:
        return f"<ShuffleAlgebra: {self.base!r}, weight={self.weight}>"

    def cache_info(self) -> Dict[str, Any]:
        return {
            "shuffle": self._shuffle_cached.cache_info(),
            "diamond": self._diamond_cached.cache_info(),
            "diamond_recursive": self._diamond_recursive_cached.cache_info(),
        }

    # --------------------------------------------------------------- Elements

    def one(self) -> TensorElement:
        """The unit word (1_A)"""
        return TensorElement._fast({(self.unit_letter,): ONE}, Space.LAMBDA)

    def zero(self) -> TensorElement:
        return TensorElement._fast({}, Space.LAMBDA)

    def unit(self, value: Union[Coefficient, Number]) -> TensorElement:
        """The unit map μ: c ↦ c·1_A"""
        return self.one().scale(value)

    def embed(self, a: BaseElement) -> TensorElement:
        """The embedding j_A of A as words of length one"""
        return TensorElement._fast({(m,): v for m, v in a._terms.items()}, Space.LAMBDA)

    # ----------------------------------------------------------------- Shuffle

    def _shuffle_pair(self, a: Word, b: Word) -> WordTerms:
        if self.symmetric_cache and word_key(b) < word_key(a):
            a, b = b, a
        return self._shuffle_cached(a, b)

    def _shuffle_words(self, a: Word, b: Word) -> WordTerms:
        if not a:
            return MappingProxyType({b: ONE})
        if not b:
            return MappingProxyType({a: ONE})
        a_head, a_tail = a[0], a[1:]
        b_head, b_tail = b[0], b[1:]
        head = self.base.mul_on_basis(a_head, b_head)

        terms: Dict[Word, Coefficient] = {}
        graft_into(terms, {a_head: ONE}, self._shuffle_pair(a_tail, b))
        graft_into(terms, {b_head: ONE}, self._shuffle_pair(a, b_tail))
        if self.weight:
            graft_into(terms, head, self._shuffle_pair(a_tail, b_tail), self.weight)

        nested: Dict[Word, Coefficient] = {}
        for word, value in self._shuffle_pair(a_tail, (self.unit_letter,)).items():
            for inner, inner_value in self._shuffle_pair(word, b_tail).items():
                accumulate(nested, inner, value * inner_value)
        graft_into(terms, head, nested, -ONE)
        return MappingProxyType({w: v for w, v in terms.items() if v})

    def shuffle(self, a: TensorElement, b: TensorElement) -> TensorElement:
        """
        The λ-TD shuffle product on Ш⁺(A). Operands in Ш_Λ are embedded,
        the result is tagged Ш⁺.
        """
        terms: Dict[Word, Coefficient] = {}
        for u, u_value in a._terms.items():
            for v, v_value in b._terms.items():
                factor = u_value * v_value
                for word, value in self._shuffle_pair(u, v).items():
                    accumulate(terms, word, factor * value)
        return TensorElement._fast(terms, Space.PLUS)

    # ----------------------------------------------------------------- Diamond

    def _diamond_words(self, u: Word, v: Word) -> WordTerms:
        terms: Dict[Word, Coefficient] = {}
        head = self.base.mul_on_basis(u[0], v[0])
        graft_into(terms, head, self._shuffle_pair(u[1:], v[1:]))
        return MappingProxyType({w: value for w, value in terms.items() if value})

    def diamond_words(self, u: Word, v: Word) -> WordTerms:
        """⋄ of two nonempty words, as a read-only term map"""
        return self._diamond_cached(u, v)

    def diamond(self, a: TensorElement, b: TensorElement) -> TensorElement:
        """𝔞⋄𝔟 = a1b1 ⊗ (𝔞′ ⊔ 𝔟′), extended bilinearly"""
        a.require_lambda()
        b.require_lambda()
        terms: Dict[Word, Coefficient] = {}
        for u, u_value in a._terms.items():
            for v, v_value in b._terms.items():
                factor = u_value * v_value
                for word, value in self._diamond_cached(u, v).items():
                    accumulate(terms, word, factor * value)
        return TensorElement._fast(terms, Space.LAMBDA)

    mul = diamond

    def _diamond_recursive_words(self, a: Word, b: Word) -> WordTerms:
        head = self.base.mul_on_basis(a[0], b[0])
        terms: Dict[Word, Coefficient] = {}
        if len(a) == 1 or len(b) == 1:
            graft_into(terms, head, {a[1:] + b[1:]: ONE})
            return MappingProxyType(terms)

        a_tail = TensorElement._fast({a[1:]: ONE}, Space.LAMBDA)
        b_tail = TensorElement._fast({b[1:]: ONE}, Space.LAMBDA)
        shifted_one = self.p_shift(self.one())
        inner = (
            self.diamond_recursive(a_tail, self.p_shift(b_tail))
            + self.diamond_recursive(self.p_shift(a_tail), b_tail)
            + self.diamond_recursive(a_tail, b_tail).scale(self.weight)
            - self.diamond_recursive(
                self.diamond_recursive(a_tail, shifted_one), b_tail
            )
        )
        graft_into(terms, head, inner._terms)
        return MappingProxyType({w: v for w, v in terms.items() if v})

    def diamond_recursive(self, a: TensorElement, b: TensorElement) -> TensorElement:
        """
        ⋄ computed by the case analysis written purely in terms of ⋄ and P,
        without going through ⊔. Agrees with :meth:`diamond`.
        """
        a.require_lambda()
        b.require_lambda()
        terms: Dict[Word, Coefficient] = {}
        for u, u_value in a._terms.items():
            for v, v_value in b._terms.items():
                factor = u_value * v_value
                for word, value in self._diamond_recursive_cached(u, v).items():
                    accumulate(terms, word, factor * value)
        return TensorElement._fast(terms, Space.LAMBDA)

    # ---------------------------------------------------------------- Operator

    def p_shift(self, a: TensorElement) -> TensorElement:
        """The right-shift operator 𝔞 ↦ 1_A ⊗ 𝔞"""
        a.require_lambda()
        return TensorElement._fast(
            {(self.unit_letter,) + word: value for word, value in a._terms.items()},
            Space.LAMBDA,
        )

    shift = p_shift

    def star(
        self, x: TensorElement, y: TensorElement, op: Optional[Operator] = None
    ) -> TensorElement:
        """The double product x ∗_λ y = xP(y) + P(x)y + λxy − xP(1)y"""
        from tdalgebra.laws import RightShift

        op = op or RightShift()
        d = self.diamond
        return (
            d(x, op(self, y))
            + d(op(self, x), y)
            + d(x, y).scale(self.weight)
            - d(d(x, op(self, self.one())), y)
        )

    star_lambda = star


class StarAlgebra(OperatedAlgebra):
    """Ш_Λ(A) with the double product ∗_λ as its product"""

    def __init__(self, algebra: ShuffleAlgebra, op: Optional[Operator] = None) -> None:
        from tdalgebra.laws import RightShift

        self.algebra = algebra
        self.op = op or RightShift()
        self.weight = algebra.weight

    def mul(self, a: TensorElement, b: TensorElement) -> TensorElement:
        return self.algebra.star(a, b, self.op)

    def one(self) -> TensorElement:
        return self.algebra.one()

    def shift(self, a: TensorElement) -> TensorElement:
        return self.algebra.shift(a)

    def zero(self) -> TensorElement:
        return self.algebra.zero()


class BaseTarget(OperatedAlgebra):
    """The base algebra (A, ·) with the zero operator, a λ-TD algebra for any λ"""

    def __init__(self, base: Bialgebra, weight: Union[Coefficient, Number] = LAMBDA):
        self.base = base
        self.weight = Coefficient.coerce(weight)

    def mul(self, a: BaseElement, b: BaseElement) -> BaseElement:
        return self.base.mul(a, b)

    def one(self) -> BaseElement:
        return self.base.unit()

    def shift(self, a: BaseElement) -> BaseElement:
        return a.scale(ZERO)

    def zero(self) -> BaseElement:
        return self.base.element()


def free_extension(
    images: Mapping[int, Any],
    target: OperatedAlgebra,
    a: TensorElement,
    base: Optional[Bialgebra] = None,
) -> Any:
    """
    The unique λ-TD algebra homomorphism f̄ from Ш_Λ(A) to ``target``
    extending the algebra map f: A → target fixed by ``images`` (generator
    index counted from 1 mapped to its image). On words
    f̄(a1⊗𝔞′) = f(a1)·P(f̄(𝔞′)).
    """
    a.require_lambda()

    @functools.lru_cache(maxsize=None)
    def on_letter(letter: Monomial) -> Any:
        if base is not None:
            base.validate_monomial(letter)
        image = target.one()
        for index, power in enumerate(letter, start=1):
            if not power:
                continue
            if index not in images:
                raise KeyError(f"No image given for generator x{index}")
            for _ in range(power):
                image = target.mul(image, images[index])
        return image

    @functools.lru_cache(maxsize=None)
    def on_word(word: Word) -> Any:
        image = on_letter(word[0])
        if len(word) == 1:
            return image
        return target.mul(image, target.shift(on_word(word[1:])))

    result = target.zero()
    for word, value in a._terms.items():
        result = result + on_word(word).scale(value)
    return result


def identity_images(algebra: ShuffleAlgebra) -> Dict[int, TensorElement]:
    """Generator images of the inclusion j_A into Ш_Λ(A)"""
    base = algebra.base
    return {j: algebra.embed(base.generator(j)) for j in range(1, base.nvars + 1)}


def base_images(base: Bialgebra) -> Dict[int, BaseElement]:
    """Generator images of the identity of A"""
    return {j: base.generator(j) for j in range(1, base.nvars + 1)}

