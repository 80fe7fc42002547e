"""
The generating bialgebra A. Upstream modules only talk to A through the
``Bialgebra`` capability contract, so another connected filtered base can be
swapped in by implementing it.
"""

from __future__ import annotations

import functools
import itertools
import math

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple, Union

from tdalgebra.coefficients import ONE, ZERO, Coefficient, Number
from tdalgebra.combinations import LinearCombination, accumulate
from tdalgebra.exceptions import GeneratorMismatch
from tdalgebra.utils import Monomial


class Bialgebra(ABC):
    """Capability contract of a base bialgebra with a monomial basis"""

    nvars: int

    @abstractmethod
    def one(self) -> Monomial:
        """Basis monomial of the unit 1_A"""

    @abstractmethod
    def mul_on_basis(
        self, left: Monomial, right: Monomial
    ) -> Dict[Monomial, Coefficient]:
        """Product of two basis monomials"""

    @abstractmethod
    def coproduct_on_basis(
        self, monomial: Monomial
    ) -> Dict[Tuple[Monomial, Monomial], Coefficient]:
        """Δ_A of a basis monomial"""

    @abstractmethod
    def counit_on_basis(self, monomial: Monomial) -> Coefficient:
        """ε_A of a basis monomial"""

    @abstractmethod
    def degree_on_basis(self, monomial: Monomial) -> int:
        """Filtration degree of a basis monomial"""

    @abstractmethod
    def basis(self, max_degree: int) -> Iterator[Monomial]:
        """Every basis monomial of degree at most ``max_degree``"""

    @abstractmethod
    def validate_monomial(self, monomial: Any) -> None:
        """Raise if ``monomial`` is not a basis key of this algebra"""

    @abstractmethod
    def generator(self, index: int) -> BaseElement:
        """The generator x<index>, counted from 1"""

    # ------------------------------------------------------ Derived helpers

    def element(
        self, terms: Optional[Mapping[Monomial, Union[Coefficient, Number]]] = None
    ):
        return BaseElement(self, terms)

    def unit(self) -> BaseElement:
        return BaseElement(self, {self.one(): ONE})

    def mul(self, a: BaseElement, b: BaseElement) -> BaseElement:
        self._check_owner(a)
        self._check_owner(b)
        terms: Dict[Monomial, Coefficient] = {}
        for left, left_value in a._terms.items():
            for right, right_value in b._terms.items():
                product = left_value * right_value
                for monomial, value in self.mul_on_basis(left, right).items():
                    accumulate(terms, monomial, product * value)
        return a._like(terms)

    def coproduct(self, a: BaseElement) -> BaseTensor:
        self._check_owner(a)
        terms: Dict[Tuple[Monomial, ...], Coefficient] = {}
        for monomial, value in a._terms.items():
            for pair, count in self.coproduct_on_basis(monomial).items():
                accumulate(terms, pair, value * count)
        return BaseTensor(self, 2)._like(terms)

    def counit(self, a: BaseElement) -> Coefficient:
        self._check_owner(a)
        total = ZERO
        for monomial, value in a._terms.items():
            total = total + value * self.counit_on_basis(monomial)
        return total

    def degree(self, a: BaseElement) -> int:
        """min{k | a ∈ A^k}, 0 for the zero element"""
        return max((self.degree_on_basis(m) for m in a._terms), default=0)

    def tensor_mul(self, a: BaseTensor, b: BaseTensor) -> BaseTensor:
        """Factorwise product in A^⊗k"""
        if a.arity != b.arity:
            raise ValueError("Cannot multiply tensors of different arity")
        terms: Dict[Tuple[Monomial, ...], Coefficient] = {}
        for left, left_value in a._terms.items():
            for right, right_value in b._terms.items():
                factors = [self.mul_on_basis(x, y).items() for x, y in zip(left, right)]
                for choice in itertools.product(*factors):
                    value = left_value * right_value
                    for _, count in choice:
                        value = value * count
                    accumulate(terms, tuple(m for m, _ in choice), value)
        return a._like(terms)

    def coproduct_at(self, tensor: BaseTensor, position: int) -> BaseTensor:
        """Apply Δ_A to one factor of a tensor, raising its arity by one"""
        terms: Dict[Tuple[Monomial, ...], Coefficient] = {}
        for key, value in tensor._terms.items():
            for pair, count in self.coproduct_on_basis(key[position]).items():
                expanded = key[:position] + pair + key[position + 1 :]
                accumulate(terms, expanded, value * count)
        return BaseTensor(self, tensor.arity + 1)._like(terms)

    def counit_at(self, tensor: BaseTensor, position: int) -> BaseTensor:
        """Apply ε_A to one factor of a tensor, lowering its arity by one"""
        terms: Dict[Tuple[Monomial, ...], Coefficient] = {}
        for key, value in tensor._terms.items():
            counit = self.counit_on_basis(key[position])
            if counit:
                accumulate(terms, key[:position] + key[position + 1 :], value * counit)
        return BaseTensor(self, tensor.arity - 1)._like(terms)

    def _check_owner(self, a: LinearCombination) -> None:
        if getattr(a, "algebra", None) != self:
            raise GeneratorMismatch(f"{a!r} does not belong to {self!r}")


@dataclass(frozen=True)
class PolynomialBialgebra(Bialgebra):
    """
    Commutative polynomial algebra 𝐤[x1, ..., xv] whose generators are
    primitive: Δ_A(x) = x⊗1 + 1⊗x and ε_A(x) = 0. Monomials are exponent
    vectors and the filtration is the total degree.
    """

    nvars: int = 2

    def __post_init__(self) -> None:
        if not isinstance(self.nvars, int) or self.nvars < 1:
            raise ValueError(f"Expected at least one generator, got {self.nvars!r}")

    def one(self) -> Monomial:
        return (0,) * self.nvars

    def generator(self, index: int) -> BaseElement:
        """The generator x<index>, counted from 1"""
        if not 1 <= index <= self.nvars:
            raise ValueError(f"x{index} is not one of the {self.nvars} generators")
        return self.element({self.monomial(index - 1, 1): ONE})

    def monomial(self, position: int, power: int) -> Monomial:
        exponents = [0] * self.nvars
        exponents[position] = power
        return tuple(exponents)

    def validate_monomial(self, monomial: Any) -> None:
        if not isinstance(monomial, tuple):
            raise TypeError(f"Expected a monomial exponent tuple, got {monomial!r}")
        if len(monomial) != self.nvars:
            raise GeneratorMismatch(
                f"Monomial {monomial!r} does not have {self.nvars} exponents"
            )
        if not all(isinstance(e, int) and e >= 0 for e in monomial):
            raise ValueError(f"Monomial {monomial!r} has a negative exponent")

    def mul_on_basis(
        self, left: Monomial, right: Monomial
    ) -> Dict[Monomial, Coefficient]:
        return {tuple(a + b for a, b in zip(left, right)): ONE}

    @functools.lru_cache(maxsize=None)
    def coproduct_on_basis(
        self, monomial: Monomial
    ) -> Dict[Tuple[Monomial, Monomial], Coefficient]:
        terms = {}
        for split in itertools.product(*(range(n + 1) for n in monomial)):
            count = 1
            for n, i in zip(monomial, split):
                count *= math.comb(n, i)
            right = tuple(n - i for n, i in zip(monomial, split))
            terms[(tuple(split), right)] = Coefficient.constant(count)
        return terms

    def counit_on_basis(self, monomial: Monomial) -> Coefficient:
        return ZERO if any(monomial) else ONE

    def degree_on_basis(self, monomial: Monomial) -> int:
        return sum(monomial)

    def basis(self, max_degree: int) -> Iterator[Monomial]:
        if max_degree < 0:
            return iter(())
        monomials = []
        for degree in range(max_degree + 1):
            for variables in itertools.combinations_with_replacement(
                range(self.nvars), degree
            ):
                exponents = [0] * self.nvars
                for variable in variables:
                    exponents[variable] += 1
                monomials.append(tuple(exponents))
        return iter(sorted(monomials, key=lambda m: (sum(m), m)))


class BaseElement(LinearCombination):
    """
    Sparse linear combination of base monomials. ``a * b`` multiplies in
    A when both sides are base elements and scales otherwise.
    """

    def __init__(
        self,
        algebra: Bialgebra,
        terms: Optional[Mapping[Monomial, Union[Coefficient, Number]]] = None,
    ) -> None:
        self.algebra = algebra
        super().__init__(terms)

    def validate(self, key: Any) -> None:
        self.algebra.validate_monomial(key)

    def sort_key(self, key: Monomial) -> Any:
        return (self.algebra.degree_on_basis(key), key)

    def _check_compatible(self, other: LinearCombination) -> None:
        if getattr(other, "algebra", None) != self.algebra:
            raise GeneratorMismatch(
                "Cannot combine elements of different base algebras"
            )

    def __mul__(self, other: Any):
        if isinstance(other, BaseElement):
            return self.algebra.mul(self, other)
        return super().__mul__(other)

    def __rmul__(self, other: Any):
        return super().__mul__(other)


class BaseTensor(LinearCombination):
    """Element of A^⊗arity, keys are tuples of monomials"""

    def __init__(
        self,
        algebra: Bialgebra,
        arity: int,
        terms: Optional[
            Mapping[Tuple[Monomial, ...], Union[Coefficient, Number]]
        ] = None,
    ) -> None:
        self.algebra = algebra
        self.arity = arity
        super().__init__(terms)

    def validate(self, key: Any) -> None:
        if not isinstance(key, tuple) or len(key) != self.arity:
            raise TypeError(f"Expected a tuple of {self.arity} monomials, got {key!r}")
        for monomial in key:
            self.algebra.validate_monomial(monomial)

    def sort_key(self, key: Tuple[Monomial, ...]) -> Any:
        return key

    def _check_compatible(self, other: LinearCombination) -> None:
        if getattr(other, "algebra", None) != self.algebra or other.arity != self.arity:
            raise GeneratorMismatch("Cannot combine tensors of different shapes")

    @classmethod
    def from_elements(cls, *factors: BaseElement) -> BaseTensor:
        """Tensor product of base elements, expanded over monomials"""
        algebra = factors[0].algebra
        terms: Dict[Tuple[Monomial, ...], Coefficient] = {}
        for choice in itertools.product(*(f._terms.items() for f in factors)):
            value = ONE
            for _, coefficient in choice:
                value = value * coefficient
            accumulate(terms, tuple(m for m, _ in choice), value)
        return cls(algebra, len(factors))._like(terms)
