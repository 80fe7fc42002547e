"""Exact arithmetic in ℚ[λ], the coefficient ring of every element"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from tdalgebra.utils import WEIGHT_SYMBOL

Number = Union[int, Fraction]


class Coefficient:
    """
    A univariate polynomial in the formal weight λ with rational
    coefficients. Values are immutable and normalized: no zero coefficient
    is ever stored, so equality is structural.

    .. code-block:: python

        >>> from tdalgebra.coefficients import LAMBDA, Coefficient
        >>> str((LAMBDA - 1) * (LAMBDA + 1))
        'L^2 - 1'
        >>> (LAMBDA * LAMBDA + 1).evaluate(2)
        Fraction(5, 1)
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Number]] = None) -> None:
        normalized: Dict[int, Fraction] = {}
        for exponent, value in (terms or {}).items():
            if not isinstance(exponent, int) or exponent < 0:
                raise ValueError(f"Expected a nonnegative λ-exponent, got {exponent!r}")
            if not isinstance(value, (int, Fraction)):
                raise TypeError(f"Expected an exact rational, got {value!r}")
            value = Fraction(value)
            if value:
                normalized[exponent] = value
        self._set_terms(normalized)

    @classmethod
    def _from_dict(cls, terms: Dict[int, Fraction]) -> Coefficient:
        """Build a coefficient from an already checked dict, dropping zeros"""
        coefficient = cls.__new__(cls)
        coefficient._set_terms({e: v for e, v in terms.items() if v})
        return coefficient

    def _set_terms(self, terms: Dict[int, Fraction]) -> None:
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(sorted(terms.items()))
        if not self._terms:
            self._hash = hash(0)
        elif len(self._terms) == 1 and self._terms[0][0] == 0:
            self._hash = hash(self._terms[0][1])
        else:
            self._hash = hash(self._terms)

    @classmethod
    def constant(cls, value: Number) -> Coefficient:
        return cls({0: value})

    @classmethod
    def coerce(cls, value: Union[Coefficient, Number]) -> Coefficient:
        """Return ``value`` as a coefficient, raise TypeError otherwise"""
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.constant(value)
        raise TypeError(f"Cannot use {value!r} as a coefficient")

    @classmethod
    def parse(cls, text: str) -> Coefficient:
        """Parse the canonical string form, e.g. ``(2/3)L^2 - 1``"""
        from tdalgebra.parser import parse_coefficient

        return parse_coefficient(text)

    # ---------------------------------------------------------------- Access

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms)

    @property
    def degree(self) -> int:
        """Degree in λ, -1 for the zero coefficient"""
        return self._terms[-1][0] if self._terms else -1

    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def constant_term(self) -> Fraction:
        if self._terms and self._terms[0][0] == 0:
            return self._terms[0][1]
        return Fraction(0)

    def evaluate(self, at: Number) -> Fraction:
        """Substitute the rational ``at`` for λ"""
        at = Fraction(at)
        powers = (value * at**exponent for exponent, value in self._terms)
        return sum(powers, Fraction(0))

    # ------------------------------------------------------------ Arithmetic

    def __add__(self, other) -> Coefficient:
        try:
            other = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for exponent, value in other._terms:
            terms[exponent] = terms.get(exponent, 0) + value
        return Coefficient._from_dict(terms)

    __radd__ = __add__

    def __neg__(self) -> Coefficient:
        return Coefficient._from_dict({e: -v for e, v in self._terms})

    def __sub__(self, other) -> Coefficient:
        try:
            other = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Coefficient:
        return (-self) + other

    def __mul__(self, other) -> Coefficient:
        try:
            other = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        terms: Dict[int, Fraction] = {}
        for left_exponent, left in self._terms:
            for right_exponent, right in other._terms:
                exponent = left_exponent + right_exponent
                terms[exponent] = terms.get(exponent, 0) + left * right
        return Coefficient._from_dict(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Coefficient:
        other = Coefficient.coerce(other)
        if not other.is_constant() or not other:
            raise ZeroDivisionError(
                "Coefficients can only be divided by a nonzero rational"
            )
        divisor = other.constant_term
        return Coefficient._from_dict({e: v / divisor for e, v in self._terms})

    def __pow__(self, exponent: int) -> Coefficient:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Coefficients only have nonnegative integer powers")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, __o: object) -> bool:
        try:
            other = Coefficient.coerce(__o)  # type: ignore[arg-type]
        except TypeError:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    # ------------------------------------------------------------- Rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for index, (exponent, value) in enumerate(reversed(self._terms)):
            body = _render_term(exponent, abs(value))
            if index == 0:
                parts.append(f"-{body}" if value < 0 else body)
            else:
                parts.append(f" - {body}" if value < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"<Coefficient: {self}>"

    def is_monomial(self) -> bool:
        """True if a single term is stored, so no parentheses are needed"""
        return len(self._terms) == 1


def _render_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _render_term(exponent: int, magnitude: Fraction) -> str:
    if exponent == 0:
        return _render_rational(magnitude)
    power = WEIGHT_SYMBOL if exponent == 1 else f"{WEIGHT_SYMBOL}^{exponent}"
    if magnitude == 1:
        return power
    if magnitude.denominator == 1:
        return f"{magnitude.numerator}{power}"
    return f"({_render_rational(magnitude)}){power}"


ZERO = Coefficient()
ONE = Coefficient({0: 1})
# The formal weight λ
LAMBDA = Coefficient({1: 1})
