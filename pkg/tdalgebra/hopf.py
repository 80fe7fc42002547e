"""
Connected filtered structure of Ш_Λ(A) and its right antipode. The degree
of a word a1⊗...⊗am is deg(a1) + ... + deg(am) + m − 1.
"""

from __future__ import annotations

import functools
import logging

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from tdalgebra.base import Bialgebra, PolynomialBialgebra
from tdalgebra.coalgebra import CocycleCoalgebra, LinearMapTable
from tdalgebra.coefficients import LAMBDA, ONE, Coefficient, Number
from tdalgebra.combinations import accumulate
from tdalgebra.exceptions import InvariantViolation
from tdalgebra.products import ShuffleAlgebra
from tdalgebra.tensors import Space, TensorElement
from tdalgebra.utils import Word, word_key

logger = logging.getLogger(__name__)


def word_degree(word: Word, base: Optional[Bialgebra] = None) -> int:
    if not word:
        raise ValueError("The degree is only defined on nonempty words")
    if base is None:
        letters = sum(sum(letter) for letter in word)
    else:
        letters = sum(base.degree_on_basis(letter) for letter in word)
    return letters + len(word) - 1


def element_degree(a: TensorElement, base: Optional[Bialgebra] = None) -> int:
    """Smallest n with a in the level-n span, 0 for the zero element"""
    return max((word_degree(word, base) for word in a._terms), default=0)


def enumerate_words(base: Bialgebra, degree: int) -> List[Word]:
    """Every basis word of degree at most ``degree``, in canonical order"""
    words: List[Word] = []

    def extend(prefix: Word, budget: int, remaining: int) -> Iterator[Word]:
        if remaining == 0:
            yield prefix
            return
        for letter in base.basis(budget):
            yield from extend(
                prefix + (letter,), budget - base.degree_on_basis(letter), remaining - 1
            )

    for length in range(1, degree + 2):
        words.extend(extend((), degree - length + 1, length))
    return sorted(words, key=word_key)


@dataclass(frozen=True, order=True)
class FiltrationLevel:
    """The span of the words of degree at most ``level``"""

    level: int

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError("Filtration levels are nonnegative")

    def contains(self, a: TensorElement, base: Optional[Bialgebra] = None) -> bool:
        return all(word_degree(word, base) <= self.level for word in a._terms)

    def span(self, base: Bialgebra) -> List[Word]:
        return enumerate_words(base, self.level)


class HopfAlgebra:
    """
    Ш_Λ(A) as a left counital Hopf algebra. The antipode S is the right
    convolution inverse of the identity, S(1) = 1 and S(x) = −Σ x′⋄S(x″)
    over the reduced coproduct Δ̃(x) = Σ x′⊗x″.
    """

    def __init__(self, algebra: ShuffleAlgebra) -> None:
        self.algebra = algebra
        self.base = algebra.base
        self.coalgebra = CocycleCoalgebra(algebra)
        self._antipode_cached = functools.lru_cache(maxsize=None)(self._antipode_word)

    @classmethod
    def polynomial(cls, nvars: int, weight: Union[Coefficient, Number] = LAMBDA):
        return cls(ShuffleAlgebra(PolynomialBialgebra(nvars), weight))

    def degree(self, word: Word) -> int:
        return word_degree(word, self.base)

    def counit_split(self, a: TensorElement) -> Tuple[Coefficient, TensorElement]:
        """a = ε(a)·1 + (a − ε(a)·1), the second part lying in ker ε"""
        scalar = self.coalgebra.counit(a)
        return scalar, a - self.algebra.unit(scalar)

    def _antipode_word(self, word: Word) -> Mapping[Word, Any]:
        element = TensorElement._fast({word: ONE}, Space.LAMBDA)
        scalar, kernel = self.counit_split(element)
        terms = dict(self.algebra.unit(scalar)._terms)
        if not kernel:
            return MappingProxyType(terms)

        degree = element_degree(kernel, self.base)
        for (left, right), value in self.coalgebra.reduced_coproduct(kernel):
            if self.degree(right) >= degree:
                raise InvariantViolation(
                    f"Right factor {right!r} of Δ̃({word!r}) does not drop in degree"
                )
            cached = dict(self._antipode_cached(right))
            image = TensorElement._fast(cached, Space.LAMBDA)
            left_word = TensorElement._fast({left: ONE}, Space.LAMBDA)
            for product_word, product_value in self.algebra.diamond(left_word, image):
                accumulate(terms, product_word, -value * product_value)
        return MappingProxyType({w: v for w, v in terms.items() if v})

    def antipode(self, a: TensorElement) -> TensorElement:
        a.require_lambda()
        terms: Dict[Word, Coefficient] = {}
        for word, value in a._terms.items():
            for image_word, image_value in self._antipode_cached(word).items():
                accumulate(terms, image_word, value * image_value)
        return TensorElement._fast(terms, Space.LAMBDA)

    def antipode_table(self) -> LinearMapTable:
        def on_word(word: Word) -> TensorElement:
            return TensorElement._fast(dict(self._antipode_cached(word)), Space.LAMBDA)

        return LinearMapTable(default=on_word, name="S")

    def convolution_unit(self) -> LinearMapTable:
        return LinearMapTable.counit_unit(self.coalgebra)


# ----------------------------------- Reports -------------------------------- #


@dataclass
class CheckTally:
    """Counts for one property. Reported-only tallies never fail a run"""

    name: str
    asserted: bool = True
    trials: int = 0
    failures: int = 0
    witness: Optional[Dict[str, Any]] = None
    observations: List[Dict[str, Any]] = field(default_factory=list)

    def record(self, ok: bool, witness: Optional[Dict[str, Any]] = None) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if self.witness is None and witness is not None:
                self.witness = witness

    @property
    def passed(self) -> bool:
        return not self.asserted or self.failures == 0


@dataclass
class HopfReport:
    degree_bound: int
    nvars: int
    words: int = 0
    tallies: List[CheckTally] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(tally.passed for tally in self.tallies)

    def header(self) -> Dict[str, Any]:
        return {
            "check": "hopf",
            "degree_bound": self.degree_bound,
            "vars": self.nvars,
            "words": self.words,
        }


def hopf_check(
    degree_bound: int,
    nvars: int,
    weight: Union[Coefficient, Number] = LAMBDA,
    antipode: Optional[LinearMapTable] = None,
) -> HopfReport:
    """
    Enumerate every basis word of degree at most ``degree_bound`` and check
    id ∗ S = e, the counit splitting, and the filtration of ⋄, Δ and Δ̃. The
    value of S ∗ id is tallied but not asserted. ``antipode`` replaces S,
    to see how a wrong antipode is reported.
    """
    if degree_bound < 0:
        raise ValueError("The degree bound must be nonnegative")
    hopf = HopfAlgebra.polynomial(nvars, weight)
    algebra, coalgebra, base = hopf.algebra, hopf.coalgebra, hopf.base
    words = enumerate_words(base, degree_bound)
    logger.info(
        "hopf-check on %d words (bound %d, %d vars)", len(words), degree_bound, nvars
    )

    identity = LinearMapTable.identity()
    unit_map = hopf.convolution_unit()
    antipode = antipode or hopf.antipode_table()

    right_inverse = CheckTally("antipode")
    left_inverse = CheckTally("antipode-left", asserted=False)
    splitting = CheckTally("counit-split")
    products = CheckTally("filtration-product")
    coproducts = CheckTally("filtration-coproduct")
    reduced = CheckTally("reduced-coproduct-shape")
    report = HopfReport(degree_bound, nvars, len(words))
    report.tallies = [
        right_inverse,
        splitting,
        products,
        coproducts,
        reduced,
        left_inverse,
    ]

    for word in words:
        element = TensorElement._fast({word: ONE}, Space.LAMBDA)
        degree = hopf.degree(word)
        expected = unit_map(element)

        value = coalgebra.convolution(identity, antipode, element)
        right_inverse.record(
            value == expected, {"word": element, "(id*S)(w)": value, "e(w)": expected}
        )
        value = coalgebra.convolution(antipode, identity, element)
        left_inverse.record(
            value == expected, {"word": element, "(S*id)(w)": value, "e(w)": expected}
        )

        scalar, kernel = hopf.counit_split(element)
        splitting.record(
            algebra.unit(scalar) + kernel == element
            and not coalgebra.counit(kernel)
            and FiltrationLevel(degree).contains(kernel, base),
            {"word": element, "scalar": scalar, "kernel": kernel},
        )

        square = coalgebra.coproduct(element)
        coproducts.record(
            all(hopf.degree(u) + hopf.degree(v) <= degree for u, v in square.keys()),
            {"word": element, "coproduct": square},
        )
        if kernel:
            tilde = coalgebra.reduced_coproduct(kernel)
            reduced.record(
                all(
                    hopf.degree(u) > 0
                    and hopf.degree(v) < degree
                    and not coalgebra.counit_word(u)
                    for u, v in tilde.keys()
                ),
                {"word": element, "reduced coproduct": tilde},
            )

    for index, left in enumerate(words):
        for right in words[index:]:
            bound = hopf.degree(left) + hopf.degree(right)
            product = algebra.diamond_words(left, right)
            products.record(
                all(hopf.degree(word) <= bound for word in product),
                {
                    "left": TensorElement._fast({left: ONE}, Space.LAMBDA),
                    "right": TensorElement._fast({right: ONE}, Space.LAMBDA),
                    "product": TensorElement._fast(dict(product), Space.LAMBDA),
                },
            )

    logger.info("hopf-check done, cache %s", algebra.cache_info())
    return report
