"""
Seeded randomized law checking. Every suite draws its samples from its own
``random.Random`` seeded with ``"<seed>:<suite name>"``, so reports are
byte-identical for a given seed whatever suites are selected.
"""

from __future__ import annotations

import logging
import random
import time

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, ClassVar, Dict, List, Optional, Tuple, Union

from tdalgebra.base import BaseElement, BaseTensor
from tdalgebra.coalgebra import LinearMapTable
from tdalgebra.coefficients import LAMBDA, ONE, ZERO, Coefficient, Number
from tdalgebra.hopf import CheckTally, HopfAlgebra
from tdalgebra.laws import (
    TD,
    LambdaTD,
    ModifiedTD,
    Operator,
    RightShift,
    RotaBaxter,
    Scale,
    Zero,
    check_law,
)
from tdalgebra.products import (
    BaseTarget,
    ShuffleAlgebra,
    StarAlgebra,
    base_images,
    free_extension,
    identity_images,
)
from tdalgebra.tensors import Space, TensorElement, TensorSquareElement, graft
from tdalgebra.utils import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_LENGTH,
    DEFAULT_TRIALS,
    MAX_SAMPLE_WORDS,
    RegisterMixin,
    Word,
)

logger = logging.getLogger(__name__)

# Rational points used to judge identities in specialized algebras
SPECIALIZATION_POINTS = (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 2))


class SampleGenerator:
    """
    Random elements at desk scale: at most ``MAX_SAMPLE_WORDS`` words, word
    lengths up to ``max_length``, letter degrees summing to at most
    ``max_degree``, coefficients from {±1, ±1/2, λ, λ−1}.
    """

    def __init__(
        self,
        algebra: ShuffleAlgebra,
        rng: random.Random,
        max_degree: int = DEFAULT_MAX_DEGREE,
        max_length: int = DEFAULT_MAX_LENGTH,
    ) -> None:
        self.algebra = algebra
        self.base = algebra.base
        self.rng = rng
        self.max_degree = max_degree
        self.max_length = max(max_length, 1)
        weight = algebra.weight
        self.coefficients = (
            ONE,
            -ONE,
            Coefficient.constant(Fraction(1, 2)),
            Coefficient.constant(Fraction(-1, 2)),
            weight,
            weight - 1,
        )

    def coefficient(self) -> Coefficient:
        return self.rng.choice(self.coefficients)

    def rational(self) -> Fraction:
        return Fraction(self.rng.randint(-9, 9), self.rng.randint(1, 5))

    def monomial(self, degree: int) -> Tuple[int, ...]:
        exponents = [0] * self.base.nvars
        for _ in range(degree):
            exponents[self.rng.randrange(self.base.nvars)] += 1
        return tuple(exponents)

    def word(self, max_length: Optional[int] = None, max_degree: Optional[int] = None):
        """A random word. Letter degrees are spread uniformly over the letters"""
        max_length = max_length or self.max_length
        max_degree = self.max_degree if max_degree is None else max_degree
        length = self.rng.randint(1, max_length)
        degrees = [0] * length
        for _ in range(self.rng.randint(0, max(max_degree, 0))):
            degrees[self.rng.randrange(length)] += 1
        return tuple(self.monomial(degree) for degree in degrees)

    def bounded_word(self, bound: int) -> Word:
        """A random word of word degree at most ``bound``"""
        length = self.rng.randint(1, min(self.max_length, bound + 1))
        return self.word(max_length=length, max_degree=bound - length + 1)

    def element(self, words: int = MAX_SAMPLE_WORDS, bound: Optional[int] = None):
        terms: Dict[Word, Coefficient] = {}
        for _ in range(self.rng.randint(1, words)):
            word = self.word() if bound is None else self.bounded_word(bound)
            terms[word] = terms.get(word, ZERO) + self.coefficient()
        return TensorElement(terms, Space.LAMBDA)

    def term(self) -> TensorElement:
        """A single coefficient times a word"""
        return self.element(words=1)

    def base_element(self) -> BaseElement:
        terms: Dict[Tuple[int, ...], Coefficient] = {}
        for _ in range(self.rng.randint(1, MAX_SAMPLE_WORDS)):
            monomial = self.monomial(self.rng.randint(0, self.max_degree))
            terms[monomial] = terms.get(monomial, ZERO) + self.coefficient()
        return self.base.element(terms)

    def square(self) -> TensorSquareElement:
        """
        A sum of up to ``MAX_SAMPLE_WORDS`` pure tensors u⊗v of Ш_Λ ⊗ Ш_Λ with
        word degrees adding up to at most ``max_degree``
        """
        square = TensorSquareElement()
        for _ in range(self.rng.randint(1, MAX_SAMPLE_WORDS)):
            split = self.rng.randint(0, self.max_degree)
            left = self.element(words=1, bound=split)
            right = self.element(words=1, bound=self.max_degree - split)
            square = square + TensorSquareElement.from_product(left, right)
        return square


class HarnessContext:
    """Structures shared by all suites of one run"""

    def __init__(
        self,
        nvars: int,
        weight: Union[Coefficient, Number] = LAMBDA,
        max_degree: int = DEFAULT_MAX_DEGREE,
        max_length: int = DEFAULT_MAX_LENGTH,
    ) -> None:
        self.hopf = HopfAlgebra.polynomial(nvars, weight)
        self.algebra = self.hopf.algebra
        self.coalgebra = self.hopf.coalgebra
        self.base = self.algebra.base
        self.max_degree = max_degree
        self.max_length = max_length

    def samples(self, rng: random.Random) -> SampleGenerator:
        return SampleGenerator(self.algebra, rng, self.max_degree, self.max_length)


# ---------------------------------- Suites ---------------------------------- #


class LawSuite(ABC, RegisterMixin):
    """A named family of checks producing one tally"""

    registry_attribute: ClassVar[str] = "suite_name"
    suite_name: ClassVar[str] = ""
    asserted: ClassVar[bool] = True

    def __init__(self, context: HarnessContext) -> None:
        self.context = context
        self.algebra = context.algebra
        self.coalgebra = context.coalgebra

    @abstractmethod
    def run(self, samples: SampleGenerator, trials: int) -> CheckTally:
        """Run the suite and return its tally"""


class TrialSuite(LawSuite):
    """A suite made of ``trials`` independent random trials"""

    def run(self, samples: SampleGenerator, trials: int) -> CheckTally:
        tally = CheckTally(self.suite_name, asserted=self.asserted)
        for _ in range(trials):
            witness = self.trial(samples)
            tally.record(witness is None, witness)
        return tally

    @abstractmethod
    def trial(self, samples: SampleGenerator) -> Optional[Dict[str, Any]]:
        """None when the law holds, otherwise a witness"""


def _unless_equal(left: Any, right: Any, **witness: Any) -> Optional[Dict[str, Any]]:
    if left == right:
        return None
    witness.update({"lhs": left, "rhs": right})
    return witness


# ------------------------------- Coefficients ------------------------------- #


@LawSuite.register_subclass
class CoefficientRing(TrialSuite):
    suite_name = "coefficient-ring"

    def trial(self, samples):
        a, b, c = (samples.coefficient() * samples.rational() for _ in range(3))
        at = samples.rational()
        checks = [
            ((a + b) + c, a + (b + c)),
            ((a * b) * c, a * (b * c)),
            (a + b, b + a),
            (a * b, b * a),
            (a * (b + c), a * b + a * c),
            (a + ZERO, a),
            (a * ONE, a),
            ((a * b).evaluate(at), a.evaluate(at) * b.evaluate(at)),
            ((a + b).evaluate(at), a.evaluate(at) + b.evaluate(at)),
        ]
        for left, right in checks:
            if left != right:
                witness = {"a": a, "b": b, "c": c, "at": str(at)}
                return dict(witness, lhs=left, rhs=right)
        return None


# ------------------------------ Base bialgebra ------------------------------ #


@LawSuite.register_subclass
class BaseBialgebraLaws(TrialSuite):
    suite_name = "base-bialgebra"

    def trial(self, samples):
        base = self.context.base
        a, b, c = samples.base_element(), samples.base_element(), samples.base_element()
        delta_a, delta_b = base.coproduct(a), base.coproduct(b)
        alone = BaseTensor.from_elements(a)
        checks = [
            ("commutative", a * b, b * a),
            ("associative", (a * b) * c, a * (b * c)),
            ("unit", base.unit() * a, a),
            ("coproduct-hom", base.coproduct(a * b), base.tensor_mul(delta_a, delta_b)),
            ("counit-hom", base.counit(a * b), base.counit(a) * base.counit(b)),
            (
                "coassociative",
                base.coproduct_at(delta_a, 1),
                base.coproduct_at(delta_a, 0),
            ),
            ("left-counit", base.counit_at(delta_a, 0), alone),
            ("right-counit", base.counit_at(delta_a, 1), alone),
        ]
        for name, left, right in checks:
            if left != right:
                return {"law": name, "a": a, "b": b, "lhs": left, "rhs": right}
        if base.degree(a * b) > base.degree(a) + base.degree(b):
            return {"law": "filtration", "a": a, "b": b}
        for (u, v) in base.coproduct(a).keys():
            if base.degree_on_basis(u) + base.degree_on_basis(v) > base.degree(a):
                return {"law": "coproduct-filtration", "a": a}
        return None


# ---------------------------------- Shuffle --------------------------------- #


@LawSuite.register_subclass
class ShuffleCommutativity(TrialSuite):
    suite_name = "shuffle-comm"

    def trial(self, samples):
        a, b = samples.element(), samples.element()
        product = self.algebra.shuffle
        return _unless_equal(product(a, b), product(b, a), a=a, b=b)


@LawSuite.register_subclass
class ShuffleAssociativity(TrialSuite):
    suite_name = "shuffle-assoc"

    def trial(self, samples):
        a, b, c = samples.term(), samples.term(), samples.term()
        shuffle = self.algebra.shuffle
        return _unless_equal(
            shuffle(shuffle(a, b), c), shuffle(a, shuffle(b, c)), a=a, b=b, c=c
        )


@LawSuite.register_subclass
class ShuffleUnit(TrialSuite):
    """1 ∈ 𝐤 is the unit of ⊔ and 1_A ⊔ 𝔞 = 𝔞 ⊔ 1_A = 1_A⊗𝔞 + λ𝔞"""

    suite_name = "shuffle-unit"

    def trial(self, samples):
        algebra = self.algebra
        a = samples.element()
        scalar = TensorElement({(): ONE}, Space.PLUS)
        if algebra.shuffle(scalar, a) != a or algebra.shuffle(a, scalar) != a:
            return {"a": a, "law": "scalar unit"}
        one = algebra.one()
        expected = algebra.p_shift(a) + a.scale(algebra.weight)
        return _unless_equal(algebra.shuffle(one, a), expected, a=a) or _unless_equal(
            algebra.shuffle(a, one), expected, a=a
        )


@LawSuite.register_subclass
class ShuffleShift(TrialSuite):
    """(1_A⊗𝔞)⊔𝔟 = 𝔞⊔(1_A⊗𝔟) = 1_A⊗(𝔞⊔𝔟)"""

    suite_name = "shuffle-shift"

    def trial(self, samples):
        algebra = self.algebra
        a, b = samples.element(), samples.element()
        left = algebra.shuffle(algebra.p_shift(a), b)
        middle = algebra.shuffle(a, algebra.p_shift(b))
        right = graft(self.context.base.unit(), algebra.shuffle(a, b))
        return _unless_equal(left, middle, a=a, b=b) or _unless_equal(
            left, right, a=a, b=b
        )


# ---------------------------------- Diamond --------------------------------- #


@LawSuite.register_subclass
class DiamondCommutativity(TrialSuite):
    suite_name = "diamond-comm"

    def trial(self, samples):
        a, b = samples.element(), samples.element()
        product = self.algebra.diamond
        return _unless_equal(product(a, b), product(b, a), a=a, b=b)


@LawSuite.register_subclass
class DiamondAssociativity(TrialSuite):
    suite_name = "diamond-assoc"

    def trial(self, samples):
        a, b, c = samples.term(), samples.term(), samples.term()
        d = self.algebra.diamond
        return _unless_equal(d(d(a, b), c), d(a, d(b, c)), a=a, b=b, c=c)


@LawSuite.register_subclass
class DiamondUnit(TrialSuite):
    suite_name = "diamond-unit"

    def trial(self, samples):
        a = samples.element()
        one = self.algebra.one()
        return _unless_equal(self.algebra.diamond(one, a), a, a=a) or _unless_equal(
            self.algebra.diamond(a, one), a, a=a
        )


@LawSuite.register_subclass
class DiamondRecursion(TrialSuite):
    """⋄ through ⊔ agrees with the recursion written with ⋄ and P only"""

    suite_name = "diamond-recursion"

    def trial(self, samples):
        a, b = samples.element(), samples.element()
        return _unless_equal(
            self.algebra.diamond(a, b), self.algebra.diamond_recursive(a, b), a=a, b=b
        )


@LawSuite.register_subclass
class EmbeddingHomomorphism(TrialSuite):
    """j_A(ab) = j_A(a) ⋄ j_A(b)"""

    suite_name = "embedding-hom"

    def trial(self, samples):
        a, b = samples.base_element(), samples.base_element()
        embed = self.algebra.embed
        product = self.algebra.diamond(embed(a), embed(b))
        return _unless_equal(embed(a * b), product, a=a, b=b)


# -------------------------------- Operators --------------------------------- #


def _law_witness(report) -> Optional[Dict[str, Any]]:
    if report.holds:
        return None
    example = report.counterexample
    return {
        "law": report.law,
        "operator": report.operator,
        "x": example.x,
        "y": example.y,
        "lhs": example.lhs,
        "rhs": example.rhs,
        "difference": example.difference,
    }


@LawSuite.register_subclass
class RightShiftLambdaTD(TrialSuite):
    """P satisfies the λ-TD equation on (Ш_Λ, ⋄)"""

    suite_name = "lambda-td"

    def trial(self, samples):
        pair = (samples.element(), samples.element())
        return _law_witness(check_law(self.algebra, RightShift(), LambdaTD(), [pair]))


@LawSuite.register_subclass
class StarAssociativity(TrialSuite):
    suite_name = "star-assoc"

    def trial(self, samples):
        a, b, c = samples.term(), samples.term(), samples.term()
        star = self.algebra.star
        return _unless_equal(star(star(a, b), c), star(a, star(b, c)), a=a, b=b, c=c)


@LawSuite.register_subclass
class StarModifiedTD(TrialSuite):
    """(Ш_Λ, ∗_λ, P) satisfies the λ-modified TD equation, ∗_λ being the product"""

    suite_name = "star-modified-td"

    def trial(self, samples):
        pair = (samples.element(), samples.element())
        star = StarAlgebra(self.algebra)
        return _law_witness(check_law(star, RightShift(), ModifiedTD(), [pair]))


@LawSuite.register_subclass
class StarLambdaTD(TrialSuite):
    """Whether P is λ-TD for ∗_λ is reported only"""

    suite_name = "star-lambda-td"
    asserted = False

    def trial(self, samples):
        pair = (samples.element(), samples.element())
        star = StarAlgebra(self.algebra)
        return _law_witness(check_law(star, RightShift(), LambdaTD(), [pair]))


def _operator_specimens(weight: Coefficient) -> List[Operator]:
    return [RightShift(), Zero(), Scale(weight), Scale(2 * weight), Scale(ONE)]


@LawSuite.register_subclass
class SignDuality(TrialSuite):
    """P and −P give the same verdicts for a law of weight w and −w"""

    suite_name = "sign-duality"

    def trial(self, samples):
        algebra = self.algebra
        pair = [(samples.element(), samples.element())]
        laws = [LambdaTD(), RotaBaxter(), TD()]
        for op in _operator_specimens(algebra.weight):
            for law in laws:
                verdict = check_law(algebra, op, law, pair).holds
                dual = check_law(algebra, -op, law.negated(algebra), pair).holds
                if verdict != dual:
                    x, y = pair[0]
                    return {"operator": str(op), "law": str(law), "x": x, "y": y}
        return None


@LawSuite.register_subclass
class WeightSpecialization(TrialSuite):
    """
    With P(1) = 0, w·1 or 2w·1 the λ-TD verdict is the Rota-Baxter verdict of
    weight w, 0 or −w, generically and at sample rational weights
    """

    suite_name = "weight-specialization"

    def trial(self, samples):
        algebra = self.algebra
        weight = algebra.weight
        pair = [(samples.element(), samples.element())]
        cases = [
            (Zero(), RotaBaxter(weight)),
            (Scale(weight), RotaBaxter(ZERO)),
            (Scale(2 * weight), RotaBaxter(-weight)),
        ]
        for op, rota_baxter in cases:
            for at in (None,) + SPECIALIZATION_POINTS:
                td = check_law(algebra, op, LambdaTD(), pair, at=at).holds
                rb = check_law(algebra, op, rota_baxter, pair, at=at).holds
                if td != rb:
                    return {
                        "operator": str(op),
                        "law": str(rota_baxter),
                        "at": "generic" if at is None else str(at),
                        "x": pair[0][0],
                        "y": pair[0][1],
                    }
        return None


@LawSuite.register_subclass
class ScaleDiscrepancy(TrialSuite):
    """For P = c·id the λ-TD equation is off by exactly cλ·x⋄y (rhs − lhs)"""

    suite_name = "scale-discrepancy"

    def trial(self, samples):
        algebra = self.algebra
        c = samples.coefficient()
        x, y = samples.element(), samples.element()
        report = check_law(algebra, Scale(c), LambdaTD(), [(x, y)])
        expected = algebra.diamond(x, y).scale(c * algebra.weight)
        actual = algebra.zero()
        if report.counterexample:
            actual = report.counterexample.difference
        return _unless_equal(actual, expected, x=x, y=y, c=c)


# ------------------------------ Free extension ------------------------------ #


@LawSuite.register_subclass
class ExtensionIdentity(TrialSuite):
    """The extension of j_A to Ш_Λ is the identity"""

    suite_name = "extension-identity"

    def trial(self, samples):
        a = samples.element()
        image = free_extension(identity_images(self.algebra), self.algebra, a)
        return _unless_equal(image, a, a=a)


@LawSuite.register_subclass
class ExtensionZero(TrialSuite):
    """Extension into (A, ·, 0): a homomorphism intertwining P with 0"""

    suite_name = "extension-zero"

    def trial(self, samples):
        base = self.context.base
        target = BaseTarget(base, self.algebra.weight)
        images = base_images(base)
        a, b = samples.element(), samples.element()

        def extend(element):
            return free_extension(images, target, element, base)

        product = extend(self.algebra.diamond(a, b))
        return (
            _unless_equal(product, extend(a) * extend(b), a=a, b=b)
            or _unless_equal(extend(self.algebra.p_shift(a)), base.element(), a=a)
            or _unless_equal(extend(self.algebra.one()), base.unit())
        )


# --------------------------------- Coalgebra -------------------------------- #


@LawSuite.register_subclass
class CoproductHomomorphism(TrialSuite):
    suite_name = "coproduct-hom"

    def trial(self, samples):
        c = self.coalgebra
        a, b = samples.element(), samples.element()
        return _unless_equal(
            c.coproduct(self.algebra.diamond(a, b)),
            c.square_mul(c.coproduct(a), c.coproduct(b)),
            a=a,
            b=b,
        )


@LawSuite.register_subclass
class CounitHomomorphism(TrialSuite):
    suite_name = "counit-hom"

    def trial(self, samples):
        c = self.coalgebra
        a, b = samples.element(), samples.element()
        return _unless_equal(
            c.counit(self.algebra.diamond(a, b)), c.counit(a) * c.counit(b), a=a, b=b
        )


@LawSuite.register_subclass
class Coassociativity(TrialSuite):
    suite_name = "coassoc"

    def trial(self, samples):
        c = self.coalgebra
        a = samples.element()
        square = c.coproduct(a)
        right, left = c.coproduct_on_right(square), c.coproduct_on_left(square)
        return _unless_equal(right, left, a=a)


@LawSuite.register_subclass
class LeftCounit(TrialSuite):
    """(ε⊗id)Δ = id, also as e ∗ id = id"""

    suite_name = "left-counit"

    def trial(self, samples):
        c = self.coalgebra
        a = samples.element()
        unit_map = LinearMapTable.counit_unit(c)
        return _unless_equal(c.left_counit_image(a), a, a=a) or _unless_equal(
            c.convolution(unit_map, LinearMapTable.identity(), a), a, a=a
        )


@LawSuite.register_subclass
class RightCounitFails(LawSuite):
    """(id⊗ε)Δ(P(x)) = 0 while P(x) ≠ 0, for every generator x"""

    suite_name = "right-counit-fails"

    def run(self, samples: SampleGenerator, trials: int) -> CheckTally:
        tally = CheckTally(self.suite_name)
        base = self.context.base
        for index in range(1, base.nvars + 1):
            x = self.algebra.embed(base.generator(index))
            shifted = self.algebra.p_shift(x)
            image = self.coalgebra.right_counit_image(shifted)
            witness = {"x": x, "(id⊗ε)Δ(P(x))": image, "P(x)": shifted}
            tally.record(not image and bool(shifted), witness)
            tally.observations.append(witness)
        return tally


@LawSuite.register_subclass
class SquareLambdaTD(TrialSuite):
    """(Ш_Λ⊗Ш_Λ, •, id⊗P) satisfies the λ-TD equation"""

    suite_name = "square-lambda-td"

    def trial(self, samples):
        pair = (samples.square(), samples.square())
        report = check_law(self.coalgebra.square, RightShift(), LambdaTD(), [pair])
        return _law_witness(report)


@LawSuite.register_subclass
class CocycleInterchange(TrialSuite):
    """(id⊗Δ)(id⊗P) = (id⊗id⊗P)(id⊗Δ) and the same for Δ⊗id"""

    suite_name = "cocycle-interchange"

    def trial(self, samples):
        c = self.coalgebra
        s = TensorSquareElement.from_product(samples.element(), samples.element())
        shifted = c.square_op(s)
        return _unless_equal(
            c.coproduct_on_right(shifted), c.shift_last(c.coproduct_on_right(s)), s=s
        ) or _unless_equal(
            c.coproduct_on_left(shifted), c.shift_last(c.coproduct_on_left(s)), s=s
        )


@LawSuite.register_subclass
class TensorCoproductHomomorphism(TrialSuite):
    """id⊗Δ and Δ⊗id are algebra maps for the componentwise products"""

    suite_name = "tensor-coproduct-hom"

    def trial(self, samples):
        c = self.coalgebra
        s, t = samples.square(), samples.square()
        product = c.square_mul(s, t)
        return _unless_equal(
            c.coproduct_on_right(product),
            c.square_mul(c.coproduct_on_right(s), c.coproduct_on_right(t)),
            s=s,
            t=t,
        ) or _unless_equal(
            c.coproduct_on_left(product),
            c.square_mul(c.coproduct_on_left(s), c.coproduct_on_left(t)),
            s=s,
            t=t,
        )


# ----------------------------------- Hopf ----------------------------------- #


@LawSuite.register_subclass
class FiltrationProduct(TrialSuite):
    suite_name = "filtration-product"

    def trial(self, samples):
        hopf = self.context.hopf
        u, v = samples.word(), samples.word()
        bound = hopf.degree(u) + hopf.degree(v)
        product = self.algebra.diamond_words(u, v)
        if all(hopf.degree(word) <= bound for word in product):
            return None
        return {"u": u, "v": v, "product": TensorElement(dict(product))}


@LawSuite.register_subclass
class FiltrationCoproduct(TrialSuite):
    suite_name = "filtration-coproduct"

    def trial(self, samples):
        hopf = self.context.hopf
        word = samples.word()
        degree = hopf.degree(word)
        element = TensorElement({word: ONE})
        square = self.coalgebra.coproduct(element)
        if any(hopf.degree(u) + hopf.degree(v) > degree for u, v in square.keys()):
            return {"word": element, "coproduct": square}
        scalar, kernel = hopf.counit_split(element)
        if kernel:
            for u, v in self.coalgebra.reduced_coproduct(kernel).keys():
                if hopf.degree(u) == 0 or hopf.degree(v) >= degree:
                    reduced = self.coalgebra.reduced_coproduct(kernel)
                    return {"word": element, "reduced": reduced}
        return None


@LawSuite.register_subclass
class AntipodeIdentity(TrialSuite):
    """id ∗ S = e, with the splitting a = ε(a)·1 + (a − ε(a)·1)"""

    suite_name = "antipode"

    def trial(self, samples):
        hopf = self.context.hopf
        a = samples.element(bound=self.context.max_degree) + self.algebra.unit(
            samples.coefficient()
        )
        scalar, kernel = hopf.counit_split(a)
        if self.algebra.unit(scalar) + kernel != a or self.coalgebra.counit(kernel):
            return {"a": a, "scalar": scalar, "kernel": kernel}
        if hopf.antipode(self.algebra.one()) != self.algebra.one():
            return {"S(1)": hopf.antipode(self.algebra.one())}
        identity = LinearMapTable.identity()
        value = self.coalgebra.convolution(identity, hopf.antipode_table(), a)
        return _unless_equal(value, self.algebra.unit(self.coalgebra.counit(a)), a=a)


@LawSuite.register_subclass
class AntipodeLeft(TrialSuite):
    """S ∗ id against e, reported only"""

    suite_name = "antipode-left"
    asserted = False

    def trial(self, samples):
        hopf = self.context.hopf
        a = samples.element(bound=self.context.max_degree)
        identity = LinearMapTable.identity()
        value = self.coalgebra.convolution(hopf.antipode_table(), identity, a)
        return _unless_equal(value, self.algebra.unit(self.coalgebra.counit(a)), a=a)


# ---------------------------------- Running --------------------------------- #


@dataclass
class LawsReport:
    suite: str
    seed: int
    trials: int
    max_degree: int
    max_length: int
    nvars: int
    weight: str
    tallies: List[CheckTally] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(tally.passed for tally in self.tallies)

    def header(self) -> Dict[str, Any]:
        return {
            "check": "laws",
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "max_degree": self.max_degree,
            "max_length": self.max_length,
            "vars": self.nvars,
            "lambda": self.weight,
        }


def suite_names() -> List[str]:
    return list(LawSuite.get_registered())


def run_laws(
    suite: str = "all",
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_length: int = DEFAULT_MAX_LENGTH,
    nvars: int = 2,
    weight: Union[Coefficient, Number] = LAMBDA,
) -> LawsReport:
    """Run one suite, or every registered suite for ``all``"""
    if trials < 0 or max_degree < 0 or max_length < 1:
        raise ValueError(
            "trials and max-degree must be nonnegative, max-length positive"
        )
    names = suite_names() if suite == "all" else [suite]
    suites = [LawSuite.get(name) for name in names]
    weight = Coefficient.coerce(weight)
    context = HarnessContext(nvars, weight, max_degree, max_length)
    report = LawsReport(suite, seed, trials, max_degree, max_length, nvars, str(weight))
    for suite_class in suites:
        rng = random.Random(f"{seed}:{suite_class.suite_name}")
        start = time.perf_counter()
        tally = suite_class(context).run(context.samples(rng), trials)
        logger.info(
            "%s: %d/%d in %.2fs",
            tally.name,
            tally.trials - tally.failures,
            tally.trials,
            time.perf_counter() - start,
        )
        report.tallies.append(tally)
    return report
