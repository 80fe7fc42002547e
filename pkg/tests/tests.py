import importlib
import itertools
import json
import random

from fractions import Fraction
from pathlib import Path

import pytest

from hypothesis import given, settings

from tdalgebra import HopfAlgebra, ShuffleAlgebra
from tdalgebra.base import BaseTensor, PolynomialBialgebra
from tdalgebra.cli import main
from tdalgebra.coalgebra import LinearMapTable
from tdalgebra.coefficients import LAMBDA, ONE, ZERO, Coefficient
from tdalgebra.exceptions import (
    GeneratorMismatch,
    NonZeroCounit,
    ParseError,
    RegistryError,
    SpaceMismatch,
    UnassignedWord,
)
from tdalgebra.harness import LawSuite, SampleGenerator, run_laws, suite_names
from tdalgebra.hopf import FiltrationLevel, enumerate_words, hopf_check, word_degree
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
    operator_from_name,
)
from tdalgebra.parser import parse_coefficient, parse_element, parse_json
from tdalgebra.products import (
    BaseTarget,
    StarAlgebra,
    base_images,
    free_extension,
    identity_images,
)
from tdalgebra.render import JSON, TEXT, render, render_json, render_report
from tdalgebra.tensors import Space, TensorElement, TensorSquareElement, graft
from tdalgebra.utils import REPR_OUTPUT_SIZE
from tests.strategies import coefficients, elements, rationals, words

# Register the custom operator and law suite before any lookup
importlib.import_module("tests.registered")

CURRENT_PATH = Path(__file__).resolve(True).parent

# Letters of 𝐤[x1, x2]
U, X1, X2, X1X2 = (0, 0), (1, 0), (0, 1), (1, 1)
# Letters of 𝐤[x]
I, X, XX = (0,), (1,), (2,)


def w(*letters, coefficient=1):
    return TensorElement({tuple(letters): coefficient})


def pair(left, right, coefficient=1):
    return TensorSquareElement({(left, right): coefficient})


@pytest.fixture()
def algebra():
    yield ShuffleAlgebra(PolynomialBialgebra(2))


@pytest.fixture()
def hopf():
    yield HopfAlgebra.polynomial(1)


@pytest.fixture()
def golden():
    with open(CURRENT_PATH / "data/golden.json", "r") as fp:
        yield json.load(fp)


class CoefficientTests:
    def test_arithmetic(self):
        """Ring operations on ℚ[λ] are exact"""
        value = (LAMBDA - 1) * (LAMBDA + 1)
        assert value == Coefficient({2: 1, 0: -1})
        assert value.degree == 2
        assert (value - value) == ZERO
        assert ZERO.degree == -1
        assert (LAMBDA / 2) * 2 == LAMBDA
        assert LAMBDA**0 == ONE

    def test_division_by_polynomial_is_refused(self):
        """Only nonzero rationals divide a coefficient"""
        with pytest.raises(ZeroDivisionError):
            LAMBDA / LAMBDA
        with pytest.raises(ZeroDivisionError):
            LAMBDA / 0

    def test_evaluate(self):
        """Substituting a rational for λ"""
        assert (LAMBDA * LAMBDA + 1).evaluate(2) == 5
        assert (LAMBDA - 1).evaluate(Fraction(1, 2)) == Fraction(-1, 2)

    @pytest.mark.parametrize(
        "value, text",
        [
            (ZERO, "0"),
            (ONE, "1"),
            (-LAMBDA, "-L"),
            (LAMBDA * Fraction(1, 2), "(1/2)L"),
            (Coefficient({2: Fraction(2, 3), 0: -1}), "(2/3)L^2 - 1"),
            (3 * LAMBDA - 2, "3L - 2"),
        ],
    )
    def test_render(self, value, text):
        """Canonical string of a coefficient"""
        assert str(value) == text
        assert Coefficient.parse(text) == value

    def test_coerce(self):
        """Only exact numbers become coefficients"""
        assert Coefficient.coerce(Fraction(1, 3)) == Fraction(1, 3)
        with pytest.raises(TypeError):
            Coefficient.coerce(0.5)
        with pytest.raises(TypeError):
            Coefficient.coerce(True)
        assert LAMBDA != "L"

    @settings(max_examples=50, deadline=None)
    @given(coefficients(), coefficients(), rationals())
    def test_evaluation_is_a_homomorphism(self, a, b, at):
        """Evaluation commutes with + and ·"""
        assert (a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at)
        assert (a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at)

    @settings(max_examples=50, deadline=None)
    @given(coefficients())
    def test_parse_render_round_trip(self, value):
        """The canonical string parses back"""
        assert parse_coefficient(str(value)) == value


class BaseBialgebraTests:
    def test_coproduct_of_power(self):
        """Generators are primitive, so Δ(x²) has binomial coefficients"""
        base = PolynomialBialgebra(1)
        x = base.generator(1)
        expected = BaseTensor(base, 2, {(XX, I): 1, (X, X): 2, (I, XX): 1})
        assert base.coproduct(x * x) == expected
        assert base.counit(x) == ZERO
        assert base.counit(base.unit()) == ONE
        assert base.degree(x * x) == 2

    def test_generator_range(self):
        """Generators are counted from 1"""
        base = PolynomialBialgebra(2)
        with pytest.raises(ValueError):
            base.generator(3)
        with pytest.raises(ValueError):
            PolynomialBialgebra(0)

    def test_generator_mismatch(self):
        """Elements over different generator counts do not mix"""
        one, two = PolynomialBialgebra(1), PolynomialBialgebra(2)
        with pytest.raises(GeneratorMismatch):
            one.generator(1) + two.generator(1)
        with pytest.raises(GeneratorMismatch):
            one.generator(1) * two.generator(1)

    def test_basis(self):
        """Monomials up to a degree, ordered by degree"""
        base = PolynomialBialgebra(2)
        assert list(base.basis(1)) == [U, X2, X1]
        assert len(list(base.basis(2))) == 6
        assert list(base.basis(-1)) == []

    def test_counit_and_coassociativity(self):
        """(ε⊗id)Δ = (id⊗ε)Δ = id and Δ is coassociative on A"""
        base = PolynomialBialgebra(2)
        a = base.generator(1) * base.generator(2) + base.generator(2) * 3
        square = base.coproduct(a)
        assert base.counit_at(square, 0) == BaseTensor.from_elements(a)
        assert base.counit_at(square, 1) == BaseTensor.from_elements(a)
        assert base.coproduct_at(square, 0) == base.coproduct_at(square, 1)


class TensorSpaceTests:
    def test_empty_word_is_not_in_lambda(self):
        """Ш_Λ starts at words of length one"""
        with pytest.raises(SpaceMismatch):
            TensorElement({(): 1})
        scalar = TensorElement({(): 1}, Space.PLUS)
        with pytest.raises(SpaceMismatch):
            scalar.to_lambda()
        with pytest.raises(SpaceMismatch):
            scalar + w(X1)

    def test_embedding(self):
        """Ш_Λ embeds in Ш⁺ and compares equal there"""
        element = w(X1, X2) - w(U)
        assert element.to_plus() == element
        assert element.to_plus().space is Space.PLUS
        assert element.to_plus().to_lambda().space is Space.LAMBDA

    def test_zero_coefficients_are_dropped(self):
        """No stored coefficient is zero"""
        element = w(X1) - w(X1)
        assert not element
        assert len(w(X1, coefficient=0)) == 0
        assert (w(X1) * LAMBDA).coefficient((X1,)) == LAMBDA

    def test_specialize(self):
        """Evaluating the weight in every coefficient"""
        element = w(X1, coefficient=LAMBDA - 1) + w(X2, coefficient=LAMBDA)
        assert element.specialize(1) == w(X2)

    def test_from_pure(self):
        """Pure tensors of general base elements expand multilinearly"""
        base = PolynomialBialgebra(2)
        head = base.generator(1) + base.generator(2)
        element = TensorElement.from_pure([head, base.element({U: 2})])
        assert element == w(X1, U, coefficient=2) + w(X2, U, coefficient=2)
        assert TensorElement.from_pure([head, base.element()]) == TensorElement()

    def test_graft(self):
        """head ⊗ tail, a scalar tail giving a word of length one"""
        base = PolynomialBialgebra(2)
        x1 = base.generator(1)
        assert graft(x1, w(X2)) == w(X1, X2)
        assert graft(x1, w(X2)).space is Space.PLUS
        scalar = TensorElement({(): 3}, Space.PLUS)
        assert graft(x1, scalar) == w(X1, coefficient=3)
        assert graft(x1.scale(2), w(X2)) == graft(x1, w(X2)).scale(2)

    def test_repr_is_truncated(self):
        """Long elements are truncated in repr"""
        element = TensorElement({(X1,) * n: 1 for n in range(1, REPR_OUTPUT_SIZE + 5)})
        assert repr(element).endswith("...(remaining elements truncated)...>")


class ShuffleTests:
    def test_golden_example(self, golden):
        """Shuffle of a1 and b1⊗b2 has six terms"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(3))
        a, b, c = (1, 0, 0), (0, 1, 0), (0, 0, 1)
        unit, ac, ab = (0, 0, 0), (1, 0, 1), (1, 1, 0)
        expected = TensorElement(
            {
                (a, b, c): 1,
                (b, a, c): 1,
                (b, c, a): 1,
                (b, ac): LAMBDA,
                (b, ac, unit): -1,
                (ab, unit, c): -1,
            }
        )
        result = algebra.shuffle(w(a), w(b, c))
        assert result == expected
        assert len(result) == 6
        assert result.space is Space.PLUS
        assert str(result) == golden["shuffle"]

    def test_unit_shuffle_on_every_word(self, algebra):
        """1_A ⊔ 𝔞 = 𝔞 ⊔ 1_A = 1_A⊗𝔞 + λ𝔞 on all words of degree ≤ 5"""
        one = algebra.one()
        words = enumerate_words(algebra.base, 5)
        assert len(words) == 232
        for word in words:
            a = TensorElement({word: 1})
            expected = algebra.p_shift(a) + a.scale(LAMBDA)
            assert algebra.shuffle(one, a) == expected
            assert algebra.shuffle(a, one) == expected

    def test_scalar_is_the_unit(self, algebra):
        """The empty word is the unit of ⊔"""
        scalar = TensorElement({(): 1}, Space.PLUS)
        a = w(X1, X2) + w(U, coefficient=LAMBDA)
        assert algebra.shuffle(scalar, a) == a
        assert algebra.shuffle(a, scalar) == a

    def test_shift_moves_through_shuffle(self, algebra):
        """(1_A⊗𝔞)⊔𝔟 = 𝔞⊔(1_A⊗𝔟)"""
        a, b = w(X1, X2), w(X2)
        left = algebra.shuffle(algebra.p_shift(a), b)
        assert left == algebra.shuffle(a, algebra.p_shift(b))

    def test_weight_zero(self):
        """At λ = 0 the λ term vanishes"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(2), weight=0)
        expected = w(X1, X2) + w(X2, X1) - w(X1X2, U)
        assert algebra.shuffle(w(X1), w(X2)) == expected

    @settings(max_examples=25, deadline=None)
    @given(elements(), elements())
    def test_commutative(self, a, b):
        """⊔ is commutative"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(2))
        assert algebra.shuffle(a, b) == algebra.shuffle(b, a)

    @settings(max_examples=15, deadline=None)
    @given(words(max_length=2), words(max_length=2), words(max_length=2))
    def test_associative(self, u, v, t):
        """⊔ is associative"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(2))
        a, b, c = (TensorElement({word: 1}) for word in (u, v, t))
        shuffle = algebra.shuffle
        assert shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))

    def test_symmetric_cache(self):
        """Keying the cache on sorted pairs gives the same products"""
        plain = ShuffleAlgebra(PolynomialBialgebra(2))
        symmetric = ShuffleAlgebra(PolynomialBialgebra(2), symmetric_cache=True)
        a, b = w(X1, U, X2), w(X2, X1)
        assert plain.shuffle(a, b) == symmetric.shuffle(a, b)
        assert symmetric.cache_info()["shuffle"].currsize > 0


class DiamondTests:
    def test_examples(self, algebra):
        """Heads multiply, tails shuffle"""
        assert algebra.diamond(w(X1), w(X2)) == w(X1X2)
        assert algebra.diamond(w(X1, X2), w(X2)) == w(X1X2, X2)
        p_one = algebra.p_shift(algebra.one())
        assert algebra.diamond(p_one, p_one) == w(U, U, U) + w(U, U, coefficient=LAMBDA)

    def test_unit(self, algebra):
        """1_A is the unit of ⋄"""
        a = w(X1, X2) - w(X2, coefficient=LAMBDA)
        assert algebra.diamond(algebra.one(), a) == a
        assert algebra.diamond(a, algebra.one()) == a

    def test_scalar_is_refused(self, algebra):
        """⋄ is only defined on Ш_Λ"""
        with pytest.raises(SpaceMismatch):
            algebra.diamond(TensorElement({(): 1}, Space.PLUS), w(X1))

    def test_embedding_is_a_homomorphism(self, algebra):
        """j_A(ab) = j_A(a) ⋄ j_A(b)"""
        base = algebra.base
        a = base.generator(1) + base.unit() * 2
        b = base.generator(2) * base.generator(1)
        embed = algebra.embed
        assert embed(a * b) == algebra.diamond(embed(a), embed(b))

    @settings(max_examples=20, deadline=None)
    @given(elements(max_length=3), elements(max_length=3))
    def test_recursion_agrees(self, a, b):
        """The ⋄/P recursion gives the same product"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(2))
        assert algebra.diamond(a, b) == algebra.diamond_recursive(a, b)
        assert algebra.diamond(a, b) == algebra.diamond(b, a)

    def test_star(self, algebra):
        """∗_λ is associative on a sample triple"""
        a, b, c = w(X1), w(U, X2), w(X2, X1)
        star = algebra.star
        assert star(star(a, b), c) == star(a, star(b, c))


class LawTests:
    samples = [
        (w(X1), w(X2)),
        (w(X1, X2), w(U)),
        (w(U, X1) + w(X2, coefficient=LAMBDA), w(X1X2, U, X2)),
    ]

    def test_right_shift_is_lambda_td(self, algebra):
        """P satisfies the λ-TD equation on (Ш_Λ, ⋄)"""
        report = check_law(algebra, RightShift(), LambdaTD(), self.samples)
        assert report.holds
        assert report.trials == 3

    def test_right_shift_is_not_td(self, algebra):
        """The weight term is needed unless λ = 0"""
        report = check_law(algebra, RightShift(), TD(), self.samples)
        assert not report.holds
        x, y = report.counterexample.x, report.counterexample.y
        expected = algebra.p_shift(algebra.diamond(x, y)).scale(-LAMBDA)
        assert report.counterexample.difference == expected
        assert check_law(algebra, RightShift(), TD(), self.samples, at=0).holds

    def test_sign_duality(self, algebra):
        """−P is a (−λ)-TD operator"""
        negated = LambdaTD().negated(algebra)
        assert negated.weight == -LAMBDA
        assert check_law(algebra, -RightShift(), negated, self.samples).holds
        assert not check_law(algebra, -RightShift(), LambdaTD(), self.samples).holds

    def test_weight_specializations(self, algebra):
        """P(1) = 0, λ·1, 2λ·1 turn λ-TD into Rota-Baxter of weight λ, 0, −λ"""
        cases = [
            (Zero(), RotaBaxter(LAMBDA)),
            (Scale(LAMBDA), RotaBaxter(ZERO)),
            (Scale(2 * LAMBDA), RotaBaxter(-LAMBDA)),
        ]
        for op, law in cases:
            for at in (None, 0, 1, Fraction(1, 2)):
                td = check_law(algebra, op, LambdaTD(), self.samples, at=at)
                rb = check_law(algebra, op, law, self.samples, at=at)
                assert td.holds == rb.holds
        assert check_law(algebra, Zero(), LambdaTD(), self.samples).holds

    def test_scale_discrepancy(self, algebra):
        """P = c·id misses the λ-TD equation by cλ·x⋄y"""
        x, y = self.samples[0]
        three = Scale(Coefficient.constant(3))
        report = check_law(algebra, three, LambdaTD(), [(x, y)])
        expected = algebra.diamond(x, y).scale(3 * LAMBDA)
        assert report.counterexample.difference == expected

    def test_star_modified_td(self, algebra):
        """(Ш_Λ, ∗_λ, P) satisfies the λ-modified TD equation"""
        star = StarAlgebra(algebra)
        assert check_law(star, RightShift(), ModifiedTD(), self.samples[:2]).holds

    def test_square_algebra(self):
        """(Ш_Λ⊗Ш_Λ, •, id⊗P) satisfies the λ-TD equation"""
        hopf = HopfAlgebra.polynomial(1)
        square = hopf.coalgebra.square
        samples = [
            (pair((X,), (I,)), pair((I,), (X, I))),
            (pair((X,), (X,)), square.one()),
        ]
        assert check_law(square, RightShift(), LambdaTD(), samples).holds

    def test_operator_names(self, algebra):
        """Operators are looked up by name"""
        assert operator_from_name("right-shift") == RightShift()
        half = Scale(Coefficient.constant(Fraction(1, 2)))
        assert operator_from_name("scale:1/2") == half
        assert str(-RightShift()) == "-right-shift"
        assert str(Scale(LAMBDA)) == "scale(L)"
        with pytest.raises(KeyError):
            operator_from_name("left-shift")

    def test_registered_operator(self, algebra):
        """A custom operator registers itself and obeys the checker"""
        double = operator_from_name("double")
        assert double(algebra, w(X1)) == w(X1, coefficient=2)
        law = RotaBaxter(Coefficient.constant(-2))
        assert check_law(algebra, double, law, self.samples).holds

    def test_register_a_non_operator(self):
        """Only Operator subclasses can be registered"""
        with pytest.raises(RegistryError):
            Operator.register_subclass(LambdaTD)


class ExtensionTests:
    def test_identity_on_every_word(self, algebra):
        """Extending j_A to Ш_Λ gives the identity on all words of degree ≤ 4"""
        images = identity_images(algebra)
        for word in enumerate_words(algebra.base, 4):
            a = TensorElement({word: 1})
            assert free_extension(images, algebra, a) == a

    def test_zero_operator_target(self, algebra):
        """Into (A, ·, 0) everything after the first letter is killed"""
        base = algebra.base
        target = BaseTarget(base)
        images = base_images(base)
        expected = base.generator(1) * base.generator(2)
        assert free_extension(images, target, w(X1X2)) == expected
        assert not free_extension(images, target, w(X1, X2))
        a, b = w(X1) + w(U, X2), w(X2, coefficient=LAMBDA)
        product = free_extension(images, target, algebra.diamond(a, b))
        assert product == free_extension(images, target, a) * free_extension(
            images, target, b
        )

    def test_missing_image(self, algebra):
        """Every generator needs an image"""
        with pytest.raises(KeyError):
            images = {1: algebra.embed(algebra.base.generator(1))}
            free_extension(images, algebra, w(X2))


class CoalgebraTests:
    def test_coproduct_examples(self, hopf):
        """Δ on short words"""
        coalgebra = hopf.coalgebra
        assert coalgebra.coproduct(w(X)) == pair((X,), (I,)) + pair((I,), (X,))
        assert coalgebra.coproduct(w(I, X)) == pair((X,), (I, I)) + pair((I,), (I, X))
        expected = (
            pair((XX,), (I, I))
            + pair((X,), (I, X))
            + pair((X,), (X, I))
            + pair((I,), (X, X))
        )
        assert coalgebra.coproduct(w(X, X)) == expected

    def test_counit(self, hopf):
        """ε reads off the counit of the first letter of length-one words"""
        coalgebra = hopf.coalgebra
        assert coalgebra.counit(w(I)) == ONE
        assert coalgebra.counit(w(X)) == ZERO
        assert coalgebra.counit(w(I, I)) == ZERO
        assert coalgebra.counit(w(I, coefficient=LAMBDA) + w(X)) == LAMBDA

    def test_left_counital_not_right_counital(self, hopf):
        """(ε⊗id)Δ = id while (id⊗ε)Δ(P(x)) = 0"""
        coalgebra = hopf.coalgebra
        shifted = hopf.algebra.p_shift(w(X))
        assert coalgebra.left_counit_image(shifted) == shifted
        assert not coalgebra.right_counit_image(shifted)
        assert coalgebra.right_counit_image(w(X)) == w(X)

    def test_reduced_coproduct(self, hopf):
        """Δ̃ = Δ − 1⊗a on the kernel of ε"""
        coalgebra = hopf.coalgebra
        assert coalgebra.reduced_coproduct(w(X)) == pair((X,), (I,))
        with pytest.raises(NonZeroCounit):
            coalgebra.reduced_coproduct(w(I))

    def test_coproduct_is_a_homomorphism(self, algebra):
        """Δ(a⋄b) = Δ(a)•Δ(b)"""
        hopf = HopfAlgebra(algebra)
        c = hopf.coalgebra
        a, b = w(X1, U) + w(X2), w(U, X2, coefficient=LAMBDA)
        expected = c.square_mul(c.coproduct(a), c.coproduct(b))
        assert c.coproduct(algebra.diamond(a, b)) == expected
        assert c.counit(algebra.diamond(a, b)) == c.counit(a) * c.counit(b)

    def test_coassociative(self, algebra):
        """(id⊗Δ)Δ = (Δ⊗id)Δ"""
        c = HopfAlgebra(algebra).coalgebra
        for word in enumerate_words(algebra.base, 3):
            square = c.coproduct(TensorElement({word: 1}))
            assert c.coproduct_on_right(square) == c.coproduct_on_left(square)

    def test_cocycle_interchange(self, algebra):
        """(id⊗Δ)(id⊗P) = (id⊗id⊗P)(id⊗Δ)"""
        c = HopfAlgebra(algebra).coalgebra
        s = TensorSquareElement.from_product(w(X1), w(X2, U) - w(X1X2))
        expected = c.shift_last(c.coproduct_on_right(s))
        assert c.coproduct_on_right(c.square_op(s)) == expected

    def test_convolution(self, hopf):
        """e ∗ id = id and missing words are reported"""
        c = hopf.coalgebra
        unit_map = LinearMapTable.counit_unit(c)
        a = w(X, I) + w(XX)
        assert c.convolution(unit_map, LinearMapTable.identity(), a) == a
        table = LinearMapTable.from_function(lambda word: w(*word), [(I,)], name="g")
        with pytest.raises(UnassignedWord):
            c.convolution(table, table, w(X))


class HopfTests:
    def test_counit_split(self, hopf):
        """The scalar part is ε(a), the rest lies in ker ε"""
        a = w(I, coefficient=3) + w(X) + w(I, X)
        scalar, kernel = hopf.counit_split(a)
        assert scalar == 3
        assert kernel == w(X) + w(I, X)
        assert hopf.coalgebra.counit(kernel) == 0

    @pytest.mark.parametrize(
        "word, image",
        [
            ((I,), w(I)),
            ((X,), -w(X)),
            ((XX,), w(XX)),
            ((I, I), TensorElement()),
            ((I, X), TensorElement()),
            ((X, X), TensorElement()),
        ],
    )
    def test_antipode_examples(self, hopf, word, image):
        """S on short words in one variable"""
        assert hopf.antipode(TensorElement({word: 1})) == image

    def test_antipode_of_a_product(self, algebra):
        """S(x1x2) = x1x2, as in the polynomial Hopf algebra"""
        assert HopfAlgebra(algebra).antipode(w(X1X2)) == w(X1X2)

    def test_degree(self):
        """deg(P(1)) = 1 and the empty word has no degree"""
        assert word_degree(((0,), (0,))) == 1
        assert word_degree((XX, X, I)) == 5
        with pytest.raises(ValueError):
            word_degree(())

    def test_enumerate_words(self):
        """Words of degree at most one in one variable"""
        assert enumerate_words(PolynomialBialgebra(1), 1) == [(I,), (X,), (I, I)]
        assert FiltrationLevel(1).contains(w(X) + w(I, I))
        assert not FiltrationLevel(1).contains(w(X, I))
        with pytest.raises(ValueError):
            FiltrationLevel(-1)

    @pytest.mark.parametrize("level", [0, 1, 2, 3])
    def test_filtration_span(self, level):
        """The level-n span is exactly the words of degree at most n"""
        base = PolynomialBialgebra(2)
        letters = list(base.basis(level))
        expected = {
            word
            for length in range(1, level + 2)
            for word in itertools.product(letters, repeat=length)
            if word_degree(word, base) <= level
        }
        span = FiltrationLevel(level).span(base)
        assert len(span) == len(set(span))
        assert set(span) == expected

    @pytest.mark.parametrize("bound, nvars", [(5, 1), (4, 2)], ids=["one", "two"])
    def test_hopf_check(self, bound, nvars):
        """id ∗ S = e and the filtration hold on every word up to the bound"""
        report = hopf_check(bound, nvars)
        assert report.passed
        for tally in report.tallies:
            if tally.asserted:
                assert tally.failures == 0, tally.name

    def test_corrupted_antipode(self):
        """A wrong value of S is found with its witness"""
        hopf = HopfAlgebra.polynomial(1)
        corrupted = LinearMapTable(
            {(X,): w(X)}, default=hopf.antipode_table().default, name="S'"
        )
        report = hopf_check(1, 1, antipode=corrupted)
        assert not report.passed
        tally = report.tallies[0]
        assert tally.name == "antipode"
        assert tally.failures == 1
        assert tally.witness["word"] == w(X)
        assert tally.witness["(id*S)(w)"] == w(X, coefficient=2)

    def test_negative_bound(self):
        with pytest.raises(ValueError):
            hopf_check(-1, 1)


class ParserTests:
    def test_examples(self, algebra):
        """Words, weights, products and the shift"""
        value = parse_element("[x1^2*x2] + (1/2)L*[x1]", algebra)
        assert value == w((2, 1)) + w(X1, coefficient=LAMBDA * Fraction(1, 2))
        assert parse_element("P([x1]) <> [x2]", algebra) == w(X2, X1)
        expected = w(X1, X2) + w(U, X2, coefficient=2)
        assert parse_element("[x1 + 2, x2]", algebra) == expected
        assert parse_element("3", algebra) == w(U, coefficient=3)
        assert parse_element("-[x1]", algebra) == -w(X1)
        assert parse_element("[x1]/2", algebra) == w(X1, coefficient=Fraction(1, 2))

    def test_aliases(self, algebra):
        """Unicode operators are accepted"""
        left = parse_element("[x1] ⊔ [x2] + λ*[x1] ⋄ [x2]", algebra)
        assert left == parse_element("[x1] # [x2] + L*[x1] <> [x2]", algebra)

    def test_empty_word(self, algebra):
        """[] is the scalar 1 of Ш⁺"""
        value = parse_element("[] + [x1]", algebra)
        assert value.space is Space.PLUS
        assert value.coefficient(()) == ONE

    @pytest.mark.parametrize(
        "source, position, message",
        [
            ("[x1] #", 6, "unexpected <end of input>"),
            ("[x3]", 1, "unknown generator x3"),
            ("P([x1], [x2])", 6, "P takes exactly one argument"),
            ("λ*[x1] $", 8, "unexpected character"),
            ("[x1] <> []", 5, "not in Ш_Λ"),
            ("x1", 0, "inside a word"),
            ("[x1] * [x2]", 5, "use '<>' or '#'"),
        ],
    )
    def test_diagnostics(self, algebra, source, position, message):
        """Errors carry a byte offset"""
        with pytest.raises(ParseError) as error:
            parse_element(source, algebra)
        assert error.value.position == position
        assert message in error.value.message
        assert "^" in error.value.display()

    def test_expected_tokens(self, algebra):
        """A missing operand lists what could start one"""
        with pytest.raises(ParseError) as error:
            parse_element("[x1] +", algebra)
        assert "'['" in error.value.expected
        assert "<number>" in error.value.expected

    def test_words_need_an_algebra(self):
        """Coefficients parse on their own, words do not"""
        assert parse_coefficient("2L - 1") == 2 * LAMBDA - 1
        with pytest.raises(ParseError):
            parse_coefficient("[x1]")

    def test_parse_json(self, algebra):
        """JSON terms back to an element"""
        data = '[{"coeff": "L", "word": [[1, 0], [0, 1]]}]'
        assert parse_json(data, algebra) == w(X1, X2, coefficient=LAMBDA)
        with pytest.raises(ParseError):
            parse_json("[", algebra)


class RenderTests:
    def test_text(self, algebra):
        """Terms in canonical order"""
        assert str(TensorElement()) == "0"
        value = algebra.shuffle(w(X1), w(X2))
        assert str(value) == "L*[x1*x2] + [x2, x1] + [x1, x2] - [x1*x2, 1]"
        assert str(w(X1, coefficient=LAMBDA - 1)) == "(L - 1)*[x1]"
        assert str(pair((X1,), (U,))) == "[x1] ⊗ [1]"

    def test_json(self):
        """Elements and squares as lists of terms"""
        data = json.loads(render(w(X1, U, coefficient=-LAMBDA), JSON))
        assert data == [{"coeff": "-L", "word": [[1, 0], [0, 0]]}]
        data = json.loads(render_json(pair((X1,), (U,))))
        assert data == [{"coeff": "1", "left": [[1, 0]], "right": [[0, 0]]}]
        assert render(ONE, TEXT) == "1"

    @settings(max_examples=50, deadline=None)
    @given(elements())
    def test_text_round_trip(self, element):
        """Rendered text parses back to the same element"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(2))
        assert parse_element(str(element), algebra) == element

    @settings(max_examples=50, deadline=None)
    @given(elements())
    def test_json_round_trip(self, element):
        """Rendered JSON parses back to the same element"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(2))
        assert parse_json(render_json(element), algebra) == element


class HarnessTests:
    def test_vacuous(self):
        """No trial is a pass"""
        report = run_laws("shuffle-assoc", seed=1, trials=0)
        assert report.passed
        assert report.tallies[0].trials == 0

    def test_right_counit_failure_is_witnessed(self):
        """The witness is recorded for each generator"""
        report = run_laws("right-counit-fails", nvars=2)
        assert report.passed
        assert len(report.tallies[0].observations) == 2
        assert "(id⊗ε)Δ(P(x)) = 0" in render_report(report)

    @pytest.mark.parametrize("suite", suite_names())
    def test_every_suite_passes(self, suite):
        """Each registered suite holds on a few small samples"""
        report = run_laws(suite, seed=3, trials=4, max_degree=3, max_length=3)
        assert report.passed, render_report(report)

    def test_square_samples(self):
        """Square samples are sums of pure tensors within the degree bound"""
        algebra = ShuffleAlgebra(PolynomialBialgebra(2))
        samples = SampleGenerator(algebra, random.Random("squares"), 5, 4)
        squares = [samples.square() for _ in range(50)]
        degrees = [
            word_degree(u) + word_degree(v)
            for square in squares
            for (u, v), _ in square
        ]
        assert all(degree <= 5 for degree in degrees)
        assert max(degrees) > 2
        assert any(len(square) > 1 for square in squares)

    def test_deterministic(self):
        """The same seed gives the same report"""
        first = render_report(run_laws("diamond-comm", seed=42, trials=10), JSON)
        second = render_report(run_laws("diamond-comm", seed=42, trials=10), JSON)
        assert first == second
        assert json.loads(first)["seed"] == 42

    def test_reported_only(self):
        """A reported-only suite never fails a run"""
        assert not LawSuite.get("star-lambda-td").asserted
        assert run_laws("star-lambda-td", trials=3).passed

    def test_registered_suite(self):
        """Custom suites are picked up by name"""
        report = run_laws("always-holds", trials=5)
        assert report.tallies[0].trials == 5

    def test_bad_arguments(self):
        with pytest.raises(KeyError):
            run_laws("no-such-suite")
        with pytest.raises(ValueError):
            run_laws("shuffle-comm", trials=-1)


class PackageTests:
    def test_typed_marker(self):
        """The package ships its PEP 561 marker"""
        package = Path(importlib.import_module("tdalgebra").__file__).parent
        assert (package / "py.typed").is_file()


class CommandLineTests:
    def test_shuffle(self, capsys):
        """Products are printed in canonical order"""
        assert main(["shuffle", "[x1]", "[x2]"]) == 0
        out = capsys.readouterr().out
        assert out.strip() == "L*[x1*x2] + [x2, x1] + [x1, x2] - [x1*x2, 1]"

    def test_specialized_weight(self, capsys):
        """--lambda sets a rational weight"""
        assert main(["--lambda", "0", "shuffle", "[x1]", "[x2]"]) == 0
        assert capsys.readouterr().out.strip() == "[x2, x1] + [x1, x2] - [x1*x2, 1]"

    def test_negative_weight(self, capsys):
        """A negative weight is passed in the --lambda=<value> form"""
        half = Fraction(-1, 2)
        algebra = ShuffleAlgebra(PolynomialBialgebra(2), half)
        expected = algebra.shuffle(w(X1).to_plus(), w(X2).to_plus())
        assert main(["--lambda=-1/2", "shuffle", "[x1]", "[x2]"]) == 0
        assert capsys.readouterr().out.strip() == render(expected, TEXT)
        with pytest.raises(SystemExit):
            main(["--lambda", "-1/2", "shuffle", "[x1]", "[x2]"])

    def test_coalgebra_commands(self, capsys):
        """coprod, counit and antipode"""
        assert main(["--vars", "1", "coprod", "[x1]"]) == 0
        assert capsys.readouterr().out.strip() == "[1] ⊗ [x1] + [x1] ⊗ [1]"
        assert main(["counit", "[1]"]) == 0
        assert capsys.readouterr().out.strip() == "1"
        assert main(["antipode", "[x1]"]) == 0
        assert capsys.readouterr().out.strip() == "-[x1]"

    def test_operators(self, capsys):
        """op and star with a named operator"""
        assert main(["op", "[x1]"]) == 0
        assert capsys.readouterr().out.strip() == "[1, x1]"
        assert main(["op", "--operator", "scale:L", "[x1]"]) == 0
        assert capsys.readouterr().out.strip() == "L*[x1]"
        assert main(["star", "--operator", "zero", "[x1]", "[x2]"]) == 0
        assert capsys.readouterr().out.strip() == "L*[x1*x2]"

    def test_json_output(self, capsys):
        assert main(["--output", "json", "eval", "[x1] <> [x2]"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == [{"coeff": "1", "word": [[1, 1]]}]

    def test_environment_default(self, capsys, monkeypatch):
        """TDALGEBRA_VARS sets the generator count, flags override it"""
        monkeypatch.setenv("TDALGEBRA_VARS", "3")
        assert main(["eval", "[x3]"]) == 0
        capsys.readouterr()
        assert main(["--vars", "2", "eval", "[x3]"]) == 2
        assert "unknown generator" in capsys.readouterr().err

    def test_parse_error(self, capsys):
        """Exit status 2 with a positioned diagnostic"""
        assert main(["shuffle", "[x1", "[x2]"]) == 2
        err = capsys.readouterr().err
        assert "offset 3" in err
        assert "expected one of" in err

    def test_space_error(self, capsys):
        assert main(["coprod", "[]"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_hopf_check(self, capsys):
        assert main(["hopf-check", "--bound", "2"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "check=hopf degree_bound=2 vars=2 words=12"
        assert out.strip().endswith("OK")

    def test_laws(self, capsys):
        """Suites, listing and the vacuous pass"""
        assert main(["laws", "--suite", "shuffle-assoc", "--trials", "0"]) == 0
        assert "PASS shuffle-assoc: 0/0" in capsys.readouterr().out
        assert main(["laws", "--list"]) == 0
        listing = capsys.readouterr().out.splitlines()
        assert "star-lambda-td (reported only)" in listing
        assert "right-counit-fails" in listing
        assert main(["laws", "--suite", "nothing"]) == 2

    def test_laws_deterministic(self, capsys):
        """Two runs of the whole harness print the same bytes"""
        argv = ["laws", "--seed", "42", "--trials", "2", "--max-degree", "2"]
        argv += ["--max-length", "2"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first

    @pytest.mark.slow
    def test_laws_default_size_deterministic(self, capsys):
        """The whole harness at default trials, degree and length is reproducible"""
        argv = ["laws", "--suite", "all", "--seed", "42"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
        assert "FAIL" not in first

    def test_usage_error(self):
        """argparse rejects a bad weight"""
        with pytest.raises(SystemExit) as error:
            main(["--lambda", "abc", "counit", "[1]"])
        assert error.value.code == 2
