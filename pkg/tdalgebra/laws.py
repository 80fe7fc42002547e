"""Operators on an operated algebra and the identities they may satisfy"""

from __future__ import annotations

import dataclasses
import logging

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, ClassVar, Iterable, Optional, Tuple

from tdalgebra.coefficients import ONE, ZERO, Coefficient, Number
from tdalgebra.utils import RegisterMixin

if TYPE_CHECKING:  # pragma: no cover
    from tdalgebra.products import OperatedAlgebra

logger = logging.getLogger(__name__)


# --------------------------------- Operators -------------------------------- #


@dataclass(frozen=True)
class Operator(ABC, RegisterMixin):
    """
    A linear operator on an operated algebra, times a scalar ``factor``.
    Negating an operator negates its factor.
    """

    factor: Coefficient = ONE

    registry_attribute: ClassVar[str] = "operator_name"
    operator_name: ClassVar[str] = ""

    def __call__(self, algebra: OperatedAlgebra, element: Any) -> Any:
        image = self.apply(algebra, element)
        return image if self.factor == ONE else image.scale(self.factor)

    @abstractmethod
    def apply(self, algebra: OperatedAlgebra, element: Any) -> Any:
        """Image of ``element`` before scaling by the factor"""

    def __neg__(self) -> Operator:
        return dataclasses.replace(self, factor=-self.factor)

    def __str__(self) -> str:
        if self.factor == ONE:
            return self.operator_name
        if self.factor == -ONE:
            return f"-{self.operator_name}"
        return f"({self.factor}){self.operator_name}"


@Operator.register_subclass
@dataclass(frozen=True)
class RightShift(Operator):
    """The distinguished operator of the algebra, 𝔞 ↦ 1_A ⊗ 𝔞 on Ш_Λ(A)"""

    operator_name: ClassVar[str] = "right-shift"

    def apply(self, algebra: OperatedAlgebra, element: Any) -> Any:
        return algebra.shift(element)


@Operator.register_subclass
@dataclass(frozen=True)
class Zero(Operator):
    operator_name: ClassVar[str] = "zero"

    def apply(self, algebra: OperatedAlgebra, element: Any) -> Any:
        return element.scale(ZERO)


@Operator.register_subclass
@dataclass(frozen=True)
class Scale(Operator):
    """Multiplication by the factor, so P(1) = factor·1"""

    operator_name: ClassVar[str] = "scale"

    def apply(self, algebra: OperatedAlgebra, element: Any) -> Any:
        return element

    def __str__(self) -> str:
        return f"scale({self.factor})"


def operator_from_name(name: str) -> Operator:
    """``right-shift``, ``zero``, ``scale`` or ``scale:<coefficient>``"""
    if name.startswith("scale:"):
        return Scale(Coefficient.parse(name[len("scale:") :]))
    return Operator.get(name)()


# ----------------------------------- Laws ----------------------------------- #


@dataclass(frozen=True)
class Law(ABC, RegisterMixin):
    """
    An identity P(x)P(y) = rhs(x, y). ``weight`` defaults to the weight of
    the algebra the law is checked in.
    """

    weight: Optional[Coefficient] = None

    registry_attribute: ClassVar[str] = "law_name"
    law_name: ClassVar[str] = ""

    def resolved_weight(self, algebra: OperatedAlgebra) -> Coefficient:
        return algebra.weight if self.weight is None else self.weight

    def negated(self, algebra: OperatedAlgebra) -> Law:
        """Same law with weight w replaced by −w"""
        return dataclasses.replace(self, weight=-self.resolved_weight(algebra))

    def lhs(self, algebra: OperatedAlgebra, op: Operator, x: Any, y: Any) -> Any:
        return algebra.mul(op(algebra, x), op(algebra, y))

    @abstractmethod
    def rhs(self, algebra: OperatedAlgebra, op: Operator, x: Any, y: Any) -> Any:
        """Right-hand side of the identity"""

    @staticmethod
    def _pieces(algebra: OperatedAlgebra, op: Operator, x: Any, y: Any):
        """x·P(y), P(x)·y, x·y and x·P(1)·y"""
        m = algebra.mul
        return (
            m(x, op(algebra, y)),
            m(op(algebra, x), y),
            m(x, y),
            m(m(x, op(algebra, algebra.one())), y),
        )

    def __str__(self) -> str:
        if self.weight is None:
            return self.law_name
        return f"{self.law_name}({self.weight})"


@Law.register_subclass
@dataclass(frozen=True)
class RotaBaxter(Law):
    """P(x)P(y) = P(xP(y) + P(x)y + w·xy)"""

    law_name: ClassVar[str] = "rota-baxter"

    def rhs(self, algebra, op, x, y):
        x_py, px_y, xy, _ = self._pieces(algebra, op, x, y)
        return op(algebra, x_py + px_y + xy.scale(self.resolved_weight(algebra)))


@Law.register_subclass
@dataclass(frozen=True)
class TD(Law):
    """P(x)P(y) = P(xP(y) + P(x)y − xP(1)y)"""

    weight: Optional[Coefficient] = ZERO
    law_name: ClassVar[str] = "td"

    def negated(self, algebra: OperatedAlgebra) -> Law:
        return self

    def rhs(self, algebra, op, x, y):
        x_py, px_y, _, x_p1_y = self._pieces(algebra, op, x, y)
        return op(algebra, x_py + px_y - x_p1_y)

    def __str__(self) -> str:
        return self.law_name


@Law.register_subclass
@dataclass(frozen=True)
class LambdaTD(Law):
    """P(x)P(y) = P(xP(y) + P(x)y + w·xy − xP(1)y)"""

    law_name: ClassVar[str] = "lambda-td"

    def rhs(self, algebra, op, x, y):
        x_py, px_y, xy, x_p1_y = self._pieces(algebra, op, x, y)
        weight = self.resolved_weight(algebra)
        return op(algebra, x_py + px_y + xy.scale(weight) - x_p1_y)


@Law.register_subclass
@dataclass(frozen=True)
class ModifiedTD(Law):
    """P(x)P(y) = P(xP(y) + P(x)y + w·xy) − xP(1)y"""

    law_name: ClassVar[str] = "modified-td"

    def rhs(self, algebra, op, x, y):
        x_py, px_y, xy, x_p1_y = self._pieces(algebra, op, x, y)
        weight = self.resolved_weight(algebra)
        return op(algebra, x_py + px_y + xy.scale(weight)) - x_p1_y


# ---------------------------------- Checking -------------------------------- #


@dataclass(frozen=True)
class Counterexample:
    """
    A violating sample with both sides of the identity. ``difference`` is
    rhs − lhs, the amount the left side falls short by
    """

    x: Any
    y: Any
    lhs: Any
    rhs: Any

    @property
    def difference(self) -> Any:
        return self.rhs - self.lhs


@dataclass
class LawReport:
    law: str
    operator: str
    trials: int = 0
    counterexample: Optional[Counterexample] = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def check_law(
    algebra: OperatedAlgebra,
    op: Operator,
    law: Law,
    samples: Iterable[Tuple[Any, Any]],
    at: Optional[Number] = None,
) -> LawReport:
    """
    Evaluate both sides of ``law`` for every sample pair and stop at the
    first violation. With ``at`` the difference is judged after evaluating
    λ at that rational, i.e. in the specialized algebra.
    """
    report = LawReport(law=str(law), operator=str(op))
    for x, y in samples:
        report.trials += 1
        lhs = law.lhs(algebra, op, x, y)
        rhs = law.rhs(algebra, op, x, y)
        difference = lhs - rhs
        if at is not None:
            difference = difference.specialize(at)
        if difference:
            logger.debug("%s fails for %s on (%r, %r)", law, op, x, y)
            report.counterexample = Counterexample(x, y, lhs, rhs)
            break
    return report
