"""
Command-line front end::

    tdalgebra shuffle '[x1]' '[x2, x3]'
    tdalgebra --output json coprod 'P([x1])'
    tdalgebra laws --suite all --seed 42

Exit status is 0 on success, 1 when a law or Hopf check fails and 2 for
usage and parse errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from fractions import Fraction
from typing import Callable, Optional, Sequence

from tdalgebra.coefficients import LAMBDA, Coefficient
from tdalgebra.exceptions import (
    GeneratorMismatch,
    InvariantViolation,
    NonZeroCounit,
    ParseError,
    SpaceMismatch,
    UnassignedWord,
)
from tdalgebra.harness import LawSuite, run_laws, suite_names
from tdalgebra.hopf import HopfAlgebra, hopf_check
from tdalgebra.laws import Operator, operator_from_name
from tdalgebra.parser import evaluate, parse_element
from tdalgebra.render import FORMATS, TEXT, render, render_report
from tdalgebra.tensors import TensorElement
from tdalgebra.utils import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_LENGTH,
    DEFAULT_TRIALS,
    DEFAULT_VARS,
    VARS_ENV,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

# Usage errors, reported with exit status 2
USAGE_ERRORS = (
    GeneratorMismatch,
    SpaceMismatch,
    NonZeroCounit,
    UnassignedWord,
    KeyError,
    TypeError,
    ValueError,
)


def weight_argument(text: str) -> Coefficient:
    """``symbolic`` for the formal weight, otherwise an exact rational"""
    if text == "symbolic":
        return LAMBDA
    try:
        return Coefficient.constant(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected 'symbolic' or a rational, got {text!r}"
        )


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class Session:
    """Algebraic structures and output settings of one invocation"""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.nvars: int = args.vars
        self.weight: Coefficient = args.weight
        self.output: str = args.output
        self.hopf = HopfAlgebra.polynomial(self.nvars, self.weight)
        self.algebra = self.hopf.algebra
        self.coalgebra = self.hopf.coalgebra

    def element(self, source: str) -> TensorElement:
        return parse_element(source, self.algebra)

    def lambda_element(self, source: str) -> TensorElement:
        return self.element(source).to_lambda()

    def emit(self, value) -> int:
        print(render(value, self.output))
        return 0


# --------------------------------- Commands --------------------------------- #


def command_shuffle(session: Session) -> int:
    args = session.args
    left, right = session.element(args.left), session.element(args.right)
    return session.emit(session.algebra.shuffle(left, right))


def command_diamond(session: Session) -> int:
    args = session.args
    left, right = session.lambda_element(args.left), session.lambda_element(args.right)
    return session.emit(session.algebra.diamond(left, right))


def command_star(session: Session) -> int:
    args = session.args
    left, right = session.lambda_element(args.left), session.lambda_element(args.right)
    op = operator_from_name(args.operator)
    return session.emit(session.algebra.star(left, right, op))


def command_op(session: Session) -> int:
    op = operator_from_name(session.args.operator)
    return session.emit(op(session.algebra, session.lambda_element(session.args.expr)))


def command_coprod(session: Session) -> int:
    element = session.lambda_element(session.args.expr)
    return session.emit(session.coalgebra.coproduct(element))


def command_counit(session: Session) -> int:
    element = session.lambda_element(session.args.expr)
    return session.emit(session.coalgebra.counit(element))


def command_antipode(session: Session) -> int:
    element = session.lambda_element(session.args.expr)
    return session.emit(session.hopf.antipode(element))


def command_eval(session: Session) -> int:
    return session.emit(evaluate(session.args.expr, session.algebra))


def command_hopf_check(session: Session) -> int:
    report = hopf_check(session.args.bound, session.nvars, session.weight)
    print(render_report(report, session.output))
    return 0 if report.passed else 1


def command_laws(session: Session) -> int:
    args = session.args
    if args.list:
        for name in suite_names():
            suffix = "" if LawSuite.get(name).asserted else " (reported only)"
            print(f"{name}{suffix}")
        return 0
    report = run_laws(
        suite=args.suite,
        seed=args.seed,
        trials=args.trials,
        max_degree=args.max_degree,
        max_length=args.max_length,
        nvars=session.nvars,
        weight=session.weight,
    )
    print(render_report(report, session.output))
    return 0 if report.passed else 1


# ---------------------------------- Parser ---------------------------------- #


def _operator_help() -> str:
    names = ", ".join(sorted(Operator.get_registered()))
    return f"one of {names}, or scale:<coefficient> (default: right-shift)"


def build_parser() -> argparse.ArgumentParser:
    from tdalgebra import __version__

    parser = argparse.ArgumentParser(
        prog="tdalgebra",
        description="Free commutative λ-TD algebras and their Hopf structure",
    )
    parser.add_argument(
        "--version", action="version", version=f"tdalgebra {__version__}"
    )
    parser.add_argument(
        "--vars",
        type=positive_int,
        default=os.environ.get(VARS_ENV, str(DEFAULT_VARS)),
        help=f"number of base generators (default: ${VARS_ENV} or {DEFAULT_VARS})",
    )
    parser.add_argument(
        "--lambda",
        dest="weight",
        type=weight_argument,
        default="symbolic",
        help=(
            "'symbolic' (default) or a rational value of the weight; write "
            "negative values as --lambda=-1/2"
        ),
    )
    parser.add_argument("--output", choices=FORMATS, default=TEXT)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug"
    )

    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name: str, handler: Callable[[Session], int], text: str):
        sub = commands.add_parser(name, help=text)
        sub.set_defaults(handler=handler)
        return sub

    for name, handler, text in (
        ("shuffle", command_shuffle, "λ-TD shuffle product on Ш⁺"),
        ("diamond", command_diamond, "product ⋄ on Ш_Λ"),
        ("star", command_star, "double product ∗_λ"),
    ):
        sub = add(name, handler, text)
        sub.add_argument("left", metavar="E1")
        sub.add_argument("right", metavar="E2")
        if name == "star":
            sub.add_argument("--operator", default="right-shift", help=_operator_help())

    sub = add("op", command_op, "apply an operator")
    sub.add_argument("expr", metavar="E")
    sub.add_argument("--operator", default="right-shift", help=_operator_help())

    for name, handler, text in (
        ("coprod", command_coprod, "cocycle coproduct Δ"),
        ("counit", command_counit, "counit ε"),
        ("antipode", command_antipode, "right antipode S"),
        ("eval", command_eval, "evaluate an expression"),
    ):
        add(name, handler, text).add_argument("expr", metavar="E")

    sub = add("hopf-check", command_hopf_check, "exhaustive Hopf checks up to a degree")
    sub.add_argument("--bound", type=int, default=4, help="degree bound (default: 4)")

    sub = add("laws", command_laws, "seeded randomized law checks")
    sub.add_argument("--suite", default="all", help="suite name or 'all'")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sub.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    sub.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    sub.add_argument("--list", action="store_true", help="list the registered suites")
    return parser


def configure_logging(verbosity: int) -> None:
    level = LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def _error_message(error: Exception) -> str:
    if isinstance(error, KeyError) and error.args:
        return str(error.args[0])
    return str(error)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        session = Session(args)
        return args.handler(session)
    except ParseError as error:
        print(error.display(), file=sys.stderr)
    except InvariantViolation as error:
        print(f"violation: {error}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as error:
        logger.debug("usage error", exc_info=True)
        print(f"error: {_error_message(error)}", file=sys.stderr)
    return 2

