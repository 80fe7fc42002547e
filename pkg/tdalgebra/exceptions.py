"""Global tdalgebra exception classes"""

from __future__ import annotations

from typing import Iterable


class SpaceMismatch(Exception):
    """
    Raised when elements of Ш⁺ and Ш_Λ are mixed without an explicit
    embedding, or when an empty word reaches an operation defined on Ш_Λ only
    """


class GeneratorMismatch(Exception):
    """Raised when base elements are built over different generator counts"""


class NonZeroCounit(Exception):
    """Raised when the reduced coproduct is asked for an element outside ker ε"""


class UnassignedWord(Exception):
    """Raised when a linear map table has no value and no default for a word"""


class InvariantViolation(Exception):
    """Raised when an internal invariant does not hold (should be unreachable)"""


class RegistryError(Exception):
    """
    Exception raised when we try to register an operator, a law or a
    law suite that is not a subclass of the registry base class
    """


class ParseError(Exception):
    """Raised by the expression parser, carries the byte offset of the error"""

    def __init__(
        self,
        source: str,
        position: int,
        message: str,
        expected: Iterable[str] = (),
    ) -> None:
        self.source = source
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        self.message = message
        super().__init__(f"{message} at offset {position}")

    def display(self) -> str:
        """Render the diagnostic with a caret under the offending byte"""
        # The offset is counted in UTF-8 bytes, the caret in characters
        encoded = self.source.encode("utf-8")
        column = len(encoded[: self.position].decode("utf-8", errors="ignore"))
        lines = [f"error: {self.message} (offset {self.position})"]
        lines.append(f"  {self.source}")
        lines.append(f"  {' ' * column}^")
        if self.expected:
            lines.append(f"  expected one of: {', '.join(self.expected)}")
        return "\n".join(lines)
