from __future__ import annotations

from tdalgebra.base import BaseElement, Bialgebra, PolynomialBialgebra
from tdalgebra.coalgebra import CocycleCoalgebra, LinearMapTable, SquareAlgebra
from tdalgebra.coefficients import LAMBDA, ONE, ZERO, Coefficient
from tdalgebra.hopf import HopfAlgebra, hopf_check
from tdalgebra.laws import Law, Operator, check_law
from tdalgebra.parser import parse_element
from tdalgebra.products import ShuffleAlgebra, StarAlgebra, free_extension
from tdalgebra.tensors import Space, TensorElement, TensorSquareElement

__all__ = [
    "BaseElement",
    "Bialgebra",
    "CocycleCoalgebra",
    "Coefficient",
    "HopfAlgebra",
    "LAMBDA",
    "Law",
    "LinearMapTable",
    "ONE",
    "Operator",
    "PolynomialBialgebra",
    "ShuffleAlgebra",
    "Space",
    "SquareAlgebra",
    "StarAlgebra",
    "TensorElement",
    "TensorSquareElement",
    "ZERO",
    "__version__",
    "check_law",
    "free_extension",
    "hopf_check",
    "parse_element",
    "version_tuple",
]

try:
    from ._version import version as __version__
    from ._version import version_tuple
except ImportError:  # pragma: no cover
    # broken installation, we don't even try
    __version__ = "unknown"
    version_tuple = (0, 0, "unknown")  # type:ignore[assignment]
