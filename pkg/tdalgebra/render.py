"""Canonical text and JSON output. Text output of a TensorElement parses back"""

from __future__ import annotations

import json

from typing import Any, Callable, Dict, List

from tdalgebra.base import BaseElement, BaseTensor
from tdalgebra.coefficients import Coefficient
from tdalgebra.combinations import LinearCombination
from tdalgebra.tensors import TensorCubeElement, TensorElement, TensorSquareElement
from tdalgebra.utils import GENERATOR_PREFIX, Monomial, Word

TEXT = "text"
JSON = "json"
FORMATS = (TEXT, JSON)


def render_monomial(monomial: Monomial) -> str:
    factors = []
    for index, exponent in enumerate(monomial, start=1):
        if exponent == 1:
            factors.append(f"{GENERATOR_PREFIX}{index}")
        elif exponent > 1:
            factors.append(f"{GENERATOR_PREFIX}{index}^{exponent}")
    return "*".join(factors) or "1"


def render_word(word: Word) -> str:
    return "[" + ", ".join(render_monomial(letter) for letter in word) + "]"


def _render_term(coefficient: Coefficient, body: str, first: bool) -> str:
    negative = False
    if coefficient == 1 or coefficient == -1:
        negative, text = coefficient == -1, body or "1"
    elif coefficient.is_monomial():
        ((_, value),) = coefficient
        negative = value < 0
        magnitude = -coefficient if negative else coefficient
        text = f"{magnitude}*{body}" if body else str(magnitude)
    else:
        text = f"({coefficient})*{body}" if body else f"({coefficient})"
    if first:
        return f"-{text}" if negative else text
    return f" - {text}" if negative else f" + {text}"


def _render_sum(element: LinearCombination, render_key: Callable[[Any], str]) -> str:
    parts = [
        _render_term(value, render_key(key), index == 0)
        for index, (key, value) in enumerate(element.items())
    ]
    return "".join(parts) or "0"


def _render_base_key(monomial: Monomial) -> str:
    # The unit monomial is left implicit after a coefficient
    return "" if not any(monomial) else render_monomial(monomial)


def render_text(obj: Any) -> str:
    if isinstance(obj, Coefficient):
        return str(obj)
    if isinstance(obj, TensorElement):
        return _render_sum(obj, render_word)
    if isinstance(obj, (TensorSquareElement, TensorCubeElement)):
        return _render_sum(obj, lambda key: " ⊗ ".join(render_word(w) for w in key))
    if isinstance(obj, BaseElement):
        return _render_sum(obj, _render_base_key)
    if isinstance(obj, BaseTensor):
        return _render_sum(obj, lambda key: " ⊗ ".join(render_monomial(m) for m in key))
    if isinstance(obj, tuple):
        return render_word(obj)
    return str(obj)


def to_json(obj: Any) -> Any:
    """JSON-serializable form of coefficients, elements and words"""
    if isinstance(obj, Coefficient):
        return str(obj)
    if isinstance(obj, TensorElement):
        return [{"coeff": str(v), "word": _word_json(w)} for w, v in obj.items()]
    if isinstance(obj, TensorSquareElement):
        return [
            {"coeff": str(v), "left": _word_json(u), "right": _word_json(w)}
            for (u, w), v in obj.items()
        ]
    if isinstance(obj, TensorCubeElement):
        return [
            {"coeff": str(v), "words": [_word_json(w) for w in key]}
            for key, v in obj.items()
        ]
    if isinstance(obj, BaseElement):
        return [{"coeff": str(v), "monomial": list(m)} for m, v in obj.items()]
    if isinstance(obj, BaseTensor):
        return [
            {"coeff": str(v), "factors": [list(m) for m in key]}
            for key, v in obj.items()
        ]
    if isinstance(obj, tuple):
        return _word_json(obj)
    if isinstance(obj, dict):
        return {key: to_json(value) for key, value in obj.items()}
    if isinstance(obj, list):
        return [to_json(value) for value in obj]
    return obj


def _word_json(word: Word) -> List[List[int]]:
    return [list(letter) for letter in word]


def render_json(obj: Any) -> str:
    return json.dumps(to_json(obj), indent=2, ensure_ascii=False)


def render(obj: Any, fmt: str = TEXT) -> str:
    if fmt == JSON:
        return render_json(obj)
    return render_text(obj)


# ---------------------------------- Reports --------------------------------- #


def _tally_json(tally) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "name": tally.name,
        "asserted": tally.asserted,
        "trials": tally.trials,
        "failures": tally.failures,
        "passed": tally.passed,
    }
    if tally.witness is not None:
        data["witness"] = to_json(tally.witness)
    if tally.observations:
        data["observations"] = to_json(tally.observations)
    return data


def _tally_text(tally) -> List[str]:
    if not tally.asserted:
        status = "INFO"
    else:
        status = "PASS" if tally.passed else "FAIL"
    lines = [f"{status} {tally.name}: {tally.trials - tally.failures}/{tally.trials}"]
    if tally.witness is not None:
        label = "first counterexample" if tally.asserted else "first mismatch"
        lines.append(f"  {label}:")
        for key, value in tally.witness.items():
            lines.append(f"    {key} = {render_text(value)}")
    for observation in tally.observations:
        pairs = (f"{k} = {render_text(v)}" for k, v in observation.items())
        lines.append("  " + "; ".join(pairs))
    return lines


def render_report(report, fmt: str = TEXT) -> str:
    """Render a law-suite or hopf-check report with its header fields"""
    header = report.header()
    if fmt == JSON:
        data = dict(header)
        data["passed"] = report.passed
        data["checks"] = [_tally_json(tally) for tally in report.tallies]
        return json.dumps(data, indent=2, ensure_ascii=False)
    lines = [" ".join(f"{key}={value}" for key, value in header.items())]
    for tally in report.tallies:
        lines.extend(_tally_text(tally))
    lines.append("OK" if report.passed else "VIOLATION")
    return "\n".join(lines)
