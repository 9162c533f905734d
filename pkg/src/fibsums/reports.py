"""Plain records returned by the verifiers, and their JSON-friendly form."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple


def jsonable(value: Any) -> Any:
    """Numbers become decimal strings so no consumer truncates them."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, str):
        return value
    return str(value)


@dataclass
class CheckResult:
    """Outcome of a single identity check."""

    name: str
    params: Dict[str, Any]
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        d = {"id": self.name, "params": jsonable(self.params), "pass": self.passed,
             "n0": None}
        if not self.passed:
            d["counterexample"] = self.detail
        return d


@dataclass
class RecurrenceReport:
    """Result of applying a characteristic polynomial to a sequence.

    ``n0`` is the smallest index from which the residual vanishes through
    ``n_to``; it is ``None`` when the residual at ``n_to`` is nonzero.
    """

    poly: str
    sequence: str
    n_from: int
    n_to: int
    passed: bool
    n0: Optional[int]
    counterexample: Optional[Tuple[int, Any]] = None
    params: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "id": self.sequence,
            "params": jsonable(dict(self.params, poly=self.poly,
                                    n_range=[self.n_from, self.n_to])),
            "pass": self.passed,
            "n0": None if self.n0 is None else str(self.n0),
        }
        if self.counterexample is not None:
            n, r = self.counterexample
            d["counterexample"] = {"n": str(n), "residual": str(r)}
        return d
