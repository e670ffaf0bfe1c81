"""Check reports with exact, deterministic JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List


def exact_str(v) -> str:
    """Render an integer or rational exactly: ``"12"`` or ``"-81/2"``."""
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def _render(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return exact_str(v)
    if isinstance(v, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(v, dict):
        return {str(k): _render(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    if isinstance(v, Report):
        return v.to_dict()
    return str(v)


@dataclass
class Report:
    name: str
    passed: bool
    inputs: Dict[str, Any] = field(default_factory=dict)
    values: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        out = {"check": self.name, "status": self.status, "inputs": _render(self.inputs), "values": _render(self.values)}
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
