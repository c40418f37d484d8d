"""Record type shared by the bound checks and the spectrum checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .graph import format_rational

Number = Union[int, Fraction]

__all__ = ["BoundReport", "value_to_json"]


def value_to_json(x: Any) -> Any:
    """JSON-safe rendering; rationals become ``"p/q"`` strings."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, int):
        return x
    if isinstance(x, (tuple, list)):
        return [value_to_json(v) for v in x]
    if isinstance(x, dict):
        return {str(k): value_to_json(v) for k, v in x.items()}
    return str(x)


@dataclass(frozen=True)
class BoundReport:
    """One evaluated instance of a bound or structural statement.

    ``relation`` is one of ``"<="``, ``"=="``, ``"iff"`` or ``"in"`` (``rhs``
    is then a closed ``(lo, hi)`` range). ``holds`` is ``None`` whenever the
    statement's hypothesis is not met.
    """

    theorem: str
    hypothesis_met: bool
    lhs: Any
    relation: str
    rhs: Any
    holds: bool | None
    context: dict = field(default_factory=dict, compare=False)

    @property
    def violated(self) -> bool:
        return self.hypothesis_met and self.holds is False

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypothesis_met": self.hypothesis_met,
            "lhs": value_to_json(self.lhs),
            "relation": self.relation,
            "rhs": value_to_json(self.rhs),
            "holds": self.holds,
            "context": value_to_json(self.context),
        }


def evaluate(theorem: str, hypothesis: bool, lhs, relation: str, rhs, **context) -> BoundReport:
    if not hypothesis:
        return BoundReport(theorem, False, lhs, relation, rhs, None, context)
    if relation == "<=":
        ok = lhs <= rhs
    elif relation == "==":
        ok = lhs == rhs
    elif relation == "iff":
        ok = bool(lhs) == bool(rhs)
    elif relation == "in":
        lo, hi = rhs
        ok = lo <= lhs <= hi
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return BoundReport(theorem, True, lhs, relation, rhs, ok, context)
