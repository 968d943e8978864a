"""Structured outcomes of identity checks, with deterministic serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


def render_complex(z: complex) -> str:
    """Canonical text form of a complex value: ``re+imi`` / ``re-imi``.

    Real values (zero imaginary part) render as the bare float.  Floats use
    shortest round-trip representation.
    """
    z = complex(z)
    re = z.real + 0.0   # clears negative zero
    im = z.imag + 0.0
    if im == 0.0:
        return repr(re)
    sign = "+" if im >= 0 else "-"
    return f"{re!r}{sign}{abs(im)!r}i"


def render_fraction(q: Fraction) -> str:
    """Fraction as ``num/den``; integers drop the denominator."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _jsonable(v):
    if isinstance(v, complex):
        return render_complex(v)
    if isinstance(v, Fraction):
        return render_fraction(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if hasattr(v, "item") and not isinstance(v, (int, float, str, bool)):
        return _jsonable(v.item())   # numpy scalar
    return v


@dataclass
class CheckItem:
    """One compared quantity: an exponent base, an evaluation point, ..."""

    key: str
    error: float | None   # None for exact (ring-equality) comparisons
    exact: bool

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "error": None if self.error is None else float(self.error),
            "exact": bool(self.exact),
        }


@dataclass
class CheckReport:
    """Outcome of one identity verification.

    ``passed`` is true iff every item is within its tolerance (exact items
    must match on the nose).  ``substitution`` documents the exponent
    variable of a formal-series comparison, e.g. ``"u = 2s-1"``.
    """

    identity: str
    params: dict
    mode: str                      # "symbolic" | "numeric"
    items: list[CheckItem] = field(default_factory=list)
    max_error: float = 0.0
    passed: bool = True
    substitution: str = ""

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": _jsonable(self.params),
            "mode": self.mode,
            "items": [it.to_dict() for it in self.items],
            "max_error": float(self.max_error),
            "pass": bool(self.passed),
            "substitution": self.substitution,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def sort_key(self) -> tuple:
        return (self.identity, json.dumps(_jsonable(self.params), sort_keys=True))

    def summary_line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        ps = " ".join(f"{k}={_param_str(v)}" for k, v in self.params.items())
        err = "exact" if all(it.exact for it in self.items) and self.items else f"max_err={self.max_error:.3e}"
        return f"{tag}  {self.identity}  {ps}  [{err}]"


def _param_str(v) -> str:
    if isinstance(v, complex):
        return render_complex(v)
    if isinstance(v, Fraction):
        return render_fraction(v)
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_param_str(x) for x in v) + ")"
    return str(v)


def reports_to_json(reports: list[CheckReport]) -> str:
    """Deterministic JSON array: reports sorted by (identity, params)."""
    ordered = sorted(reports, key=CheckReport.sort_key)
    return json.dumps([r.to_dict() for r in ordered], sort_keys=True, indent=1)
