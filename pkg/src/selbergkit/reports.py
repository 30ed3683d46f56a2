"""Verification reports: per-case records emitted as JSON lines."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass


@dataclass
class VerificationReport:
    suite: str
    case_id: str
    params: dict
    lhs: str
    rhs: str
    abs_err: float
    rel_err: float
    passed: bool
    runtime_ms: float
    notes: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "VerificationReport":
        return cls(**json.loads(line))


def format_value(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.15g}{v.imag:+.15g}j"
    return str(v)


def make_report(suite, case_id, params, lhs, rhs, tol, runtime_ms,
                notes="", exact=False) -> VerificationReport:
    """Build a report; pass iff rel_err <= tol (abs_err for near-zero rhs)."""
    if exact:
        passed = bool(lhs == rhs)
        abs_err = 0.0 if passed else float("nan")
        rel_err = 0.0 if passed else float("nan")
    else:
        lv, rv = complex(lhs), complex(rhs)
        abs_err = abs(lv - rv)
        scale = abs(rv)
        rel_err = abs_err / scale if scale > 1e-30 else abs_err
        passed = rel_err <= tol
    return VerificationReport(
        suite=suite, case_id=case_id,
        params={k: format_value(v) for k, v in params.items()},
        lhs=format_value(lhs) if not exact else str(lhs),
        rhs=format_value(rhs) if not exact else str(rhs),
        abs_err=abs_err, rel_err=rel_err, passed=passed,
        runtime_ms=runtime_ms, notes=notes)
