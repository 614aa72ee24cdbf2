"""Verification reports: check records, ordering and serialization."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

SCHEMA_VERSION = 1


@dataclass
class Check:
    id: str
    anchor: str
    ok: bool
    witness: Any = None
    wall_time: Optional[float] = None

    def to_json(self, timings: bool) -> Dict[str, Any]:
        out = {"id": self.id, "anchor": self.anchor, "status": "pass" if self.ok else "fail",
               "witness": _jsonable(self.witness)}
        if timings and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _jsonable(x: Any) -> Any:
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    return repr(x)


class Recorder:
    """Collects checks; an exception inside a check is recorded as a failure, never raised."""

    def __init__(self, suite: str):
        self.suite = suite
        self.checks: List[Check] = []

    def add(self, cid: str, anchor: str, ok: bool, witness: Any = None, wall_time: float = None) -> None:
        self.checks.append(Check(cid, anchor, bool(ok), witness, wall_time))

    def run(self, cid: str, anchor: str, fn: Callable[[], Any]) -> None:
        """``fn`` returns ok or ``(ok, witness)``."""
        start = time.perf_counter()
        try:
            result = fn()
            ok, witness = result if isinstance(result, tuple) else (result, None)
        except Exception as exc:  # noqa: BLE001 - recorded as a failed check
            ok, witness = False, f"{type(exc).__name__}: {exc}"
        self.add(cid, anchor, ok, witness, time.perf_counter() - start)


@dataclass
class VerificationReport:
    suite: str
    flags: Dict[str, Any]
    checks: List[Check] = field(default_factory=list)

    @property
    def failed(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failed

    def sorted_checks(self) -> List[Check]:
        return sorted(self.checks, key=lambda c: c.id)

    def to_json(self, timings: bool = False) -> Dict[str, Any]:
        checks = self.sorted_checks()
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "flags": _jsonable(self.flags),
            "summary": {"total": len(checks), "passed": len(checks) - len(self.failed),
                        "failed": len(self.failed)},
            "checks": [c.to_json(timings) for c in checks],
        }

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def text(self, timings: bool = False) -> str:
        lines = []
        for c in self.sorted_checks():
            t = f"  [{c.wall_time:.3f}s]" if timings and c.wall_time is not None else ""
            lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.id}  {c.anchor}{t}")
            if not c.ok and c.witness is not None:
                lines.append(f"      witness: {_jsonable(c.witness)}")
        lines.append(f"{self.suite}: {len(self.checks) - len(self.failed)}/{len(self.checks)} passed")
        return "\n".join(lines) + "\n"
