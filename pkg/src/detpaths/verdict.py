from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

ROUTES = ("generic-symbolic", "schur-symbolic", "integer-fuzz", "bijective")
SCHEMA_VERSION = 1


@dataclass
class Verdict:
    identity: str
    params: dict = field(default_factory=dict)
    route: str = "integer-fuzz"
    trials: int = 0
    status: str = "pass"  # 'pass' or 'fail'
    counterexample: Any = None
    seed: int | None = None
    vacuous: bool = False
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if self.status not in ("pass", "fail"):
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        d = asdict(self)
        d["schema_version"] = SCHEMA_VERSION
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
