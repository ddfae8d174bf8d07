from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Union

PASS = "pass"
FAIL = "fail"


@dataclass
class RunConfig:
    """Parameters of one verifier run, resolved from flags, env and YAML."""

    identity: str
    t: Optional[int] = None
    T_cap: Optional[Union[int, Fraction]] = None
    q_cap: Optional[int] = None
    max_weight: Optional[int] = None
    seed: Optional[int] = None
    tau_samples: Optional[int] = None
    workers: int = 1
    progress: bool = False
    printed: bool = False

    def params(self) -> Dict[str, Any]:
        """Only the parameters that shape the result; worker count is excluded."""
        keys = ("t", "T_cap", "q_cap", "max_weight", "seed", "tau_samples", "printed")
        params = {}
        for key in keys:
            value = getattr(self, key)
            if value is None or value is False:
                continue
            params[key] = str(value) if isinstance(value, Fraction) else value
        return params


@dataclass
class VerificationReport:
    identity: str
    params: Dict[str, Any]
    status: str = PASS
    first_mismatch: Optional[Dict[str, str]] = None
    mismatches: int = 0
    terms_enumerated: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def record(self, where: str, lhs: Any, rhs: Any) -> None:
        """Count a mismatch; only the first one keeps its coefficients."""
        self.status = FAIL
        self.mismatches += 1
        if self.first_mismatch is None:
            self.first_mismatch = {"at": where, "lhs": str(lhs), "rhs": str(rhs)}

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = asdict(self)
        if not timings:
            data.pop("elapsed")
        return data
