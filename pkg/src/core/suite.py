from pathlib import Path
from typing import Any, Dict, List, Optional

from ..models.report import RunConfig, VerificationReport
from ..utils.config import Config
from ..utils.exceptions import ConfigurationError
from ..utils.logging_setup import get_logger
from ..utils.serialization import dumps, parse_cap
from .identities import HALF_GRADED, USES_Q_CAP, USES_SEED, USES_T_CAP, USES_WEIGHT, run_identity

logger = get_logger(__name__)


def resolve_run(
    config: Config,
    identity: str,
    t: Optional[int] = None,
    T_cap=None,
    q_cap: Optional[int] = None,
    max_weight: Optional[int] = None,
    seed: Optional[int] = None,
    printed: bool = False,
) -> RunConfig:
    """Fill unset parameters from the config; only the ones ``identity`` uses."""
    caps = config["caps"]
    run = RunConfig(
        identity=identity,
        t=t,
        workers=config["parallel"].get("workers", 1),
        progress=bool(config.get("progress", False)),
        printed=printed,
    )
    if identity in USES_T_CAP:
        run.T_cap = parse_cap(caps["T"] if T_cap is None else T_cap)
        if identity not in HALF_GRADED and not isinstance(run.T_cap, int):
            raise ConfigurationError(f"{identity} needs a whole T cap, got {run.T_cap}")
    if identity in USES_Q_CAP:
        run.q_cap = int(caps["q"] if q_cap is None else q_cap)
    if identity in USES_WEIGHT:
        run.max_weight = int(caps.get("weight", 0) if max_weight is None else max_weight)
    if identity in USES_SEED:
        run.seed = config["random"]["seed"] if seed is None else seed
        run.tau_samples = config["random"]["tau_samples"]
    config.check_budget(run.T_cap, run.q_cap, run.max_weight)
    return run


def params_slug(params: Dict[str, Any]) -> str:
    """File name for a parameter set, e.g. ``t=1,T_cap=7over2``."""
    if not params:
        return "default"
    return ",".join(f"{key}={str(value).replace('/', 'over')}" for key, value in params.items())


def golden_path(golden_dir: Path, report: VerificationReport) -> Path:
    return Path(golden_dir) / report.identity / f"{params_slug(report.params)}.json"


def compare_golden(report: VerificationReport, golden_dir: Path, update: bool = False) -> bool:
    """Write the report when asked to (or when missing); otherwise compare bytes."""
    path = golden_path(golden_dir, report)
    text = dumps(report.to_dict()) + "\n"
    if update or not path.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info(f"Wrote golden file {path}")
        return True
    same = path.read_text() == text
    if not same:
        logger.warning(f"Report differs from golden file {path}")
    return same


class VerificationSuite:
    """Runs every entry of the ``suite`` config list and collects the reports."""

    def __init__(self, config: Config):
        self.config = config
        self.logger = get_logger(__name__)
        self.reports: List[VerificationReport] = []

    def runs(self) -> List[RunConfig]:
        entries = self.config.get("suite") or []
        runs = []
        for entry in entries:
            entry = dict(entry)
            identity = entry.pop("identity", None)
            if identity is None:
                raise ConfigurationError(f"suite entry without identity: {entry}")
            unknown = set(entry) - {"t", "T_cap", "q_cap", "max_weight", "seed", "printed"}
            if unknown:
                raise ConfigurationError(f"unknown suite keys {sorted(unknown)} for {identity}")
            runs.append(resolve_run(self.config, identity, **entry))
        return runs

    def run_all(self) -> List[VerificationReport]:
        runs = self.runs()
        self.logger.info(f"Running {len(runs)} verifications")
        self.reports = [run_identity(run) for run in runs]
        failed = [r.identity for r in self.reports if not r.passed]
        self.logger.info(f"{len(self.reports) - len(failed)} passed, {len(failed)} failed {failed}")
        return self.reports

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def save_reports(self, reports_dir: Path, timings: bool = False) -> List[Path]:
        paths = []
        for report in self.reports:
            path = golden_path(reports_dir, report)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(dumps(report.to_dict(timings)) + "\n")
            paths.append(path)
        self.logger.info(f"Saved {len(paths)} reports under {reports_dir}")
        return paths

    def check_golden(self, golden_dir: Path, update: bool = False) -> bool:
        results = [compare_golden(report, golden_dir, update) for report in self.reports]
        return all(results)
