#!/usr/bin/env python3

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.core.suite import VerificationSuite  # noqa: E402
from src.utils.config import Config  # noqa: E402
from src.utils.exceptions import HookIdentitiesError  # noqa: E402
from src.utils.logging_setup import configure_loggers, get_logger  # noqa: E402
from src.utils.serialization import dumps  # noqa: E402

logger = get_logger("scripts.run_suite")


def setup_logging(config):
    """Apply the configured level and clear the previous log file."""
    logging_config = config.get("logging") or {}
    log_file = logging_config.get("file")
    if log_file:
        log_path = Path(log_file)
        if log_path.exists():
            try:
                log_path.write_text("")
            except OSError as e:
                print(f"Warning: Could not clear log file: {e}", file=sys.stderr)
    configure_loggers(logging_config.get("level", "INFO"), log_file)
    logger.info("Started new suite run")


def main():
    parser = argparse.ArgumentParser(description="Hook identities verification suite")
    parser.add_argument("--config", type=Path, default=Path("config.yaml"))
    parser.add_argument("--check-golden", action="store_true")
    parser.add_argument("--update-golden", action="store_true")
    parser.add_argument("--timings", action="store_true")
    args = parser.parse_args()

    try:
        config = Config(args.config)
        setup_logging(config)

        suite = VerificationSuite(config)
        suite.run_all()
        output = config.get("output") or {}
        suite.save_reports(Path(output.get("reports_dir", "reports")), args.timings)

        golden_ok = True
        if args.check_golden or args.update_golden:
            golden_dir = Path(output.get("golden_dir", "golden"))
            golden_ok = suite.check_golden(golden_dir, args.update_golden)
    except HookIdentitiesError as e:
        print(dumps({"error": type(e).__name__, "message": str(e)}))
        return 2

    return 0 if suite.passed and golden_ok else 1


if __name__ == "__main__":
    sys.exit(main())
