import logging
import sys
from typing import Optional

FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def get_logger(
    name: str, level: Optional[str] = None, log_file: Optional[str] = None
) -> logging.Logger:
    """Get configured logger instance"""
    logger = logging.getLogger(name)

    if not logger.handlers:  # Only configure if not already configured
        formatter = logging.Formatter(FORMAT)

        # Console handler; stdout carries results
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        logger.setLevel(level or logging.INFO)
        logger.propagate = False

    elif level:
        logger.setLevel(level)

    return logger


def configure_loggers(level: str, log_file: Optional[str] = None) -> None:
    """Apply one level (and optional log file) to every package logger."""
    names = [
        name
        for name in list(logging.root.manager.loggerDict)
        if name.split(".")[0] in ("src", "scripts")
    ]
    for name in names:
        logger = get_logger(name)
        logger.setLevel(level)
        has_file = any(isinstance(h, logging.FileHandler) for h in logger.handlers)
        if log_file and not has_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(logging.Formatter(FORMAT))
            logger.addHandler(file_handler)
