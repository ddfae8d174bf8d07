import json
from fractions import Fraction
from typing import Any, Iterable, Union

from ..models.partition import Partition
from .exceptions import ConfigurationError, PartitionError


def parse_partition(text: str) -> Partition:
    """Parse ``"11,6,4,2"``; the empty string is the empty partition."""
    text = (text or "").strip()
    if text in ("", "∅"):
        return Partition(())
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise PartitionError(f"Malformed partition string: {text!r}")
    if any(p < 1 for p in parts):
        raise PartitionError(f"Parts must be positive integers: {text!r}")
    return Partition(parts)


def format_partition(p: Partition) -> str:
    return str(p)


def partition_to_json(p: Partition) -> list:
    return list(p.parts)


def partition_from_json(data: Iterable[int]) -> Partition:
    try:
        return Partition(tuple(int(x) for x in data))
    except (TypeError, ValueError):
        raise PartitionError(f"Malformed partition array: {data!r}")


def dumps(data: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def parse_cap(value: Union[int, str, Fraction]) -> Union[int, Fraction]:
    """Caps are integers or half-integers written ``"7/2"``."""
    try:
        cap = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigurationError(f"Malformed cap: {value!r}")
    if cap < 0:
        raise ConfigurationError(f"Caps must be nonnegative, got {value!r}")
    return int(cap) if cap.denominator == 1 else cap
