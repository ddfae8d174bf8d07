from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Tuple

from ..utils.exceptions import PartitionError


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; ``Partition(())`` is empty."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise PartitionError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts, dropping trailing zeros."""
        return cls(tuple(p for p in parts if p != 0))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def conjugate_parts(self) -> Tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def part(self, i: int) -> int:
        """1-based part with zero padding."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def column(self, j: int) -> int:
        """1-based conjugate part with zero padding."""
        cols = self.conjugate_parts
        return cols[j - 1] if 1 <= j <= len(cols) else 0

    def cells(self) -> Iterable[Tuple[int, int]]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


EMPTY = Partition(())


@dataclass(frozen=True)
class Box:
    row: int
    col: int
    hook: int
    eps: int
    on_diagonal: bool

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class HPlusStats:
    g: int
    h_plus: int
    h_plus_diag: int
    alpha: Dict[int, int] = field(default_factory=dict, hash=False)
