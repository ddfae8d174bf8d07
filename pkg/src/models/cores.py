from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Tuple

from .partition import Partition


@dataclass(frozen=True)
class Decomposition:
    t: int
    core: Partition
    quotient: Tuple[Partition, ...]

    @property
    def weight(self) -> int:
        return self.core.weight + self.t * sum(nu.weight for nu in self.quotient)


@dataclass(frozen=True)
class CoreVector:
    t: int
    n: Tuple[int, ...]

    @property
    def is_balanced(self) -> bool:
        return sum(self.n) == 0


class Family(str, Enum):
    DD = "dd"
    SC = "sc"


@dataclass(frozen=True)
class VCoding:
    g: int
    t: int
    v: Tuple[int, ...]
    family: Family

    @property
    def r(self) -> Tuple[int, ...]:
        """Shifted coding r_i = v_i - t - 1 (DD family)."""
        return tuple(x - self.t - 1 for x in self.v)

    @property
    def mu(self) -> Tuple[int, ...]:
        """Highest weight attached to the coding: v_i + i - g."""
        return tuple(x + i - self.g for i, x in enumerate(self.v, start=1))


@dataclass(frozen=True)
class GInterval:
    """Step-``g`` progression in [m, M) anchored at m ('+'), or in (m, M]
    anchored at M ('-')."""

    kind: str
    m: int
    M: int
    g: int

    @property
    def elements(self) -> FrozenSet[int]:
        if self.kind == "+":
            return frozenset(range(self.m, self.M, self.g))
        start = self.M
        return frozenset(range(start, self.m, -self.g))


@dataclass(frozen=True)
class StructureReport:
    """Clause-by-clause outcome of the restricted Littlewood decomposition."""

    partition: Partition
    t: int
    clauses: Dict[str, bool] = field(default_factory=dict, hash=False)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())
