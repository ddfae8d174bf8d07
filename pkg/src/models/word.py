from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from ..utils.exceptions import WordError


@dataclass(frozen=True)
class BoundaryWord:
    """Bi-infinite 0/1 word: every index below ``floor`` is a 0-letter, and
    at or above ``floor`` the 0-letters are exactly ``zeros``.

    Construction normalizes so that ``floor`` itself is never listed.
    """

    floor: int
    zeros: FrozenSet[int]

    def __post_init__(self):
        floor = int(self.floor)
        zeros = set(self.zeros)
        if any(z < floor for z in zeros):
            raise WordError(f"explicit zeros must lie at or above floor {floor}")
        while floor in zeros:
            zeros.discard(floor)
            floor += 1
        object.__setattr__(self, "floor", floor)
        object.__setattr__(self, "zeros", frozenset(zeros))

    @classmethod
    def from_bits(cls, lo: int, bits: Iterable[int]) -> "BoundaryWord":
        """Window starting at ``lo``; 0s before it, 1s after it."""
        zeros = {lo + k for k, bit in enumerate(bits) if bit == 0}
        return cls(lo, frozenset(zeros))

    @property
    def charge(self) -> int:
        """Zero for words obeying the median convention."""
        return self.floor + len(self.zeros)

    @property
    def is_balanced(self) -> bool:
        return self.charge == 0

    @property
    def top(self) -> int:
        """Every index at or above ``top`` is a 1-letter."""
        return max(self.zeros, default=self.floor - 1) + 1

    def letter(self, k: int) -> int:
        return 0 if k < self.floor or k in self.zeros else 1

    def letters(self, lo: int, hi: int) -> Tuple[int, ...]:
        return tuple(self.letter(k) for k in range(lo, hi))

    def ones_between(self, lo: int, hi: int) -> Tuple[int, ...]:
        """Indices of 1-letters in [lo, hi)."""
        return tuple(k for k in range(max(lo, self.floor), hi) if k not in self.zeros)

    def zeros_between(self, lo: int, hi: int) -> Tuple[int, ...]:
        """Indices of 0-letters in [lo, hi)."""
        below = range(lo, min(hi, self.floor))
        return tuple(below) + tuple(sorted(z for z in self.zeros if lo <= z < hi))

    def subword(self, residue: int, modulus: int) -> "BoundaryWord":
        """The word (c_{modulus*i + residue})_i."""
        floor = -((residue - self.floor) // modulus)
        zeros = frozenset(
            (z - residue) // modulus for z in self.zeros if (z - residue) % modulus == 0
        )
        return BoundaryWord(floor, zeros)

    def last_zero(self, residue: int, modulus: int) -> int:
        """Largest 0-letter index congruent to ``residue``."""
        explicit = [z for z in self.zeros if (z - residue) % modulus == 0]
        if explicit:
            return max(explicit)
        below = self.floor - 1
        return below - ((below - residue) % modulus)

    def first_one(self, residue: int, modulus: int) -> int:
        """Smallest 1-letter index congruent to ``residue``."""
        k = self.floor + ((residue - self.floor) % modulus)
        while k in self.zeros:
            k += modulus
        return k

    def render(self, lo: int = None, hi: int = None) -> str:
        """Window like ``...001101|010011...`` with ``|`` at the median."""
        lo = min(self.floor - 2, -1) if lo is None else lo
        hi = max(self.top + 2, 1) if hi is None else hi
        left = "".join(str(self.letter(k)) for k in range(lo, min(0, hi)))
        right = "".join(str(self.letter(k)) for k in range(max(0, lo), hi))
        return f"...{left}|{right}..."


@dataclass(frozen=True)
class IndexPair:
    """Indices of a box: c_i = 1, c_j = 0 and i < j."""

    i: int
    j: int

    @property
    def gap(self) -> int:
        return self.j - self.i
