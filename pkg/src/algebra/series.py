"""Truncated formal series in one or more grading variables.

Grades are stored as integers in units of 1/den per grading variable, so a
space with T at denominator 2 hosts T^{1/2}. Coefficients are LaurentPoly in
the remaining variables.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..utils.exceptions import SeriesError
from .laurent import LaurentPoly, Scalar

Grade = Tuple[int, ...]
Coefficient = Union[LaurentPoly, Scalar]


@dataclass(frozen=True)
class SeriesSpace:
    names: Tuple[str, ...]
    dens: Tuple[int, ...]
    caps: Tuple[int, ...]

    @classmethod
    def build(
        cls, caps: Mapping[str, Union[int, Fraction]], dens: Optional[Mapping[str, int]] = None
    ) -> "SeriesSpace":
        """``caps`` in natural units, e.g. {"T": Fraction(7, 2)} with dens {"T": 2}."""
        dens = dens or {}
        names = tuple(caps)
        den_tuple = tuple(int(dens.get(name, 1)) for name in names)
        units = []
        for name, den in zip(names, den_tuple):
            if den < 1:
                raise SeriesError(f"grade denominator of {name} must be positive")
            cap = Fraction(caps[name]) * den
            if cap < 0 or cap.denominator != 1:
                raise SeriesError(f"cap {caps[name]} of {name} is not a multiple of 1/{den}")
            units.append(int(cap))
        return cls(names, den_tuple, tuple(units))

    def grade(self, **exponents: Union[int, Fraction]) -> Grade:
        unknown = set(exponents) - set(self.names)
        if unknown:
            raise SeriesError(f"{sorted(unknown)} are not grading variables of {self.names}")
        units = []
        for name, den in zip(self.names, self.dens):
            value = Fraction(exponents.get(name, 0)) * den
            if value.denominator != 1:
                raise SeriesError(f"{name}^{exponents[name]} is not a multiple of 1/{den}")
            units.append(int(value))
        return tuple(units)

    @property
    def zero_grade(self) -> Grade:
        return (0,) * len(self.names)

    def within(self, grade: Grade) -> bool:
        return all(0 <= g <= c for g, c in zip(grade, self.caps))

    def grades(self) -> Iterator[Grade]:
        return product(*(range(c + 1) for c in self.caps))

    def label(self, grade: Grade) -> str:
        parts = []
        for name, den, units in zip(self.names, self.dens, grade):
            value = Fraction(units, den)
            parts.append(f"{name}^{value}")
        return " ".join(parts)


def _as_poly(value: Coefficient) -> LaurentPoly:
    return value if isinstance(value, LaurentPoly) else LaurentPoly.constant(value)


class TruncatedSeries:
    """Map grade -> LaurentPoly, truncated to the caps of ``space``."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: SeriesSpace, coeffs: Optional[Mapping[Grade, Coefficient]] = None):
        self.space = space
        self.coeffs: Dict[Grade, LaurentPoly] = {}
        for grade, coeff in (coeffs or {}).items():
            if not space.within(grade):
                continue
            poly = _as_poly(coeff)
            if poly:
                self.coeffs[tuple(grade)] = poly

    # constructors

    @classmethod
    def zero(cls, space: SeriesSpace) -> "TruncatedSeries":
        return cls(space)

    @classmethod
    def one(cls, space: SeriesSpace) -> "TruncatedSeries":
        return cls(space, {space.zero_grade: 1})

    @classmethod
    def monomial(cls, space: SeriesSpace, coeff: Coefficient = 1, **exponents) -> "TruncatedSeries":
        grade = space.grade(**exponents)
        if any(g < 0 for g in grade):
            raise SeriesError(f"negative grade {space.label(grade)}")
        return cls(space, {grade: coeff})

    @classmethod
    def binomial(cls, space: SeriesSpace, coeff: Coefficient = 1, **exponents) -> "TruncatedSeries":
        """1 - coeff * X^grade."""
        return cls.one(space) - cls.monomial(space, coeff, **exponents)

    @classmethod
    def geometric(cls, space: SeriesSpace, coeff: Coefficient = 1, **exponents) -> "TruncatedSeries":
        """1 / (1 - coeff * X^grade), expanded up to the caps."""
        grade = space.grade(**exponents)
        if not any(grade):
            raise SeriesError("geometric series needs a positive grade")
        base = _as_poly(coeff)
        coeffs = {}
        power = LaurentPoly.constant(1)
        k = 0
        while space.within(tuple(k * g for g in grade)):
            coeffs[tuple(k * g for g in grade)] = power
            power = power * base
            k += 1
        return cls(space, coeffs)

    # ring structure

    def _check_space(self, other: "TruncatedSeries") -> None:
        if other.space != self.space:
            raise SeriesError(f"incompatible series spaces {self.space} and {other.space}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_space(other)
        coeffs = dict(self.coeffs)
        for grade, coeff in other.coeffs.items():
            coeffs[grade] = coeffs[grade] + coeff if grade in coeffs else coeff
        return TruncatedSeries(self.space, coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.space, {g: -c for g, c in self.coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "TruncatedSeries":
        factor = _as_poly(factor)
        return TruncatedSeries(self.space, {g: c * factor for g, c in self.coeffs.items()})

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check_space(other)
        caps = self.space.caps
        out: Dict[Grade, LaurentPoly] = {}
        for g1, c1 in self.coeffs.items():
            for g2, c2 in other.coeffs.items():
                grade = tuple(a + b for a, b in zip(g1, g2))
                if any(x > c for x, c in zip(grade, caps)):
                    continue
                term = c1 * c2
                out[grade] = out[grade] + term if grade in out else term
        return TruncatedSeries(self.space, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.space == other.space and self.coeffs == other.coeffs

    def __getstate__(self):
        return self.space, self.coeffs

    def __setstate__(self, state):
        self.space, self.coeffs = state

    # inspection

    def coefficient(self, **exponents) -> LaurentPoly:
        return self.coeffs.get(self.space.grade(**exponents), LaurentPoly())

    def constant_term(self) -> LaurentPoly:
        return self.coeffs.get(self.space.zero_grade, LaurentPoly())

    def _positive_part(self) -> "TruncatedSeries":
        zero = self.space.zero_grade
        return TruncatedSeries(self.space, {g: c for g, c in self.coeffs.items() if g != zero})

    # analytic operations

    def inverse(self) -> "TruncatedSeries":
        c0 = self.constant_term()
        if not c0.is_monomial:
            raise SeriesError(f"constant term {c0} is not a unit")
        c0_inv = c0 ** -1
        h = self._positive_part().scale(c0_inv)
        # (c0 (1 + h))^{-1} = c0^{-1} sum (-h)^k
        result = TruncatedSeries.one(self.space)
        term = TruncatedSeries.one(self.space)
        while True:
            term = -(term * h)
            if not term.coeffs:
                break
            result = result + term
        return result.scale(c0_inv)

    def pow_int(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return self.inverse().pow_int(-n)
        result, base = TruncatedSeries.one(self.space), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def log(self) -> "TruncatedSeries":
        if self.constant_term() != 1:
            raise SeriesError(f"log needs constant term 1, got {self.constant_term()}")
        h = self._positive_part()
        result = TruncatedSeries.zero(self.space)
        power = TruncatedSeries.one(self.space)
        k = 1
        while True:
            power = power * h
            if not power.coeffs:
                break
            sign = 1 if k % 2 else -1
            result = result + power.scale(Fraction(sign, k))
            k += 1
        return result

    def exp(self) -> "TruncatedSeries":
        if self.constant_term():
            raise SeriesError("exp needs a series with zero constant grade")
        result = TruncatedSeries.one(self.space)
        term = TruncatedSeries.one(self.space)
        k = 1
        while True:
            term = (term * self).scale(Fraction(1, k))
            if not term.coeffs:
                break
            result = result + term
            k += 1
        return result

    def power(self, exponent: Coefficient) -> "TruncatedSeries":
        """f^e = exp(e log f) for a constant-1 series and any Laurent exponent."""
        if isinstance(exponent, int):
            return self.pow_int(exponent)
        return self.log().scale(exponent).exp()

    # reporting

    def dump(self) -> List[str]:
        """One ``T^a q^b : poly`` line per nonzero grade, in grade order."""
        return [f"{self.space.label(g)} : {self.coeffs[g]}" for g in sorted(self.coeffs)]

    def mismatches(self, other: "TruncatedSeries") -> List[Grade]:
        self._check_space(other)
        grades = set(self.coeffs) | set(other.coeffs)
        return sorted(
            g for g in grades if self.coeffs.get(g, LaurentPoly()) != other.coeffs.get(g, LaurentPoly())
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries({'; '.join(self.dump()) or '0'})"


def series_sum(space: SeriesSpace, terms: Iterable[TruncatedSeries]) -> TruncatedSeries:
    """Merge of coefficient maps; order of ``terms`` does not affect the result."""
    coeffs: Dict[Grade, LaurentPoly] = {}
    for term in terms:
        for grade, coeff in term.coeffs.items():
            coeffs[grade] = coeffs[grade] + coeff if grade in coeffs else coeff
    return TruncatedSeries(space, coeffs)


def series_product(space: SeriesSpace, factors: Iterable[TruncatedSeries]) -> TruncatedSeries:
    result = TruncatedSeries.one(space)
    for factor in factors:
        result = result * factor
    return result
