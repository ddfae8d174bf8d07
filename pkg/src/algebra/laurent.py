"""Multivariate Laurent polynomials with exact rational coefficients.

A value is a ``sympy.polys.rings`` element over QQ times a monomial shift.
The polynomial part is kept free of variable factors, so two equal Laurent
polynomials over the same variables have equal parts and equal shifts.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..utils.exceptions import DivisionError

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]
Shift = Tuple[int, ...]

ONE_MONOMIAL: Monomial = ()


@lru_cache(maxsize=None)
def poly_ring(names: Tuple[str, ...]) -> PolyRing:
    """QQ[names]; one ring per sorted variable tuple."""
    return ring(",".join(names), QQ)[0]


def to_qq(value: Scalar):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def _mono(exponents: Mapping[str, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exponents.items() if e))


def _minus(a: Shift, b: Shift) -> Shift:
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """``poly * prod(names ** shift)`` with ``poly`` divisible by no variable."""

    __slots__ = ("poly", "shift")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        terms = terms or {}
        names = tuple(sorted({v for mono in terms for v, _ in mono}))
        exponents: Dict[Shift, object] = {}
        for mono, coeff in terms.items():
            powers = dict(mono)
            key = tuple(powers.get(v, 0) for v in names)
            exponents[key] = exponents.get(key, QQ.zero) + to_qq(coeff)
        self.poly, self.shift = _normal_form(poly_ring(names), exponents)

    @classmethod
    def _wrap(cls, poly: PolyElement, shift: Shift) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj.poly = poly
        obj.shift = shift if poly else (0,) * len(shift)
        return obj

    @classmethod
    def _normalize(cls, poly: PolyElement, shift: Shift) -> "LaurentPoly":
        """Move common variable factors of ``poly`` into the shift."""
        if not poly:
            return cls._wrap(poly, shift)
        low = tuple(min(column) for column in zip(*poly.itermonoms()))
        if any(low):
            poly = poly.new([(_minus(m, low), c) for m, c in poly.iterterms()])
            shift = tuple(s + d for s, d in zip(shift, low))
        return cls._wrap(poly, shift)

    # constructors

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls({ONE_MONOMIAL: value})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **exponents: int) -> "LaurentPoly":
        return cls({_mono(exponents): coeff})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        return cls({_mono({name: power}): 1})

    @classmethod
    def from_exponents(cls, exponents: Mapping[str, int], coeff: Scalar = 1) -> "LaurentPoly":
        return cls({_mono(exponents): coeff})

    # variables

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(s.name for s in self.poly.ring.symbols)

    def over(self, names: Tuple[str, ...]) -> "LaurentPoly":
        """The same value in the ring of ``names`` (a superset of ``self.names``)."""
        if names == self.names:
            return self
        shifts = dict(zip(self.names, self.shift))
        return LaurentPoly._wrap(
            self.poly.set_ring(poly_ring(names)), tuple(shifts.get(v, 0) for v in names)
        )

    @staticmethod
    def align(*polys: "LaurentPoly") -> Tuple["LaurentPoly", ...]:
        names = tuple(sorted({v for p in polys for v in p.names}))
        return tuple(p.over(names) for p in polys)

    # ring structure

    @staticmethod
    def _lift(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        if not self:
            return other
        a, b = self.align(self, other)
        low = tuple(map(min, a.shift, b.shift))
        total = a.poly.mul_monom(_minus(a.shift, low)) + b.poly.mul_monom(_minus(b.shift, low))
        return LaurentPoly._normalize(total, low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap(-self.poly, self.shift)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly._wrap(self.poly.mul_ground(to_qq(other)), self.shift)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.align(self, other)
        # products of variable-free parts stay variable-free
        return LaurentPoly._wrap(a.poly * b.poly, tuple(x + y for x, y in zip(a.shift, b.shift)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial:
                raise DivisionError(f"only monomials are units, cannot invert {self}")
            (coeff,) = self.poly.coeffs()
            inverse = self.poly.ring.ground_new(QQ.one / coeff)
            return LaurentPoly._wrap(inverse ** (-n), tuple(-s * n for s in self.shift))
        return LaurentPoly._wrap(self.poly ** n, tuple(s * n for s in self.shift))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return exact_div(self, other)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        a, b = self.align(self, other)
        return a.shift == b.shift and a.poly == b.poly

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.poly)

    def __reduce__(self):
        return LaurentPoly, (self.terms,)

    # inspection

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        """Monomial -> coefficient, exponents shifted back in."""
        names = self.names
        return {
            _mono({v: e + s for v, e, s in zip(names, exps, self.shift)}): from_qq(coeff)
            for exps, coeff in self.poly.iterterms()
        }

    @property
    def is_monomial(self) -> bool:
        return len(self.poly) == 1

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted({v for mono in self.terms for v, _ in mono}))

    def coefficient(self, **exponents: int) -> Fraction:
        return self.terms.get(_mono(exponents), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient()

    def degree_bounds(self, name: str) -> Tuple[int, int]:
        degrees = [dict(mono).get(name, 0) for mono in self.terms]
        return min(degrees), max(degrees)

    # transformations

    def substitute(self, **images: "LaurentPoly") -> "LaurentPoly":
        """Replace variables by Laurent polynomials (monomials may be inverted)."""
        result = LaurentPoly()
        for mono, coeff in self.terms.items():
            term = LaurentPoly.constant(coeff)
            rest = {}
            for v, e in mono:
                if v in images:
                    term = term * (images[v] ** e)
                else:
                    rest[v] = e
            result = result + term * LaurentPoly.from_exponents(rest)
        return result

    def invert_variable(self, name: str) -> "LaurentPoly":
        """x -> x^{-1} for one variable."""
        return LaurentPoly(
            {_mono({v: (-e if v == name else e) for v, e in mono}): c for mono, c in self.terms.items()}
        )

    def evaluate(self, **values: Scalar) -> Union[Fraction, "LaurentPoly"]:
        images = {v: LaurentPoly.constant(Fraction(x)) for v, x in values.items()}
        result = self.substitute(**images)
        if not result.variables:
            return result.constant_term()
        return result

    # formatting

    def sorted_terms(self) -> Iterable[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __str__(self) -> str:
        if not self:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            if not factors:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append("*".join(factors))
            elif coeff == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _normal_form(poly_ring_: PolyRing, exponents: Mapping[Shift, object]) -> Tuple[PolyElement, Shift]:
    exponents = {e: c for e, c in exponents.items() if c}
    if not exponents:
        return poly_ring_.zero, (0,) * poly_ring_.ngens
    low = tuple(min(column) for column in zip(*exponents)) if poly_ring_.ngens else ()
    poly = poly_ring_.from_dict({_minus(e, low): c for e, c in exponents.items()})
    return poly, low


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient q with b*q == a; raises DivisionError naming the residual."""
    if not b:
        raise DivisionError("division by the zero polynomial")
    if not a:
        return LaurentPoly()
    a, b = LaurentPoly.align(a, b)
    try:
        quotient = a.poly.exquo(b.poly)
    except ExactQuotientFailed:
        residual = LaurentPoly._normalize(a.poly.rem(b.poly), a.shift)
        raise DivisionError(f"{b} does not divide {a}; residual {residual}", residual=residual)
    return LaurentPoly._normalize(quotient, _minus(a.shift, b.shift))
