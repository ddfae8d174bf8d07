"""Pochhammer products and the fixed factors of the type C identities."""
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from ..utils.exceptions import SeriesError
from .laurent import LaurentPoly, Scalar
from .series import SeriesSpace, TruncatedSeries

Exponents = Mapping[str, Union[int, Fraction]]
HALF = Fraction(1, 2)


def x_names(t: int) -> Tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, t + 1))


def x_vars(t: int) -> Tuple[LaurentPoly, ...]:
    return tuple(LaurentPoly.var(name) for name in x_names(t))


def pochhammer(
    space: SeriesSpace,
    coeff: Union[LaurentPoly, Scalar],
    start: Exponents,
    step: Exponents,
) -> TruncatedSeries:
    """(a;b)_inf = prod_{j>=0} (1 - a b^j) with a = coeff * X^start."""
    grade = space.grade(**start)
    step_grade = space.grade(**step)
    if not any(step_grade) or any(s < 0 for s in step_grade):
        raise SeriesError(f"Pochhammer base {dict(step)} never leaves the caps")
    one = TruncatedSeries.one(space)
    result = one
    while space.within(grade):
        result = result * (one - TruncatedSeries(space, {grade: coeff}))
        grade = tuple(g + s for g, s in zip(grade, step_grade))
    return result


def pochhammer_multi(
    space: SeriesSpace,
    args: Iterable[Tuple[Union[LaurentPoly, Scalar], Exponents]],
    step: Exponents,
) -> TruncatedSeries:
    """(a_1, ..., a_n; b)_inf as the product of the single symbols."""
    result = TruncatedSeries.one(space)
    for coeff, start in args:
        result = result * pochhammer(space, coeff, start, step)
    return result


def euler(space: SeriesSpace, var: str = "T") -> TruncatedSeries:
    """(T;T)_inf."""
    return pochhammer(space, 1, {var: 1}, {var: 1})


def k_factor(t: int, space: SeriesSpace, var: str = "T") -> TruncatedSeries:
    """K_T(t, x) = prod_{i<j} (T x_i x_j, T/(x_i x_j), T x_i/x_j, T x_j/x_i; T)_inf."""
    x = x_vars(t)
    args = []
    for i in range(t):
        for j in range(i + 1, t):
            for mono in (x[i] * x[j], (x[i] * x[j]) ** -1, x[i] * x[j] ** -1, x[j] * x[i] ** -1):
                args.append((mono, {var: 1}))
    return pochhammer_multi(space, args, {var: 1})


def weyl_denominator_c(t: int) -> LaurentPoly:
    """prod_i x_i^{-t} (1 - x_i^2) prod_{i<j} (x_j - x_i)(1 - x_i x_j)."""
    x = x_vars(t)
    result = LaurentPoly.constant(1)
    for i in range(t):
        result = result * x[i] ** -t * (1 - x[i] ** 2)
    for i in range(t):
        for j in range(i + 1, t):
            result = result * (x[j] - x[i]) * (1 - x[i] * x[j])
    return result


def type_c_product(t: int, space: SeriesSpace, var: str = "T") -> TruncatedSeries:
    """(T;T)^t K_T prod_i (T x_i^2, T x_i^{-2}; T)_inf."""
    x = x_vars(t)
    args = [(xi ** 2, {var: 1}) for xi in x] + [(xi ** -2, {var: 1}) for xi in x]
    return euler(space, var).pow_int(t) * k_factor(t, space, var) * pochhammer_multi(space, args, {var: 1})


def type_c_dual_product(t: int, space: SeriesSpace, var: str = "T") -> TruncatedSeries:
    """(T^{1/2};T^{1/2}) (T;T)^{t-1} K_T prod_i (T^{1/2} x_i, T^{1/2} x_i^{-1}; T^{1/2})_inf."""
    half = {var: HALF}
    x = x_vars(t)
    args = [(xi, half) for xi in x] + [(xi ** -1, half) for xi in x]
    return (
        pochhammer(space, 1, half, half)
        * euler(space, var).pow_int(t - 1)
        * k_factor(t, space, var)
        * pochhammer_multi(space, args, half)
    )
