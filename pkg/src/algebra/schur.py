"""Symplectic and odd orthogonal characters as bialternant ratios."""
from functools import lru_cache
from typing import List, Mapping, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..models.partition import Partition
from ..utils.exceptions import PartitionError
from .laurent import LaurentPoly, exact_div, from_qq, poly_ring, to_qq
from .products import x_names, x_vars


def determinant(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant over the Laurent ring of the entries.

    Each row is multiplied by the monomial clearing its negative powers, the
    polynomial determinant is taken by ``DomainMatrix`` and the monomials are
    divided back out.
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0:
        return LaurentPoly.constant(1)
    entries = LaurentPoly.align(*(entry for row in rows for entry in row))
    names = entries[0].names
    if not names:
        constants = [[to_qq(e.constant_term()) for e in entries[i * n:(i + 1) * n]] for i in range(n)]
        return LaurentPoly.constant(from_qq(DomainMatrix(constants, (n, n), QQ).det()))

    ring = poly_ring(names)
    cleared = []
    total = [0] * len(names)
    for i in range(n):
        row = entries[i * n:(i + 1) * n]
        nonzero = [e for e in row if e]
        if not nonzero:
            return LaurentPoly()
        low = [min(column) for column in zip(*(e.shift for e in nonzero))]
        cleared.append(
            [e.poly.mul_monom(tuple(s - m for s, m in zip(e.shift, low))) if e else ring.zero for e in row]
        )
        total = [a + b for a, b in zip(total, low)]
    det = DomainMatrix(cleared, (n, n), ring.to_domain()).det()
    return LaurentPoly._normalize(det, tuple(total))


def _padded(mu: Partition, t: int) -> List[int]:
    if mu.length > t:
        raise PartitionError(f"{mu} has more than {t} parts")
    return list(mu.parts) + [0] * (t - mu.length)


def _bialternant(
    mu: Partition, t: int, shift: int, images: Optional[Mapping[int, LaurentPoly]] = None
) -> LaurentPoly:
    """det(x_j^{a_i} - x_j^{-(a_i - shift)}) with a_i = mu_i + t - i + 1."""
    x = [images[j] for j in range(1, t + 1)] if images else list(x_vars(t))
    rows = []
    for i, part in enumerate(_padded(mu, t), start=1):
        a = part + t - i + 1
        rows.append([xj ** a - xj ** (shift - a) for xj in x])
    return determinant(rows)


@lru_cache(maxsize=None)
def sp(mu: Partition, t: int) -> LaurentPoly:
    """Character of Sp(2t) with highest weight ``mu``."""
    return exact_div(_bialternant(mu, t, 0), _bialternant(Partition(()), t, 0))


@lru_cache(maxsize=None)
def so_odd(mu: Partition, t: int) -> LaurentPoly:
    """Character of SO(2t+1); half-integer powers cleared column by column."""
    return exact_div(_bialternant(mu, t, 1), _bialternant(Partition(()), t, 1))


@lru_cache(maxsize=None)
def principal_sp(mu: Partition, t: int, var: str = "q") -> LaurentPoly:
    """sp_mu(q, q^2, ..., q^t), specialized before dividing."""
    q = LaurentPoly.var(var)
    images = {i: q ** i for i in range(1, t + 1)}
    return exact_div(_bialternant(mu, t, 0, images), _bialternant(Partition(()), t, 0, images))


def dimension(mu: Partition, t: int, orthogonal: bool = False) -> int:
    character = so_odd(mu, t) if orthogonal else sp(mu, t)
    value = character.evaluate(**{name: 1 for name in x_names(t)})
    return int(value)
