"""
Cyclotomic Integers - Exact arithmetic in Z[zeta_d].

Elements are coefficient vectors in the power basis 1, zeta, ...,
zeta^{phi(d)-1}, reduced modulo the d-th cyclotomic polynomial, so two
elements are equal iff their coefficient tuples are equal. For d=4 this is
Z[i], for d=3 the Eisenstein integers and for d=2 plain integers.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from sympy import Poly, Symbol, ZZ, divisors

from src.common.exceptions.exceptions import ShapeError

_X = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> Poly:
    """
    The d-th cyclotomic polynomial Phi_d.

    Computed as x^d - 1 divided exactly by Phi_e for every proper divisor e.

    Args:
        d: Order of the roots of unity (d >= 1)

    Returns:
        Poly: Phi_d over ZZ

    Raises:
        ShapeError: If d < 1
    """
    if d < 1:
        raise ShapeError(f"cyclotomic polynomial needs d >= 1, got {d}")
    result = Poly(_X ** d - 1, _X, domain=ZZ)
    for e in divisors(d):
        if e < d:
            result = result.exquo(cyclotomic_polynomial(e))
    return result


def _coeffs_low_first(p: Poly, width: int) -> Tuple[int, ...]:
    coeffs = [int(c) for c in reversed(p.all_coeffs())]
    coeffs += [0] * (width - len(coeffs))
    return tuple(coeffs[:width])


@lru_cache(maxsize=None)
def root_power_table(d: int) -> np.ndarray:
    """
    Reduced coordinates of zeta_d^k for k = 0..d-1.

    Returns:
        np.ndarray: (d, phi(d)) int64 array; row k represents zeta^k
    """
    phi = cyclotomic_polynomial(d)
    width = phi.degree()
    rows = [_coeffs_low_first(Poly(_X ** k, _X, domain=ZZ).rem(phi), width) for k in range(d)]
    table = np.array(rows, dtype=np.int64)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class CyclotomicInteger:
    """
    An exact element of Z[zeta_d].

    Attributes:
        degree: d
        coeffs: Coordinates in the basis 1, zeta, ..., zeta^{phi(d)-1}
    """
    degree: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        width = cyclotomic_polynomial(self.degree).degree()
        if len(self.coeffs) != width:
            raise ShapeError(
                f"Z[zeta_{self.degree}] needs {width} coefficients, got {len(self.coeffs)}")

    # Constructors
    @classmethod
    def zero(cls, d: int) -> 'CyclotomicInteger':
        return cls(d, (0,) * cyclotomic_polynomial(d).degree())

    @classmethod
    def from_int(cls, d: int, value: int) -> 'CyclotomicInteger':
        width = cyclotomic_polynomial(d).degree()
        return cls(d, (int(value),) + (0,) * (width - 1))

    @classmethod
    def root_power(cls, d: int, k: int) -> 'CyclotomicInteger':
        """zeta_d^k; k is reduced mod d."""
        return cls(d, tuple(int(c) for c in root_power_table(d)[k % d]))

    @classmethod
    def from_root_counts(cls, d: int, counts: Sequence[int]) -> 'CyclotomicInteger':
        """sum_k counts[k] * zeta^k for a histogram of root exponents."""
        vec = np.asarray(counts, dtype=np.int64) @ root_power_table(d)
        return cls(d, tuple(int(c) for c in vec))

    # Arithmetic
    def _same_ring(self, other: 'CyclotomicInteger') -> None:
        if not isinstance(other, CyclotomicInteger):
            raise TypeError(f"cannot combine CyclotomicInteger with {type(other).__name__}")
        if other.degree != self.degree:
            raise ShapeError(f"cannot mix Z[zeta_{self.degree}] and Z[zeta_{other.degree}]")

    def __add__(self, other: 'CyclotomicInteger') -> 'CyclotomicInteger':
        self._same_ring(other)
        return CyclotomicInteger(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'CyclotomicInteger':
        return CyclotomicInteger(self.degree, tuple(-a for a in self.coeffs))

    def __sub__(self, other: 'CyclotomicInteger') -> 'CyclotomicInteger':
        return self + (-other)

    def __mul__(self, other: 'CyclotomicInteger') -> 'CyclotomicInteger':
        self._same_ring(other)
        phi = cyclotomic_polynomial(self.degree)
        lhs = Poly(list(reversed(self.coeffs)), _X, domain=ZZ)
        rhs = Poly(list(reversed(other.coeffs)), _X, domain=ZZ)
        return CyclotomicInteger(self.degree, _coeffs_low_first((lhs * rhs).rem(phi), phi.degree()))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_list(self) -> list:
        return list(self.coeffs)

    def render(self) -> str:
        """Human-readable form: a+bi for d=4, an integer for d=2, else a zeta polynomial."""
        if self.degree == 4:
            return _render_gaussian(*self.coeffs)
        if len(self.coeffs) == 1:
            return str(self.coeffs[0])
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                base = "z" if power == 1 else f"z^{power}"
                terms.append(base if c == 1 else ("-" + base if c == -1 else f"{c}{base}"))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __str__(self) -> str:
        return self.render()


def _render_gaussian(a: int, b: int) -> str:
    if b == 0:
        return str(a)
    imag = "i" if abs(b) == 1 else f"{abs(b)}i"
    if a == 0:
        return imag if b > 0 else "-" + imag
    return f"{a}{'+' if b > 0 else '-'}{imag}"


def gaussian_binomial(n: int, k: int, q: CyclotomicInteger) -> CyclotomicInteger:
    """
    The q-binomial [n choose k]_q evaluated in Z[zeta_d].

    Uses [n,k] = [n-1,k-1] + q^k [n-1,k].

    Args:
        n: Upper index (>= 0)
        k: Lower index
        q: The evaluation point

    Returns:
        CyclotomicInteger
    """
    d = q.degree
    zero = CyclotomicInteger.zero(d)
    one = CyclotomicInteger.from_int(d, 1)
    if k < 0 or k > n:
        return zero
    powers = [one]
    for _ in range(k):
        powers.append(powers[-1] * q)
    row = [one] + [zero] * k
    for _ in range(n):
        row = [one] + [row[j - 1] + powers[j] * row[j] for j in range(1, k + 1)]
    return row[k]
