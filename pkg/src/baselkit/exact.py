"""Exact rational backbone: Bernoulli and Genocchi numbers and friends.

Everything in this module is computed in exact arbitrary-precision rational
arithmetic (`fractions.Fraction`), so equality means equality.  The two
integer sequences are defined through their generating functions

    z / (e^z - 1) = sum B_n z^n / n!        (Bernoulli)
    z / (e^z + 1) = sum G_n z^n / n!        (Genocchi, halved normalization)

which force B_1 = -1/2 and G_1 = +1/2.  The value G_1 = -1/2 that is
sometimes quoted contradicts the defining constraint 2*G_1 + G_0 = 1; the
verification suite records this as erratum E1 instead of adopting it.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

__all__ = [
    "CAPACITY",
    "CapacityError",
    "PiPower",
    "bernoulli",
    "bernoulli_from_genocchi",
    "fraction_str",
    "genocchi",
    "genocchi_from_bernoulli",
    "parse_fraction",
    "rectified_even_bernoulli",
    "rectified_even_genocchi",
    "signed_factorial_integral",
    "term_log_integral",
    "zeta_even_exact",
]

#: Largest sequence index the memo tables will grow to.  The recursions are
#: O(n^2) with rapidly growing integers; indices past this cap raise
#: CapacityError instead of silently eating memory.
CAPACITY = 5000


class CapacityError(Exception):
    """A sequence index exceeded the configured capacity cap."""


def fraction_str(value: Fraction) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Inverse of :func:`fraction_str`."""
    return Fraction(text)


class _SequenceCache:
    """Write-once memo table for a recursively defined rational sequence.

    Entries are appended in index order under a lock and never mutated
    afterwards, so concurrent readers of already-computed indices are safe
    and results are bit-identical regardless of call order.
    """

    def __init__(self, grow: Callable[[int, list[Fraction]], Fraction]) -> None:
        self._values: list[Fraction] = []
        self._grow = grow
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"index must be non-negative, got {n}")
        if n > CAPACITY:
            raise CapacityError(f"index {n} exceeds the capacity cap {CAPACITY}")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._grow(len(self._values), self._values))
        return self._values[n]


def _grow_bernoulli(m: int, prior: list[Fraction]) -> Fraction:
    # Coefficient comparison in z = (e^z - 1) * sum B_n z^n/n! gives
    # sum_{k<n} C(n,k) B_k = [n == 1]; solved for B_{n-1} with n = m+1.
    if m == 0:
        return Fraction(1)
    if m % 2 == 1 and m > 1:
        return Fraction(0)
    acc = Fraction(0)
    binom = 1  # C(m+1, 0)
    for k in range(m):
        if prior[k]:
            acc += binom * prior[k]
        binom = binom * (m + 1 - k) // (k + 1)
    return -acc / (m + 1)


def _grow_genocchi(m: int, prior: list[Fraction]) -> Fraction:
    # From z = (e^z + 1) * sum G_n z^n/n!:  G_0 = 0, 2*G_1 + G_0 = 1, and
    # 2*G_n + sum_{k<n} C(n,k) G_k = 0 for n > 1.
    if m == 0:
        return Fraction(0)
    if m == 1:
        return Fraction(1, 2)
    if m % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    binom = 1  # C(m, 0)
    for k in range(m):
        if prior[k]:
            acc += binom * prior[k]
        binom = binom * (m - k) // (k + 1)
    return -acc / 2


_BERNOULLI = _SequenceCache(_grow_bernoulli)
_GENOCCHI = _SequenceCache(_grow_genocchi)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_0 = 1, B_1 = -1/2, odd B_n = 0 for n > 1)."""
    return _BERNOULLI.get(n)


def genocchi(n: int) -> Fraction:
    """Exact Genocchi number G_n of z/(e^z + 1) (G_0 = 0, G_1 = 1/2)."""
    return _GENOCCHI.get(n)


def genocchi_from_bernoulli(n: int) -> Fraction:
    """G_n computed through the cross relation G_n = -(2^n - 1) B_n."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return -(2**n - 1) * bernoulli(n)


def bernoulli_from_genocchi(n: int) -> Fraction:
    """B_n computed through the inverse relation B_n = G_n / (1 - 2^n), n >= 1."""
    if n < 1:
        raise ValueError("relation is undefined at n = 0 (division by 2^0 - 1)")
    return genocchi(n) / (1 - 2**n)


def rectified_even_bernoulli(n: int) -> Fraction:
    """Sign-straightened even Bernoulli number (-1)^(n-1) B_{2n}, positive for n >= 1."""
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    b = bernoulli(2 * n)
    return b if n % 2 == 1 else -b


def rectified_even_genocchi(n: int) -> Fraction:
    """Sign-straightened even Genocchi number (-1)^(n-1) G_{2n} = -(2^(2n)-1) * rectified B."""
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    g = genocchi(2 * n)
    return g if n % 2 == 1 else -g


@dataclass(frozen=True)
class PiPower:
    """Exact multiple of an even power of pi: ``coefficient * pi**exponent``."""

    coefficient: Fraction
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0 or self.exponent % 2 != 0:
            raise ValueError(f"exponent must be even and non-negative, got {self.exponent}")

    def to_float(self) -> float:
        return float(self.coefficient) * math.pi**self.exponent

    def to_json(self) -> dict:
        return {"coefficient": fraction_str(self.coefficient), "pi_exponent": self.exponent}

    def __str__(self) -> str:
        return f"{fraction_str(self.coefficient)}*pi^{self.exponent}"


def zeta_even_exact(n: int) -> PiPower:
    """Exact zeta(2n) as a rational multiple of pi^(2n).

    zeta(2n) = 2^(2n-1) / (2n)! * ((-1)^(n-1) B_{2n}) * pi^(2n); the rational
    coefficient is strictly positive.  zeta_even_exact(1) is exactly (1/6) pi^2.
    """
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    coeff = Fraction(2 ** (2 * n - 1), math.factorial(2 * n)) * rectified_even_bernoulli(n)
    return PiPower(coeff, 2 * n)


def term_log_integral(n: int) -> Fraction:
    """Exact value -1/(n+1)^2 of the moment integral of t^n * ln(t) over [0, 1]."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return Fraction(-1, (n + 1) ** 2)


def signed_factorial_integral(k: int) -> Fraction:
    """Exact value (-1)^k * k! of the integral of s^k * e^s over (-inf, 0].

    One integration by parts gives I_k = (-k) I_{k-1} with I_0 = 1.
    """
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    value = math.factorial(k)
    return Fraction(-value if k % 2 else value)
