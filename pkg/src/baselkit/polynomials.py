"""Exact rational polynomials and coefficient-level identity certificates.

Bernoulli polynomials B_n(x) and the halved Genocchi polynomials G_n(x) are
built from their defining sums

    B_n(x) = sum_k C(n,k) B_{n-k} x^k,    G_n(x) = sum_k C(n,k) G_{n-k} x^k,

and every identity check below compares polynomials coefficient by
coefficient in exact arithmetic, so a passing certificate is a proof for
that degree, not a sampled approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .exact import bernoulli, fraction_str, genocchi

__all__ = [
    "Certificate",
    "RationalPolynomial",
    "bernoulli_polynomial",
    "check_addition_recurrence",
    "check_calculus",
    "check_construction_orderings",
    "check_halving",
    "check_reflection",
    "check_special_values",
    "genocchi_polynomial",
    "power_sum_check",
]

_Scalar = Union[int, Fraction]


class RationalPolynomial:
    """Dense polynomial over Fraction; index = degree, no trailing zeros."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[_Scalar] = ()) -> None:
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, coefficient: _Scalar, degree: int) -> "RationalPolynomial":
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial([-c for c in self._coeffs])

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other: "RationalPolynomial | _Scalar") -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self._coeffs])
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs))
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, x: _Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def antiderivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            [Fraction(0)] + [c / (k + 1) for k, c in enumerate(self._coeffs)]
        )

    def integral_unit(self) -> Fraction:
        """Exact definite integral over [0, 1]."""
        return sum((c / (k + 1) for k, c in enumerate(self._coeffs)), Fraction(0))

    def compose_affine(self, a: _Scalar, b: _Scalar) -> "RationalPolynomial":
        """Exact composition p(a*x + b), expanded at the coefficient level."""
        linear = RationalPolynomial([b, a])
        acc = RationalPolynomial()
        for c in reversed(self._coeffs):
            acc = acc * linear + RationalPolynomial([c])
        return acc

    def to_string_list(self) -> list[str]:
        """Serialize as "p/q" strings, constant term first; zero is ["0"]."""
        if not self._coeffs:
            return ["0"]
        return [fraction_str(c) for c in self._coeffs]

    def __repr__(self) -> str:
        if not self._coeffs:
            return "RationalPolynomial(0)"
        parts = [f"{fraction_str(c)}*x^{k}" if k else fraction_str(c)
                 for k, c in enumerate(self._coeffs) if c]
        return "RationalPolynomial(" + " + ".join(parts) + ")"


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(x); degree exactly n, leading coefficient 1, constant term B_n."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return RationalPolynomial([math.comb(n, k) * bernoulli(n - k) for k in range(n + 1)])


def genocchi_polynomial(n: int) -> RationalPolynomial:
    """G_n(x); G_n(0) = G_n, and degree <= n-1 for n >= 1 since G_0 = 0."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return RationalPolynomial([math.comb(n, k) * genocchi(n - k) for k in range(n + 1)])


def _genocchi_polynomial_reversed(n: int) -> RationalPolynomial:
    # same defining sum with the binomial roles swapped: sum_k C(n,k) G_k x^(n-k)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] += math.comb(n, k) * genocchi(k)
    return RationalPolynomial(coeffs)


@dataclass(frozen=True)
class Certificate:
    """Outcome of one exact identity check.

    ``first_mismatch`` is the lowest differing coefficient index when a
    polynomial comparison fails (None for value comparisons and passes);
    ``detail`` carries the offending values for debugging.
    """

    name: str
    passed: bool
    detail: str = ""
    first_mismatch: int | None = None


def _poly_certificate(name: str, lhs: RationalPolynomial, rhs: RationalPolynomial) -> Certificate:
    if lhs == rhs:
        return Certificate(name, True)
    top = max(lhs.degree, rhs.degree)
    for k in range(top + 1):
        if lhs.coefficient(k) != rhs.coefficient(k):
            detail = (
                f"coefficient {k}: lhs={fraction_str(lhs.coefficient(k))} "
                f"rhs={fraction_str(rhs.coefficient(k))}"
            )
            return Certificate(name, False, detail, k)
    return Certificate(name, True)  # unreachable unless __eq__ disagrees


def _value_certificate(name: str, lhs: Fraction, rhs: Fraction) -> Certificate:
    if lhs == rhs:
        return Certificate(name, True)
    return Certificate(name, False, f"lhs={fraction_str(lhs)} rhs={fraction_str(rhs)}")


def check_reflection(n: int) -> Certificate:
    """G_n(1 - x) = (-1)^(n+1) G_n(x), exactly."""
    g = genocchi_polynomial(n)
    lhs = g.compose_affine(-1, 1)
    rhs = g * (1 if (n + 1) % 2 == 0 else -1)
    return _poly_certificate(f"reflection_n{n}", lhs, rhs)


_HALVING_VARIANTS = ("ii", "iii", "iv")


def check_halving(n: int, variant: str) -> Certificate:
    """Argument-halving identities linking G_n(x) and B_n(x).

    ii : G_n(x) = B_n(x) - 2^n B_n(x/2)
    iii: G_n(x) = 2^n B_n((x+1)/2) - B_n(x)
    iv : B_n(x) = 2^(n-1) [B_n((x+1)/2) + B_n(x/2)]
    """
    if variant not in _HALVING_VARIANTS:
        raise ValueError(f"variant must be one of {_HALVING_VARIANTS}, got {variant!r}")
    b = bernoulli_polynomial(n)
    half = Fraction(1, 2)
    b_half = b.compose_affine(half, 0)
    b_shift_half = b.compose_affine(half, half)
    name = f"halving_{variant}_n{n}"
    if variant == "ii":
        return _poly_certificate(name, genocchi_polynomial(n), b - b_half * Fraction(2**n))
    if variant == "iii":
        return _poly_certificate(name, genocchi_polynomial(n), b_shift_half * Fraction(2**n) - b)
    return _poly_certificate(name, b, (b_shift_half + b_half) * Fraction(2) ** (n - 1))


def check_addition_recurrence(k: int) -> Certificate:
    """G_k(x+1) + G_k(x) = k x^(k-1), exactly, for k >= 2."""
    if k < 2:
        raise ValueError(f"identity is stated for k >= 2, got {k}")
    g = genocchi_polynomial(k)
    lhs = g.compose_affine(1, 1) + g
    rhs = RationalPolynomial.monomial(k, k - 1)
    return _poly_certificate(f"addition_recurrence_k{k}", lhs, rhs)


def power_sum_check(k: int, n: int) -> Certificate:
    """G_k(1) + 2 sum_{i=2..n} G_k(i) + G_k(n+1) = k sum_{i=1..n} i^(k-1)."""
    if k < 2:
        raise ValueError(f"requires k >= 2, got {k}")
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    g = genocchi_polynomial(k)
    lhs = g.evaluate(1) + 2 * sum((g.evaluate(i) for i in range(2, n + 1)), Fraction(0))
    lhs += g.evaluate(n + 1)
    rhs = Fraction(k * sum(i ** (k - 1) for i in range(1, n + 1)))
    return _value_certificate(f"power_sum_k{k}_n{n}", lhs, rhs)


def check_special_values(n: int) -> dict[str, Certificate]:
    """Special-argument evaluations tied to the halving identities, for n >= 1."""
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    b_n = bernoulli_polynomial(n)
    b_2n = bernoulli_polynomial(2 * n)
    g_2n = genocchi_polynomial(2 * n)
    checks = {
        "b_half_vs_quarter": (b_2n.evaluate(half), Fraction(4) ** n * b_2n.evaluate(quarter)),
        "g_half_zero": (g_2n.evaluate(half), Fraction(0)),
        "b_half_formula": (b_n.evaluate(half), (Fraction(2) ** (1 - n) - 1) * bernoulli(n)),
        "b_quarter_formula": (
            b_2n.evaluate(quarter),
            Fraction(2) ** (-2 * n) * (Fraction(2) ** (1 - 2 * n) - 1) * bernoulli(2 * n),
        ),
        "g_b_relation": (genocchi(n), (1 - Fraction(2) ** n) * bernoulli(n)),
    }
    return {
        key: _value_certificate(f"{key}_n{n}", lhs, rhs) for key, (lhs, rhs) in checks.items()
    }


def check_calculus(n: int) -> dict[str, Certificate]:
    """Derivative and unit-interval integral relations of G_n(x), for n >= 1.

    G_n'(x) = n G_{n-1}(x) and the integral of G_n over [0, 1] equals
    -2 G_{n+1} / (n+1).
    """
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    g = genocchi_polynomial(n)
    derivative = _poly_certificate(
        f"derivative_n{n}", g.derivative(), genocchi_polynomial(n - 1) * n
    )
    integral = _value_certificate(
        f"unit_integral_n{n}", g.integral_unit(), Fraction(-2, n + 1) * genocchi(n + 1)
    )
    return {"derivative": derivative, "unit_integral": integral}


def check_construction_orderings(n: int) -> Certificate:
    """Self-test: both orderings of the defining sum build the same G_n(x)."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return _poly_certificate(
        f"construction_orderings_n{n}", genocchi_polynomial(n), _genocchi_polynomial_reversed(n)
    )
