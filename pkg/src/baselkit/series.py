"""Partial-sum engines and divergent-series diagnostics.

Three families live here:

* exact partial sums of sum 1/n^2 and its alternating sibling, with the
  classical telescoping / alternating tail bounds as testable guarantees;
* the bisection refinement of 1/sin^2(x) into shifted-parabola terms,
  together with its centered partial-fraction remainder (which stays inside
  (0, 2^-n));
* the two alternating series over rectified Bernoulli / Genocchi numbers.
  Those series diverge factorially, so they are treated as asymptotic
  expansions: the report records partial sums, the optimal truncation point
  (smallest nonzero term), and a regularized target obtained by quadrature
  of the defining integral, never a literal sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import CapacityError, bernoulli, fraction_str, genocchi
from .quadrature import IntegralKind, integrate

__all__ = [
    "BisectionReport",
    "SeriesReport",
    "bisection_report",
    "eta2_partial",
    "eta2_partial_float",
    "regularized_target",
    "asymptotic_report",
    "zeta2_partial",
    "zeta2_partial_float",
]

#: Exact-mode cap; quadratic-size denominators make larger N pointless.
EXACT_PARTIAL_CAP = 10_000

_WHICH = ("bernoulli", "genocchi")


def _balanced_sum(terms: list[Fraction]) -> Fraction:
    # pairwise merge keeps the gcd work balanced instead of quadratic
    while len(terms) > 1:
        terms = [
            terms[i] + terms[i + 1] if i + 1 < len(terms) else terms[i]
            for i in range(0, len(terms), 2)
        ]
    return terms[0]


def zeta2_partial(n: int) -> Fraction:
    """Exact sum_{k<=n} 1/k^2; the tail satisfies 0 < zeta(2) - S_n < 1/n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > EXACT_PARTIAL_CAP:
        raise CapacityError(f"exact mode capped at {EXACT_PARTIAL_CAP}; use the float view")
    return _balanced_sum([Fraction(1, k * k) for k in range(1, n + 1)])


def zeta2_partial_float(n: int) -> float:
    """Float view of the same partial sum, exactly rounded, any n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return math.fsum(1.0 / (k * k) for k in range(1, n + 1))


def eta2_partial(n: int) -> Fraction:
    """Exact alternating sum_{k<=n} (-1)^(k-1)/k^2; |pi^2/12 - S_n| < 1/(n+1)^2."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > EXACT_PARTIAL_CAP:
        raise CapacityError(f"exact mode capped at {EXACT_PARTIAL_CAP}; use the float view")
    return _balanced_sum(
        [Fraction(1 if k % 2 else -1, k * k) for k in range(1, n + 1)]
    )


def eta2_partial_float(n: int) -> float:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return math.fsum((-1.0) ** (k - 1) / (k * k) for k in range(1, n + 1))


@dataclass(frozen=True)
class BisectionReport:
    """Snapshot of the 1/sin^2 bisection refinement at one (x, level)."""

    x: float
    level: int
    bisection_value: float
    exact_value: float
    e_n_bound: float
    e_n_measured: float
    partial_fraction_value: float
    truncation_k: int

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "level": self.level,
            "bisection_value": self.bisection_value,
            "exact_value": self.exact_value,
            "e_n_bound": self.e_n_bound,
            "e_n_measured": self.e_n_measured,
            "partial_fraction_value": self.partial_fraction_value,
            "truncation_k": self.truncation_k,
        }


def bisection_report(x: float, level: int, pf_terms: int = 10_000) -> BisectionReport:
    """Refine 1/sin^2(x) by repeated argument halving and compare routes.

    ``bisection_value`` is 4^-n sum_{k<2^n} 1/sin^2((k pi + x)/2^n), which
    equals 1/sin^2(x) identically.  ``e_n_measured`` is the remainder of the
    centered 2^n-term partial-fraction sum, bounded by (0, 2^-n) on
    (0, pi/2].  ``partial_fraction_value`` truncates the full two-sided
    expansion at ``pf_terms`` and compensates the tail with its integral
    estimate 2/(pi^2 K).
    """
    if not (1e-9 < x < math.pi - 1e-9):
        raise ValueError(f"x must lie in (0, pi) away from the poles, got {x}")
    if not 0 <= level <= 20:
        raise ValueError(f"level must lie in 0..20, got {level}")
    if pf_terms < 1:
        raise ValueError(f"need pf_terms >= 1, got {pf_terms}")

    scale = 2**level
    bisection = math.fsum(
        1.0 / math.sin((k * math.pi + x) / scale) ** 2 for k in range(scale)
    ) / (scale * scale)
    exact = 1.0 / math.sin(x) ** 2

    half = scale // 2
    centered_indices = range(-half, half) if level >= 1 else range(0, 1)
    centered = math.fsum(1.0 / (x + k * math.pi) ** 2 for k in centered_indices)

    tail = 2.0 / (math.pi * math.pi * pf_terms)
    partial_fraction = (
        1.0 / (x * x)
        + math.fsum(
            1.0 / (x + k * math.pi) ** 2 + 1.0 / (x - k * math.pi) ** 2
            for k in range(1, pf_terms + 1)
        )
        + tail
    )

    return BisectionReport(
        x=x,
        level=level,
        bisection_value=bisection,
        exact_value=exact,
        e_n_bound=0.5**level,
        e_n_measured=exact - centered,
        partial_fraction_value=partial_fraction,
        truncation_k=pf_terms,
    )


@dataclass(frozen=True)
class SeriesReport:
    """Diagnostics for one of the alternating Bernoulli/Genocchi series.

    ``smallest_term_index`` indexes ``terms`` (0-based) at the smallest
    nonzero magnitude, taking the last such position so structural zero
    terms never masquerade as the optimal truncation point.
    ``optimal_estimate`` is the partial sum truncated just before it and
    ``bracket_average`` averages the two partial sums that bracket it.
    """

    which: str
    terms: tuple[Fraction, ...]
    partial_sums: tuple[Fraction, ...]
    smallest_term_index: int
    optimal_estimate: float
    bracket_average: float
    regularized_target: float
    classically_convergent: bool

    def to_json(self) -> dict:
        return {
            "which": self.which,
            "terms": [fraction_str(t) for t in self.terms],
            "terms_float": [float(t) for t in self.terms],
            "partial_sums": [fraction_str(s) for s in self.partial_sums],
            "partial_sums_float": [float(s) for s in self.partial_sums],
            "smallest_term_index": self.smallest_term_index,
            "optimal_estimate": self.optimal_estimate,
            "bracket_average": self.bracket_average,
            "regularized_target": self.regularized_target,
            "classically_convergent": self.classically_convergent,
        }


def regularized_target(which: str, tol: float = 1e-12) -> float:
    """Value assigned to the divergent series by its defining integral.

    ``bernoulli``: -I[ln t/(1-t)] - 3/2 (= pi^2/6 - 3/2).
    ``genocchi`` : -I[ln t/(1+t)]       (= pi^2/12).
    """
    if which not in _WHICH:
        raise ValueError(f"which must be one of {_WHICH}, got {which!r}")
    if which == "bernoulli":
        return -integrate(IntegralKind.LOG_OVER_1MT, tol).value - 1.5
    return -integrate(IntegralKind.LOG_OVER_1PT, tol).value


def asymptotic_report(which: str, m_max: int, tol: float = 1e-12) -> SeriesReport:
    """Partial-sum diagnostics for the two factorially divergent series.

    ``bernoulli``: terms B_{2m}, m = 1..m_max (the alternating signs of the
    rectified sequence cancel against the sign straightening).
    ``genocchi``: terms (-1)^(n-1) G_n, n = 1..m_max, zeros included.
    """
    if which not in _WHICH:
        raise ValueError(f"which must be one of {_WHICH}, got {which!r}")
    if m_max < 1:
        raise ValueError(f"need m_max >= 1, got {m_max}")
    if m_max > 40:
        raise CapacityError(f"m_max capped at 40, got {m_max}")

    if which == "bernoulli":
        terms = [bernoulli(2 * m) for m in range(1, m_max + 1)]
    else:
        terms = [genocchi(n) if n % 2 else -genocchi(n) for n in range(1, m_max + 1)]

    partial_sums: list[Fraction] = []
    acc = Fraction(0)
    for t in terms:
        acc += t
        partial_sums.append(acc)

    nonzero = [(abs(t), i) for i, t in enumerate(terms) if t]
    smallest = min(nonzero, key=lambda pair: (pair[0], -pair[1]))[1]
    before = float(partial_sums[smallest - 1]) if smallest >= 1 else 0.0
    at = float(partial_sums[smallest])

    return SeriesReport(
        which=which,
        terms=tuple(terms),
        partial_sums=tuple(partial_sums),
        smallest_term_index=smallest,
        optimal_estimate=before,
        bracket_average=0.5 * (before + at),
        regularized_target=regularized_target(which, tol),
        classically_convergent=False,
    )
