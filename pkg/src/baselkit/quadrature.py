"""Numerical evaluation of the log-singular unit-interval integrals and the
limit representations (Riemann sums, log-products, dilogarithm series) that
share their closed forms.

The workhorse is a double-exponential (tanh-sinh) transform: nodes cluster
toward the endpoints fast enough that integrable logarithmic singularities
at t = 0 or t = 1 cost nothing, and the trapezoid sum converges roughly one
binary digit per node at each level.  Integrands receive each node both as a
distance from 0 and as a distance from 1, so values like ln(1 - t) stay
fully accurate where t rounds to 1.0 in binary64; the endpoints themselves
are never evaluated.

All results are binary64.  pi means the nearest binary64 to pi, so no claim
is made below about 1e-15.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "AccuracyError",
    "IntegralKind",
    "ProductKind",
    "QuadResult",
    "functional_eq_dilog",
    "functional_eq_inverse",
    "integrate",
    "product_form",
    "riemann_sum",
    "sample_monotonicity",
    "scaled_dilog",
    "scaled_dilog_derivative",
    "scaled_dilog_ode_residual",
    "series_integral_pair",
    "two_integral_residual",
]

_PI = math.pi
_TOL_MIN, _TOL_MAX = 1e-15, 1e-3
_MAX_LEVEL = 10
_T_MAX = 6.2  # abscissa at which the transformed node distance underflows


class IntegralKind(enum.Enum):
    """The four log-singular unit-interval integrands."""

    LOG_OVER_1MT = "log_over_1mt"    # ln(t) / (1 - t)
    LOG_OVER_1PT = "log_over_1pt"    # ln(t) / (1 + t)
    LOG1P_OVER_T = "log1p_over_t"    # ln(1 + t) / t
    LOG1M_OVER_T = "log1m_over_t"    # ln(1 - t) / t

    @property
    def closed_form(self) -> float:
        """Known exact value as the nearest binary64."""
        return _CLOSED_FORMS[self]


_CLOSED_FORMS = {
    IntegralKind.LOG_OVER_1MT: -(_PI * _PI) / 6.0,
    IntegralKind.LOG_OVER_1PT: -(_PI * _PI) / 12.0,
    IntegralKind.LOG1P_OVER_T: (_PI * _PI) / 12.0,
    IntegralKind.LOG1M_OVER_T: -(_PI * _PI) / 6.0,
}


class ProductKind(enum.Enum):
    """Which product limit to accumulate: factors (1 -+ k/n)^(1/k)."""

    MINUS = "minus"  # log-limit -pi^2/6
    PLUS = "plus"    # log-limit +pi^2/12

    @property
    def closed_form(self) -> float:
        if self is ProductKind.MINUS:
            return -(_PI * _PI) / 6.0
        return (_PI * _PI) / 12.0


@dataclass(frozen=True)
class QuadResult:
    """Quadrature value with an honest error estimate and evaluation count."""

    value: float
    err_estimate: float
    evaluations: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "err_estimate": self.err_estimate,
            "evaluations": self.evaluations,
        }


class AccuracyError(Exception):
    """Raised when the level cap is reached before the tolerance; carries the
    best result computed so far in ``best``."""

    def __init__(self, message: str, best: QuadResult) -> None:
        super().__init__(message)
        self.best = best


def _log_of(t: float, omt: float) -> float:
    # ln(t) from whichever representation of the node is exact
    return math.log(t) if t <= 0.5 else math.log1p(-omt)


def _log_of_complement(t: float, omt: float) -> float:
    # ln(1 - t), same idea mirrored
    return math.log(omt) if omt <= 0.5 else math.log1p(-t)


def _integrand(kind: IntegralKind) -> Callable[[float, float], float]:
    if kind is IntegralKind.LOG_OVER_1MT:
        return lambda t, omt: _log_of(t, omt) / omt
    if kind is IntegralKind.LOG_OVER_1PT:
        return lambda t, omt: _log_of(t, omt) / (1.0 + t)
    if kind is IntegralKind.LOG1P_OVER_T:
        return lambda t, omt: math.log1p(t) / t
    return lambda t, omt: _log_of_complement(t, omt) / t


def _check_tol(tol: float) -> None:
    if not (_TOL_MIN <= tol <= _TOL_MAX):
        raise ValueError(f"tol must lie in [{_TOL_MIN}, {_TOL_MAX}], got {tol}")


def _tanh_sinh_unit(f: Callable[[float, float], float], tol: float) -> QuadResult:
    """Integrate f over (0, 1); f(t, 1-t) with both arguments in (0, 1)."""
    evaluations = 0
    previous = None
    value = 0.0
    err = math.inf
    for level in range(_MAX_LEVEL + 1):
        h = 0.5**level
        total = (_PI / 4.0) * f(0.5, 0.5)
        evaluations += 1
        k = 1
        while True:
            t = k * h
            if t > _T_MAX:
                break
            u = 0.5 * _PI * math.sinh(t)
            # node distance to the near endpoint: q/2 with q = 1 - tanh(u)
            q = 2.0 * math.exp(-2.0 * u) if 2.0 * u > 700.0 else 2.0 / (math.exp(2.0 * u) + 1.0)
            if q == 0.0:
                break
            sech_u = 1.0 / math.cosh(u)
            weight = (_PI / 4.0) * math.cosh(t) * sech_u * sech_u
            if weight == 0.0:
                break
            half_q = 0.5 * q
            total += weight * (f(1.0 - half_q, half_q) + f(half_q, 1.0 - half_q))
            evaluations += 2
            k += 1
        value = h * total
        if previous is not None:
            err = abs(value - previous)
            floor = abs(value) * 2.0**-52 or 5e-324
            if err <= tol * max(1.0, abs(value)):
                return QuadResult(value, max(err, floor), evaluations)
        previous = value
    best = QuadResult(value, err, evaluations)
    raise AccuracyError(f"no convergence to tol={tol} within level cap {_MAX_LEVEL}", best)


def _integrate_smooth(g: Callable[[float], float], a: float, b: float, tol: float) -> float:
    """Tanh-sinh over [a, b] for integrands without interior singularities."""
    if a == b:
        return 0.0
    if a > b:
        return -_integrate_smooth(g, b, a, tol)
    width = b - a

    def f(t: float, omt: float) -> float:
        x = a + width * t if t <= 0.5 else b - width * omt
        return g(x)

    return width * _tanh_sinh_unit(f, tol).value


def integrate(kind: IntegralKind, tol: float = 1e-12) -> QuadResult:
    """Evaluate one of the four log-singular integrals on [0, 1].

    Parameters
    ----------
    kind : IntegralKind
        Which integrand to evaluate.
    tol : float
        Requested tolerance, within [1e-15, 1e-3].  The returned
        ``err_estimate`` is the last inter-level difference, an honest
        (usually generous) bound for a converged tanh-sinh sum.

    Raises
    ------
    AccuracyError
        If the level cap is hit first; the exception carries the best result.
    """
    _check_tol(tol)
    return _tanh_sinh_unit(_integrand(kind), tol)


def two_integral_residual(tol: float = 1e-12) -> float:
    """|I[ln t/(1-t)] - 2 I[ln t/(1+t)]|; the identity makes this ~0."""
    lhs = integrate(IntegralKind.LOG_OVER_1MT, tol).value
    rhs = integrate(IntegralKind.LOG_OVER_1PT, tol).value
    return abs(lhs - 2.0 * rhs)


_RIEMANN_KINDS = (
    IntegralKind.LOG_OVER_1MT,
    IntegralKind.LOG1M_OVER_T,
    IntegralKind.LOG_OVER_1PT,
)


def riemann_sum(kind: IntegralKind, n: int) -> float:
    """Left-out-endpoints Riemann sum (1/n) sum_{k=1..n-1} f(k/n).

    Monotonicity of the integrand makes this converge to the improper
    integral even though f is unbounded at an endpoint.
    """
    if kind not in _RIEMANN_KINDS:
        raise ValueError(f"Riemann-sum form is only defined for {[k.value for k in _RIEMANN_KINDS]}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    f = _integrand(kind)
    return math.fsum(f(k / n, (n - k) / n) for k in range(1, n)) / n


def sample_monotonicity(kind: IntegralKind, n: int) -> int:
    """Direction of f on the sample grid k/n: +1 non-decreasing, -1
    non-increasing, 0 neither."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    f = _integrand(kind)
    values = [f(k / n, (n - k) / n) for k in range(1, n)]
    diffs = [b - a for a, b in zip(values, values[1:])]
    if all(d >= 0.0 for d in diffs):
        return 1
    if all(d <= 0.0 for d in diffs):
        return -1
    return 0


def product_form(kind: ProductKind, n: int) -> float:
    """Log of the partial product prod_{k=1..n-1} (1 -+ k/n)^(1/k).

    Accumulated as sum (1/k) ln(1 -+ k/n) to dodge underflow; analytically
    identical to taking the log of the product.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if kind is ProductKind.MINUS:
        return math.fsum(
            (math.log((n - k) / n) if 2 * k > n else math.log1p(-(k / n))) / k
            for k in range(1, n)
        )
    return math.fsum(math.log1p(k / n) / k for k in range(1, n))


# ---------------------------------------------------------------------------
# dilogarithm-type kernels
# ---------------------------------------------------------------------------


def _unit_log_kernel(y: float, tol: float) -> float:
    """integral over [0, y] of ln(1 - t)/t dt, for y in [-1, 1].

    Rescaled to [0, 1] via t = y*u (the 1/t and dt factors of y cancel);
    near u = 1 the argument 1 - y*u is rebuilt as (1 - y) + y*(1 - u) so
    the y = 1 endpoint singularity is resolved exactly.
    """
    if y == 0.0:
        return 0.0
    if y > 0.0:
        one_minus_y = 1.0 - y

        def f(u: float, omu: float) -> float:
            if u <= 0.5:
                return math.log1p(-y * u) / u
            return math.log(one_minus_y + y * omu) / u
    else:

        def f(u: float, omu: float) -> float:
            return math.log1p(-y * u) / u

    return _tanh_sinh_unit(f, tol).value


def functional_eq_dilog(x: float, tol: float = 1e-12) -> float:
    """Residual |h(x) + h(-x) - h(x^2)/2| with h(x) = int_0^x ln(1-t)/t dt."""
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x}")
    _check_tol(tol)
    lhs = _unit_log_kernel(x, tol) + _unit_log_kernel(-x, tol)
    return abs(lhs - 0.5 * _unit_log_kernel(x * x, tol))


def functional_eq_inverse(x: float, tol: float = 1e-12) -> float:
    """Residual |h(x) + h(1/x) - (ln x)^2 / 2| with h(x) = int_1^x ln t/(1+t) dt.

    The identity is symmetric under x <-> 1/x; the argument is canonicalized
    to max(x, 1/x) first so the two residuals are computed identically.
    """
    if x <= 0.0:
        raise ValueError(f"x must be positive, got {x}")
    _check_tol(tol)
    if x < 1.0:
        x = 1.0 / x

    def g(t: float) -> float:
        return math.log(t) / (1.0 + t)

    lhs = _integrate_smooth(g, 1.0, x, tol) + _integrate_smooth(g, 1.0, 1.0 / x, tol)
    lx = math.log(x)
    return abs(lhs - 0.5 * lx * lx)


def scaled_dilog(x: float, mode: str = "series", tol: float = 1e-12) -> float:
    """sum_{n>=1} (2x)^n / n^2 for |x| <= 1/2, by series or by quadrature.

    The integral route evaluates -int_0^x ln(1-2t)/t dt.  The series route
    sums directly; stopping rules per regime of q = 2x:

    * |q| < 1: stop when the geometric tail bound
      |q|^(N+1) / ((N+1)^2 (1-|q|)) drops below tol.
    * q = +1: partial sum to N ~ 1/sqrt(2 tol) plus the telescoping-bracket
      midpoint (1/N + 1/(N+1))/2; the tail lies inside that bracket, so the
      added estimate is off by at most the half-width 1/(2N(N+1)) <= tol.
    * q = -1: alternating; partial sum to N ~ (2/tol)^(1/3) plus half the
      next term, with error at most (a_{N+1} - a_{N+2})/2 by convexity.
    """
    if not -0.5 <= x <= 0.5:
        raise ValueError(f"x must lie in [-1/2, 1/2], got {x}")
    _check_tol(tol)
    if mode == "integral":
        return -_unit_log_kernel(2.0 * x, tol)
    if mode != "series":
        raise ValueError(f"mode must be 'series' or 'integral', got {mode!r}")
    q = 2.0 * x
    if q == 0.0:
        return 0.0
    if q == 1.0:
        n_terms = math.ceil(1.0 / math.sqrt(2.0 * tol))
        partial = math.fsum(1.0 / (n * n) for n in range(1, n_terms + 1))
        return partial + 0.5 * (1.0 / n_terms + 1.0 / (n_terms + 1))
    if q == -1.0:
        n_terms = math.ceil((2.0 / tol) ** (1.0 / 3.0))
        partial = math.fsum((-1.0) ** n / (n * n) for n in range(1, n_terms + 1))
        correction = (-1.0) ** (n_terms + 1) / (2.0 * (n_terms + 1) ** 2)
        return partial + correction
    terms = []
    power = 1.0
    n = 1
    aq = abs(q)
    while True:
        power *= q
        terms.append(power / (n * n))
        bound = aq ** (n + 1) / ((n + 1) ** 2 * (1.0 - aq))
        if bound <= tol:
            break
        n += 1
    return math.fsum(terms)


def scaled_dilog_derivative(x: float) -> float:
    """Closed-form derivative -ln(1 - 2x)/x on |x| < 1/2, with value 2 at 0."""
    if not -0.5 < x < 0.5:
        raise ValueError(f"x must lie in (-1/2, 1/2), got {x}")
    if x == 0.0:
        return 2.0
    return -math.log1p(-2.0 * x) / x


def scaled_dilog_ode_residual(x: float, n_terms: int = 60) -> float:
    """Residual |y + x y' - 2/(1-2x)| for the truncated series y = S'(x).

    Both y and y' come from term-wise differentiation of the first
    ``n_terms`` series terms, so the residual is the truncation error of a
    geometric tail and decays like (2|x|)^n_terms.
    """
    if not -0.5 < x < 0.5:
        raise ValueError(f"x must lie in (-1/2, 1/2), got {x}")
    if n_terms < 2:
        raise ValueError(f"need n_terms >= 2, got {n_terms}")
    s1 = 0.0  # sum 2^n x^(n-1) / n        = S'
    s2 = 0.0  # sum 2^n (n-1) x^(n-2) / n  = S''
    power = 1.0  # 2^n x^(n-2) tracked incrementally, n >= 2
    for n in range(1, n_terms + 1):
        if n == 1:
            s1 += 2.0
            power = 4.0
        else:
            s1 += power * x / n
            s2 += power * (n - 1) / n
            power *= 2.0 * x
    return abs(s1 + x * s2 - 2.0 / (1.0 - 2.0 * x))


def series_integral_pair(
    r: float, a: float, b: float, tol: float = 1e-12
) -> tuple[float, float]:
    """Two independent evaluations of sum_{n>=1} r^n / (a n + b).

    Returns ``(series_value, integral_value)`` where the integral form is
    (1/a) int_0^1 r u^(b/a) / (1 - r u) du.  Valid for r in [-1, 1), a > 0,
    b >= 0.  The series stops on the geometric tail bound
    |r|^(N+1) / ((a(N+1)+b)(1-|r|)); at r = -1, where that bound is vacuous,
    it switches to the alternating midpoint rule (partial sum plus half the
    next term, error below (a_{N+1} - a_{N+2})/2).
    """
    if not -1.0 <= r < 1.0:
        raise ValueError(f"r must lie in [-1, 1), got {r}")
    if a <= 0.0:
        raise ValueError(f"a must be positive, got {a}")
    if b < 0.0:
        raise ValueError(f"b must be non-negative, got {b}")
    _check_tol(tol)

    if r == 0.0:
        series = 0.0
    elif r == -1.0:
        n_terms = math.ceil(1.0 / math.sqrt(a * tol))
        partial = math.fsum((-1.0) ** n / (a * n + b) for n in range(1, n_terms + 1))
        series = partial + (-1.0) ** (n_terms + 1) / (2.0 * (a * (n_terms + 1) + b))
    else:
        terms = []
        power = 1.0
        n = 1
        ar = abs(r)
        while True:
            power *= r
            terms.append(power / (a * n + b))
            bound = ar ** (n + 1) / ((a * (n + 1) + b) * (1.0 - ar))
            if bound <= tol:
                break
            n += 1
        series = math.fsum(terms)

    exponent = b / a
    if r > 0.0:
        one_minus_r = 1.0 - r

        def f(u: float, omu: float) -> float:
            return r * u**exponent / (one_minus_r + r * omu)
    else:

        def f(u: float, omu: float) -> float:
            return r * u**exponent / (1.0 - r * u)

    integral = _tanh_sinh_unit(f, tol).value / a
    return series, integral
