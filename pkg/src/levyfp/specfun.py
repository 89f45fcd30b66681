"""Scheme constants and the special functions needed to build them.

The jump measure of a symmetric alpha-stable process carries a
normalization constant built from Gamma values, and the quadrature
correction for the singular kernel needs the Riemann zeta function on
the real axis left of 1, where the Dirichlet series does not converge.
Everything here is a cheap pure function evaluated a handful of times
per run, so clarity wins over speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "StabilityIndex",
    "gamma_fn",
    "riemann_zeta",
    "c_alpha",
    "mp_threshold",
]


@dataclass(frozen=True)
class StabilityIndex:
    """Stability exponent of the jump measure, restricted to (0, 2).

    The endpoints are excluded: alpha = 2 has no jump component and
    alpha = 0 has no kernel. Constructing an out-of-range value raises.
    """

    alpha: float

    def __post_init__(self) -> None:
        a = self.alpha
        if not (0.0 < a < 2.0) or a != a:
            raise ValueError(f"stability index must lie strictly in (0, 2), got {a!r}")


def _alpha_value(alpha: float | StabilityIndex) -> float:
    """Validate and unwrap a stability index given as float or StabilityIndex."""
    if isinstance(alpha, StabilityIndex):
        return alpha.alpha
    return StabilityIndex(float(alpha)).alpha


def gamma_fn(x: float) -> float:
    """Gamma function on the positive half line.

    Raises
    ------
    ValueError
        If ``x <= 0``. Only positive arguments occur in the kernel
        constant, so the analytic continuation is deliberately not
        exposed.
    """
    if not x > 0.0:
        raise ValueError(f"gamma_fn requires x > 0, got {x!r}")
    return math.gamma(x)


# Number of terms in the alternating (eta) series acceleration. The
# truncation error decays like (3 + sqrt(8))**-n, so 55 terms leave
# float64 roundoff as the only error source.
_BORWEIN_N = 55


@lru_cache(maxsize=None)
def _borwein_ratios(n: int) -> tuple[float, ...]:
    # Chebyshev-derived weights d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!),
    # kept exact with rational arithmetic; returned as (d_n - d_k) / d_n.
    term = Fraction(1, n)  # i = 0 value of (n+i-1)! 4^i / ((n-i)! (2i)!)
    partial = [term]
    for i in range(n):
        term = term * Fraction(4 * (n + i) * (n - i), (2 * i + 1) * (2 * i + 2))
        partial.append(partial[-1] + term)
    d = [n * p for p in partial]
    d_n = d[n]
    return tuple(float((d_n - d[k]) / d_n) for k in range(n))


def _zeta_alternating(s: float) -> float:
    # Accelerated alternating series, valid for s > 0 (and s != 1).
    n = _BORWEIN_N
    ratios = _borwein_ratios(n)
    acc = 0.0
    sign = 1.0
    for k in range(n):
        acc += sign * ratios[k] * (k + 1) ** (-s)
        sign = -sign
    return acc / (1.0 - 2.0 ** (1.0 - s))


# Stieltjes constants gamma_0 .. gamma_13 for the Laurent expansion
# zeta(s) = 1/(s-1) + sum_n (-1)^n gamma_n (s-1)^n / n!, used close to
# the pole where the alternating series loses digits to the small
# prefactor 1 - 2**(1-s).
_STIELTJES = (
    0.57721566490153286061,
    -0.072815845483676724861,
    -0.0096903631928723184845,
    0.0020538344203033458662,
    0.0023253700654673000575,
    0.00079332381730106270175,
    -0.00023876934543019960987,
    -0.00052728956705775104607,
    -0.0003521233538030395096,
    -0.000034394774418088048178,
    0.00020533281490906479468,
    0.00027018443954390352667,
    0.00016727291210514019335,
    -0.00002746380660376015886,
)


def _zeta_near_pole(s: float) -> float:
    u = s - 1.0
    acc = 0.0
    power = 1.0
    fact = 1.0
    for n, g in enumerate(_STIELTJES):
        if n > 0:
            power *= -u
            fact *= n
        acc += g * power / fact
    return 1.0 / u + acc


def riemann_zeta(s: float) -> float:
    """Riemann zeta on the real axis for s < 1.

    For 0 <= s < 1 an accelerated alternating series is summed; for
    s < 0 the functional equation maps the argument to 1 - s > 1 where
    the same series applies. This sidesteps the catastrophic
    cancellation a raw alternating sum suffers for negative s.

    Raises
    ------
    ValueError
        If ``s >= 1`` (the pole and the half line where the plain
        Dirichlet series would be the right tool).
    """
    s = float(s)
    if s >= 1.0 or s != s:
        raise ValueError(f"riemann_zeta is restricted to s < 1, got {s!r}")
    if s < 0.0:
        reflected = _zeta_alternating(1.0 - s)
        return (
            2.0**s
            * math.pi ** (s - 1.0)
            * math.sin(math.pi * s / 2.0)
            * math.gamma(1.0 - s)
            * reflected
        )
    if s > 0.75:
        return _zeta_near_pole(s)
    return _zeta_alternating(s)


def c_alpha(alpha: float | StabilityIndex) -> float:
    """Normalization constant of the symmetric stable jump measure.

    C_alpha = alpha * Gamma((1+alpha)/2) / (2**(1-alpha) * sqrt(pi) * Gamma(1-alpha/2)),
    the constant for which the jump integral has Fourier symbol -|xi|**alpha.
    """
    a = _alpha_value(alpha)
    return (
        a
        / (2.0 ** (1.0 - a) * math.sqrt(math.pi))
        * gamma_fn((1.0 + a) / 2.0)
        / gamma_fn(1.0 - a / 2.0)
    )


def mp_threshold(alpha: float | StabilityIndex, eps: float) -> float:
    """Largest ratio dt / h**alpha for which the explicit step is monotone.

    A forward Euler step of the pure-jump semi-discrete system keeps
    nonnegative data nonnegative (and bounded by its starting maximum)
    whenever dt / h**alpha stays below this value. It decreases from 1
    to 1/2 as alpha sweeps (0, 2) and scales like 1/eps.
    """
    a = _alpha_value(alpha)
    eps = float(eps)
    if not eps > 0.0:
        raise ValueError(f"mp_threshold requires eps > 0, got {eps!r}")
    return 1.0 / (2.0 * eps * c_alpha(a) * (1.0 + 1.0 / a - riemann_zeta(a - 1.0)))
