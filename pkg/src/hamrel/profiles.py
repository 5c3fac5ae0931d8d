"""Piecewise-linear coefficient profiles and their exact integrals.

The profile of a coefficient vector is the chord interpolant through the
points (k, N_k); the binomial envelope is the interpolant through
(k, C(n,k)).  These are diagnostic/plotting objects only; the fitting
pipeline consumes coefficient vectors directly.

Note on areas: the exact trapezoid integral over [0, n] is
``sum(values) - (v_0 + v_n)/2``, so a complementary pair of profiles built
from dual count vectors integrates to 2^n - 1 in total (each endpoint value
is halved by the chord rule), and the binomial envelope likewise integrates
to 2^n - 1, not 2^n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .polynomials import ExactCoeffVector, binomial_row


@dataclass(frozen=True)
class PiecewiseLinear:
    """Chord interpolant through integer knots (0, v_0) .. (n, v_n)."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise DomainError(f"expected {self.n + 1} knot values, got {len(self.values)}")

    def __call__(self, x):
        """Value at x in [0, n]; Fraction/int x is evaluated exactly."""
        if x < 0 or x > self.n:
            raise DomainError(f"x={x} outside [0, {self.n}]")
        k = min(int(x), self.n - 1)  # chord through (k, v_k) and (k+1, v_{k+1})
        v0, v1 = self.values[k], self.values[k + 1]
        return v0 + (v1 - v0) * (x - k)

    def integral(self) -> Fraction:
        """Exact trapezoid area over [0, n]."""
        v = self.values
        return Fraction(sum(v[k - 1] + v[k] for k in range(1, self.n + 1)), 2)

    def samples(self, count: int) -> list[tuple[float, float]]:
        """(x, value) pairs on a uniform grid of ``count`` points over [0, n]."""
        if count < 2:
            raise DomainError(f"grid needs at least 2 points, got {count}")
        step = self.n / (count - 1)
        return [(i * step, float(self(min(i * step, self.n)))) for i in range(count)]


def coefficient_profile(vec: ExactCoeffVector) -> PiecewiseLinear:
    """Profile through (k, N_k) with the value at x=0 pinned to 0."""
    return PiecewiseLinear(vec.n, (0,) + vec.coeffs[1:])


def binomial_envelope(n: int) -> PiecewiseLinear:
    """Profile through (k, C(n,k)); starts at C(n,0) = 1."""
    return PiecewiseLinear(n, binomial_row(n).values)
