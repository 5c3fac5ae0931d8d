"""Coefficient-wise lower/upper bound vectors of Stanley type.

Both vectors pin the known coefficients N_l, N_{l+1}, N_{n-w-1}, N_{n-w} and
the exact binomial tail, and fill the interior by binomial scaling: the lower
vector scales N_{l+1} by C(n,i)/C(n,l+1), the upper one scales N_{n-w-1} by
C(n,i)/C(n,n-w-1).  Scaled entries are rounded half-to-even; the exact
rationals remain available through ``scaled_entry`` for verification.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateDimensionsError, InconsistentAnchorsError
from .polynomials import ExactCoeffVector, HammockDims, binomial_row, eval_nform


@dataclass(frozen=True)
class BoundsPair:
    """Integer bound vectors lb_k <= N_k <= ub_k for one hammock."""

    dims: HammockDims
    lb: tuple[int, ...]
    ub: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.dims.n

    def lb_vector(self) -> ExactCoeffVector:
        return ExactCoeffVector(self.n, self.lb, self.dims)

    def ub_vector(self) -> ExactCoeffVector:
        return ExactCoeffVector(self.n, self.ub, self.dims)


def scaled_entry(anchor: int, anchor_k: int, i: int, n: int) -> Fraction:
    """Exact rational interior entry: anchor * C(n,i) / C(n,anchor_k)."""
    row = binomial_row(n)
    return Fraction(anchor * row[i], row[anchor_k])


def stanley_bounds(dims: HammockDims, n_l: int, n_l1: int,
                   n_nw1: int, n_nw: int) -> BoundsPair:
    """Build the bound pair from the four known coefficients.

    ``n_l`` and ``n_l1`` are N_l and N_{l+1}; ``n_nw1`` and ``n_nw`` are
    N_{n-w-1} and N_{n-w}.
    """
    l, w, n = dims.l, dims.w, dims.n
    if n - w - l < 2:
        raise DegenerateDimensionsError(f"n-w-l={n - w - l} < 2 for dims {dims}")
    row = binomial_row(n)
    anchor_at = {l: n_l, l + 1: n_l1, n - w - 1: n_nw1, n - w: n_nw}
    if len(anchor_at) < 4 and not (n - w - 1 == l + 1 and n_l1 == n_nw1):
        raise InconsistentAnchorsError(
            f"overlapping anchor positions disagree: N_(l+1)={n_l1}, N_(n-w-1)={n_nw1}"
        )
    if not 0 < n_l <= n_l1:
        raise InconsistentAnchorsError(f"need 0 < N_l <= N_(l+1), got {n_l}, {n_l1}")
    if not 0 < n_nw1 <= row[n - w - 1] or not 0 < n_nw <= row[w]:
        raise InconsistentAnchorsError("tail anchors exceed their binomial ceilings")
    for k, v in anchor_at.items():
        if v > row[k]:
            raise InconsistentAnchorsError(f"anchor {v} at k={k} exceeds C({n},{k})={row[k]}")

    lb = [0] * (n + 1)
    ub = [0] * (n + 1)
    for k in range(n - w + 1, n + 1):
        lb[k] = ub[k] = row[k]
    for i in range(l + 1, n - w - 1):
        lb[i] = round(scaled_entry(n_l1, l + 1, i, n))
    for i in range(l + 2, n - w):
        ub[i] = round(scaled_entry(n_nw1, n - w - 1, i, n))
    for k, v in anchor_at.items():
        lb[k] = v
        ub[k] = v
    ub[l + 1] = n_l1
    for k in range(n + 1):
        if lb[k] > ub[k]:
            raise InconsistentAnchorsError(
                f"lower bound {lb[k]} exceeds upper bound {ub[k]} at k={k}"
            )
    return BoundsPair(dims, tuple(lb), tuple(ub))


def bound_polynomials(pair: BoundsPair, grid: Sequence[float]) -> tuple[list, list]:
    """Evaluate the two bound polynomials on a grid of p values."""
    lb_vec = pair.lb_vector()
    ub_vec = pair.ub_vector()
    lb_curve = [eval_nform(lb_vec, p) for p in grid]
    ub_curve = [eval_nform(ub_vec, p) for p in grid]
    return lb_curve, ub_curve
