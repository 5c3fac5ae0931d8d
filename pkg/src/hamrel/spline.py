"""Cubic Bezier-style fit of a hammock coefficient profile and of its dual.

Both networks of a dual pair are approximated simultaneously.  For the
(l, w) network the fitted curve is::

    f(x) = 0                                         for 0 <= x <= l-1
         = N_l * (x - l + 1)                         for l-1 <  x <= l
         = B(x)                                      for l   <  x <= n-w
         = chord to the binomial tail                for n-w <  x <= n

where B is the cubic in Bezier form over [l, n-w], written with
u = n-w-x and v = x-l::

    B(x) = (N_l*u^3 + 3a*u^2*v + 3b*u*v^2 + N_nw*v^3) / (n-w-l)^3

The dual curve has the same shape over [w, n-l] with control values
(Nd_w, c, d, Nd_nl).  The four interior controls a, b, c, d are solved from
interpolation constraints at the anchor coefficients; the unseen endpoint
coefficients come from the exact complementarity N_k + Nd[n-k] = C(n,k).

Two ways of fixing (a, b, c, d) are provided:

* ``unique`` mode (default): anchor each curve at its own known coefficient
  and at the mirror image of the other curve's anchor, which decouples into
  two 2x2 systems with a unique solution;
* ``general`` mode: anchor each curve at its own coefficient and add two
  bridge constraints f(x) + f_dual(n-x) = C(n,x) at chosen abscissas x1, x2.

All system coefficients and right sides are exact integers, converted to
floating point only when solving.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    DegenerateDimensionsError,
    DomainError,
    InconsistentAnchorsError,
    InvalidBridgePointError,
    SingularSystemError,
)
from .polynomials import (
    ApproxCoeffVector,
    ExactCoeffVector,
    HammockDims,
    SplineParams,
    binomial_row,
    dual_coeffs,
)

# Solver thresholds: pivots below PIVOT_RTOL times the row scale are treated
# as singular; solved systems must satisfy every equation to RESIDUAL_RTOL.
PIVOT_RTOL = 1e-12
RESIDUAL_RTOL = 1e-8


@dataclass(frozen=True)
class KnownAnchors:
    """The four known coefficients that seed a fit.

    ``n_l``  = N_l        first nonzero coefficient of the (l, w) network
    ``n_lt`` = N_{l+t}    second known coefficient, offset t > 0
    ``nd_w`` = Nd_w       first nonzero coefficient of the dual network
    ``nd_ws``= Nd_{w+s}   second known dual coefficient, offset s > 0

    Offsets are constrained so every interpolation abscissa falls strictly
    inside the cubic interval (l, n-w) and its dual mirror.
    """

    dims: HammockDims
    t: int
    s: int
    n_l: int
    n_lt: int
    nd_w: int
    nd_ws: int

    def __post_init__(self):
        dims = self.dims
        gap = dims.n - dims.w - dims.l
        if gap < 2:
            raise DegenerateDimensionsError(
                f"n-w-l={gap} < 2 for dims {dims}: network is series/parallel-thin, "
                "use the exact oracle instead"
            )
        if not 1 <= self.t <= gap - 1:
            raise InconsistentAnchorsError(f"t={self.t} outside [1, {gap - 1}]")
        if not 1 <= self.s <= gap - 1:
            raise InconsistentAnchorsError(f"s={self.s} outside [1, {gap - 1}]")
        if not self.n_lt > self.n_l > 0:
            raise InconsistentAnchorsError(
                f"need N_(l+t) > N_l > 0, got {self.n_lt}, {self.n_l}"
            )
        if not self.nd_ws > self.nd_w > 0:
            raise InconsistentAnchorsError(
                f"need dual N_(w+s) > N_w > 0, got {self.nd_ws}, {self.nd_w}"
            )
        row = binomial_row(dims.n)
        checks = [
            (dims.l, self.n_l), (dims.l + self.t, self.n_lt),
            (dims.w, self.nd_w), (dims.w + self.s, self.nd_ws),
        ]
        for k, value in checks:
            if value > row[k]:
                raise InconsistentAnchorsError(
                    f"anchor {value} at k={k} exceeds C({dims.n},{k})={row[k]}"
                )

    # Endpoint coefficients forced by complementarity with the dual network.

    @property
    def n_nw(self) -> int:
        """N_{n-w} = C(n,w) - Nd_w."""
        d = self.dims
        return math.comb(d.n, d.w) - self.nd_w

    @property
    def nd_nl(self) -> int:
        """Nd_{n-l} = C(n,l) - N_l."""
        d = self.dims
        return math.comb(d.n, d.l) - self.n_l

    @property
    def n_nws(self) -> int:
        """N_{n-w-s} = C(n,w+s) - Nd_{w+s}."""
        d = self.dims
        return math.comb(d.n, d.w + self.s) - self.nd_ws

    @property
    def nd_nlt(self) -> int:
        """Nd_{n-l-t} = C(n,l+t) - N_{l+t}."""
        d = self.dims
        return math.comb(d.n, d.l + self.t) - self.n_lt


def anchors_from_exact(exact: ExactCoeffVector, dims: HammockDims,
                       s: int = 1, t: int = 1) -> KnownAnchors:
    """Read the four anchors off an exact vector of the (l, w) network."""
    dual = dual_coeffs(exact)
    return KnownAnchors(
        dims=dims, t=t, s=s,
        n_l=exact.coeffs[dims.l],
        n_lt=exact.coeffs[dims.l + t],
        nd_w=dual.coeffs[dims.w],
        nd_ws=dual.coeffs[dims.w + s],
    )


@dataclass(frozen=True)
class LinearSystem:
    """Small dense system with exact integer entries."""

    rows: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]


def assemble_unique_system(anchors: KnownAnchors) -> tuple[LinearSystem, LinearSystem]:
    """The two decoupled 2x2 systems of unique mode.

    The (a, b) system anchors the primal curve at l+t and at n-w-s; the
    (c, d) system anchors the dual curve at w+s and at n-l-t.  With
    g = n-w-l the right sides are::

        A1 = N_{l+t}   * g^3 - N_l   * (g-t)^3 - N_{n-w} * t^3
        A4 = N_{n-w-s} * g^3 - N_{n-w} * (g-s)^3 - N_l * s^3
        A2 = Nd_{w+s}  * g^3 - Nd_w  * (g-s)^3 - Nd_{n-l} * s^3
        A3 = Nd_{n-l-t}* g^3 - Nd_{n-l} * (g-t)^3 - Nd_w * t^3
    """
    d, t, s = anchors.dims, anchors.t, anchors.s
    g = d.n - d.w - d.l
    a1 = anchors.n_lt * g**3 - anchors.n_l * (g - t)**3 - anchors.n_nw * t**3
    a4 = anchors.n_nws * g**3 - anchors.n_nw * (g - s)**3 - anchors.n_l * s**3
    a2 = anchors.nd_ws * g**3 - anchors.nd_w * (g - s)**3 - anchors.nd_nl * s**3
    a3 = anchors.nd_nlt * g**3 - anchors.nd_nl * (g - t)**3 - anchors.nd_w * t**3
    sys_ab = LinearSystem(
        rows=(
            (3 * (g - t)**2 * t, 3 * (g - t) * t**2),
            (3 * s**2 * (g - s), 3 * s * (g - s)**2),
        ),
        rhs=(a1, a4),
    )
    sys_cd = LinearSystem(
        rows=(
            (3 * (g - s)**2 * s, 3 * (g - s) * s**2),
            (3 * t**2 * (g - t), 3 * t * (g - t)**2),
        ),
        rhs=(a2, a3),
    )
    return sys_ab, sys_cd


def bridge_interval(anchors: KnownAnchors) -> tuple[int, int]:
    """Open interval of admissible bridge abscissas in general mode."""
    d, t, s = anchors.dims, anchors.t, anchors.s
    lo = max(d.l + t, d.w + s)
    hi = min(d.n - d.w + s, d.n - d.l + t)
    return lo, hi


def assemble_general_system(anchors: KnownAnchors, x1: int, x2: int) -> LinearSystem:
    """The coupled 4x4 system with bridge constraints at x1 and x2."""
    d, t, s = anchors.dims, anchors.t, anchors.s
    l, w, n = d.l, d.w, d.n
    if s == t or s == n - t:
        raise InconsistentAnchorsError(
            f"general mode requires s != t and s != n-t, got s={s}, t={t}"
        )
    lo, hi = bridge_interval(anchors)
    for x in (x1, x2):
        if not isinstance(x, int) or not lo < x < hi:
            raise InvalidBridgePointError(
                f"bridge point {x} outside admissible open interval ({lo}, {hi})"
            )
    if x1 == x2:
        raise InvalidBridgePointError(f"bridge points must differ, got x1=x2={x1}")
    g = n - w - l
    a1 = anchors.n_lt * g**3 - anchors.n_l * (g - t)**3 - anchors.n_nw * t**3
    a2 = anchors.nd_ws * g**3 - anchors.nd_w * (g - s)**3 - anchors.nd_nl * s**3

    def bridge_row(x: int) -> tuple[tuple[int, int, int, int], int]:
        u, v = n - w - x, x - l  # dual mirror swaps the roles of u and v
        coeff = (3 * u**2 * v, 3 * u * v**2, 3 * v**2 * u, 3 * v * u**2)
        rhs = (math.comb(n, x) * g**3
               - math.comb(n, l) * u**3
               - math.comb(n, w) * v**3)
        return coeff, rhs

    row3, a3 = bridge_row(x1)
    row4, a4 = bridge_row(x2)
    gt, gs = g - t, g - s
    return LinearSystem(
        rows=(
            (3 * gt**2 * t, 3 * gt * t**2, 0, 0),
            (0, 0, 3 * gs**2 * s, 3 * gs * s**2),
            row3,
            row4,
        ),
        rhs=(a1, a2, a3, a4),
    )


def solve_system(system: LinearSystem) -> tuple[float, ...]:
    """Solve a 2x2 (determinant ratio) or larger (partial pivoting) system.

    Raises SingularSystemError when a pivot falls below PIVOT_RTOL times the
    row scale, or when the solution fails the RESIDUAL_RTOL residual check
    against the exact integer system.
    """
    m = len(system.rhs)
    a = [[float(v) for v in row] for row in system.rows]
    b = [float(v) for v in system.rhs]
    if m == 2:
        det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
        scale = max(map(abs, a[0])) * max(map(abs, a[1]))
        if abs(det) <= PIVOT_RTOL * max(scale, 1.0):
            raise SingularSystemError(f"2x2 determinant {det} below pivot threshold")
        x = (
            (b[0] * a[1][1] - a[0][1] * b[1]) / det,
            (a[0][0] * b[1] - b[0] * a[1][0]) / det,
        )
    else:
        x = _gauss_partial_pivot(a, b)
    _check_residuals(system, x)
    return x


def _gauss_partial_pivot(a: list[list[float]], b: list[float]) -> tuple[float, ...]:
    m = len(b)
    scales = [max(max(map(abs, row)), 1.0) for row in a]
    for col in range(m):
        piv = max(range(col, m), key=lambda r: abs(a[r][col]))
        if abs(a[piv][col]) <= PIVOT_RTOL * scales[piv]:
            raise SingularSystemError(f"pivot {a[piv][col]} in column {col} below threshold")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            scales[col], scales[piv] = scales[piv], scales[col]
        for r in range(col + 1, m):
            if a[r][col] == 0.0:
                continue
            f = a[r][col] / a[col][col]
            for j in range(col, m):
                a[r][j] -= f * a[col][j]
            b[r] -= f * b[col]
    x = [0.0] * m
    for r in range(m - 1, -1, -1):
        acc = b[r] - math.fsum(a[r][j] * x[j] for j in range(r + 1, m))
        x[r] = acc / a[r][r]
    return tuple(x)


def _check_residuals(system: LinearSystem, x: tuple[float, ...]) -> None:
    for row, rhs in zip(system.rows, system.rhs):
        lhs_terms = [c * v for c, v in zip(row, x)]
        resid = math.fsum(lhs_terms) - rhs
        scale = max(abs(rhs), max((abs(t) for t in lhs_terms), default=0.0), 1.0)
        if abs(resid) > RESIDUAL_RTOL * scale:
            raise SingularSystemError(
                f"solution residual {resid} exceeds {RESIDUAL_RTOL} relative"
            )


@dataclass(frozen=True)
class SplineModel:
    """Solved fit: the four control values plus everything needed to evaluate."""

    dims: HammockDims
    anchors: KnownAnchors
    a: float
    b: float
    c: float
    d: float
    mode: str = "unique"
    x1: Optional[int] = None
    x2: Optional[int] = None

    def value(self, x) -> float:
        """Fitted coefficient curve of the (l, w) network at x in [0, n]."""
        d = self.dims
        return _piecewise(
            x, d.l, d.w, d.n,
            self.anchors.n_l, self.a, self.b, self.anchors.n_nw,
        )

    def dual_value(self, x) -> float:
        """Fitted coefficient curve of the dual (w, l) network at x in [0, n]."""
        d = self.dims
        return _piecewise(
            x, d.w, d.l, d.n,
            self.anchors.nd_w, self.c, self.d, self.anchors.nd_nl,
        )


def _piecewise(x, lo: int, hi_gap: int, n: int,
               v_lo: int, ctrl1: float, ctrl2: float, v_hi: int) -> float:
    """Evaluate the four-piece curve with cubic span (lo, n-hi_gap]."""
    if x < 0 or x > n:
        raise DomainError(f"x={x} outside [0, {n}]")
    hi = n - hi_gap
    if x <= lo - 1:
        return 0.0
    if x <= lo:
        return v_lo * (x - (lo - 1))
    if x <= hi:
        u = hi - x
        v = x - lo
        g3 = (hi - lo) ** 3
        return (v_lo * u**3 + 3 * ctrl1 * u**2 * v + 3 * ctrl2 * u * v**2 + v_hi * v**3) / g3
    # chords over (hi, n]: through (hi, v_hi) then along the binomial tail
    row = binomial_row(n)
    k = math.ceil(x)  # x in (k-1, k]
    v0 = v_hi if k == hi + 1 else row[k - 1]
    return v0 + (row[k] - v0) * (x - (k - 1))


def approximate(anchors: KnownAnchors, mode: str = "unique",
                x1: Optional[int] = None, x2: Optional[int] = None,
                ) -> tuple[ApproxCoeffVector, ApproxCoeffVector, SplineModel]:
    """Run the fit end to end and tabulate both curves at the integers.

    Returns the approximate coefficient vectors of the (l, w) network and of
    its dual, plus the solved model.  In general mode ``x2`` defaults to
    n - x1, the choice that behaves best in practice.
    """
    if mode == "unique":
        sys_ab, sys_cd = assemble_unique_system(anchors)
        a, b = solve_system(sys_ab)
        c, d = solve_system(sys_cd)
        x1 = x2 = None
    elif mode == "general":
        if x1 is None:
            raise InvalidBridgePointError("general mode requires x1")
        if x2 is None:
            x2 = anchors.dims.n - x1
        a, b, c, d = solve_system(assemble_general_system(anchors, x1, x2))
    else:
        raise DomainError(f"unknown mode {mode!r}, expected 'unique' or 'general'")
    model = SplineModel(anchors.dims, anchors, a, b, c, d, mode, x1, x2)
    params = SplineParams(s=anchors.s, t=anchors.t, x1=x1, x2=x2, mode=mode)
    n = anchors.dims.n
    flw = ApproxCoeffVector(n, tuple(model.value(k) for k in range(n + 1)), params)
    fwl = ApproxCoeffVector(n, tuple(model.dual_value(k) for k in range(n + 1)), params)
    return flw, fwl, model


@dataclass(frozen=True)
class ErrorBound:
    """Worst-case deviation guarantee for the fitted polynomials.

    ``per_network`` bounds |h(p) - h_fit(p)| for each network of the pair and
    ``cumulative`` (twice that) bounds |1 - h_fit(p) - h_fit_dual(1-p)|, both
    uniformly over p in [0, 1].  ``exact`` is the per-network bound as an
    exact rational; ``big_m`` the max-of-powers constant entering it.
    """

    per_network: float
    cumulative: float
    big_m: int
    exact: Fraction


def error_bound(dims: HammockDims) -> ErrorBound:
    """Evaluate the worst-case bound in exact rational arithmetic.

    With M = max((l+1)^(l+1) * (n-l-1)^(n-l-1), (w+1)^(w+1) * (n-w-1)^(n-w-1))
    the per-network bound is::

        M * (n-w-l-1) / n^n * |C(n, n//2) - min(C(n, l+1), C(n, w+1))|

    The bound may exceed 1; it is a guarantee, not an accuracy estimate.
    """
    l, w, n = dims.l, dims.w, dims.n
    if n - w - l < 2:
        raise DegenerateDimensionsError(f"n-w-l={n - w - l} < 2 for dims {dims}")
    big_m = max(
        (l + 1) ** (l + 1) * (n - l - 1) ** (n - l - 1),
        (w + 1) ** (w + 1) * (n - w - 1) ** (n - w - 1),
    )
    spread = abs(math.comb(n, n // 2) - min(math.comb(n, l + 1), math.comb(n, w + 1)))
    exact = Fraction(big_m * (n - w - l - 1) * spread, n ** n)
    return ErrorBound(
        per_network=float(exact),
        cumulative=float(2 * exact),
        big_m=big_m,
        exact=exact,
    )


# -- JSON wire format for reproducible runs ---------------------------------


def model_to_doc(model: SplineModel) -> dict:
    an = model.anchors
    return {
        "dims": {"l": model.dims.l, "w": model.dims.w, "n": model.dims.n},
        "anchors": {
            "s": an.s, "t": an.t,
            "n_l": an.n_l, "n_lt": an.n_lt,
            "nd_w": an.nd_w, "nd_ws": an.nd_ws,
        },
        "derived": {
            "n_nw": an.n_nw, "nd_nl": an.nd_nl,
            "n_nws": an.n_nws, "nd_nlt": an.nd_nlt,
        },
        "controls": {
            "a": repr(model.a), "b": repr(model.b),
            "c": repr(model.c), "d": repr(model.d),
        },
        "mode": model.mode,
        "x1": model.x1,
        "x2": model.x2,
    }


def model_to_json(model: SplineModel) -> str:
    return json.dumps(model_to_doc(model), sort_keys=True)


def model_from_doc(doc: dict) -> SplineModel:
    dims = HammockDims(doc["dims"]["l"], doc["dims"]["w"])
    an = doc["anchors"]
    anchors = KnownAnchors(
        dims=dims, t=an["t"], s=an["s"],
        n_l=int(an["n_l"]), n_lt=int(an["n_lt"]),
        nd_w=int(an["nd_w"]), nd_ws=int(an["nd_ws"]),
    )
    ctrl = doc["controls"]
    return SplineModel(
        dims, anchors,
        float(ctrl["a"]), float(ctrl["b"]), float(ctrl["c"]), float(ctrl["d"]),
        doc["mode"], doc["x1"], doc["x2"],
    )


def model_from_json(text: str) -> SplineModel:
    return model_from_doc(json.loads(text))
