"""Exact N-form reliability polynomials and their duality identities.

The reliability polynomial of an n-device two-terminal network is kept in
N-form, i.e. in the Bernstein-like basis::

    h(p) = sum_{k=0..n} N_k * p^k * (1-p)^(n-k)

where the integer coefficient ``N_k`` counts the k-subsets of devices whose
operation connects source to terminal.  The network obtained by swapping
length and width (the dual) satisfies two exact identities used throughout::

    h(p) + h_dual(1-p) = 1
    N_k + N_dual[n-k]  = C(n, k)        for every k

Coefficients are arbitrary-precision integers end to end and every identity
check runs in exact rational arithmetic, never to floating-point tolerance.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import DomainError, InvalidVectorError


@dataclass(frozen=True)
class HammockDims:
    """Dimensions of a hammock network: w wires of l devices, n = l*w."""

    l: int
    w: int

    def __post_init__(self):
        if self.l < 1 or self.w < 1:
            raise DomainError(f"hammock dimensions must be >= 1, got l={self.l}, w={self.w}")

    @property
    def n(self) -> int:
        return self.l * self.w

    def dual(self) -> "HammockDims":
        return HammockDims(self.w, self.l)


@dataclass(frozen=True)
class BinomialTable:
    """One full row C(n,0)..C(n,n) of Pascal's triangle, exact integers."""

    n: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k]


@lru_cache(maxsize=256)
def binomial_row(n: int) -> BinomialTable:
    """Return the exact binomial row for n (n >= 0)."""
    if n < 0:
        raise DomainError(f"binomial row needs n >= 0, got {n}")
    return BinomialTable(n, tuple(math.comb(n, k) for k in range(n + 1)))


@dataclass(frozen=True)
class ExactCoeffVector:
    """Exact integer N-form coefficients N_0..N_n of a reliability polynomial.

    ``dims`` is present when the vector belongs to a hammock; vectors counted
    on arbitrary graphs carry only ``n``.
    """

    n: int
    coeffs: tuple[int, ...]
    dims: Optional[HammockDims] = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.n < 1:
            raise InvalidVectorError(f"need n >= 1, got {self.n}")
        if len(self.coeffs) != self.n + 1:
            raise InvalidVectorError(
                f"expected {self.n + 1} coefficients, got {len(self.coeffs)}"
            )
        row = binomial_row(self.n)
        for k, c in enumerate(self.coeffs):
            if not 0 <= c <= row[k]:
                raise InvalidVectorError(
                    f"N_{k}={c} outside [0, C({self.n},{k})={row[k]}]"
                )
        if self.dims is not None and self.dims.n != self.n:
            raise InvalidVectorError(
                f"dims {self.dims} give n={self.dims.n}, vector has n={self.n}"
            )

    @property
    def total(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class SplineParams:
    """Provenance of an approximate vector: offsets, bridge points, mode."""

    s: int
    t: int
    x1: Optional[int]
    x2: Optional[int]
    mode: str  # "unique" | "general"


def _round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


@dataclass(frozen=True)
class ApproxCoeffVector:
    """Real-valued approximate N-form coefficients plus fit provenance."""

    n: int
    coeffs: tuple[float, ...]
    params: Optional[SplineParams] = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        if len(self.coeffs) != self.n + 1:
            raise InvalidVectorError(
                f"expected {self.n + 1} coefficients, got {len(self.coeffs)}"
            )

    def rounded(self) -> tuple[int, ...]:
        """Integer view, half rounded away from zero."""
        return tuple(_round_half_away(c) for c in self.coeffs)


CoeffVector = Union[ExactCoeffVector, ApproxCoeffVector]


def eval_nform(vec: CoeffVector, p) -> float | Fraction:
    """Evaluate sum N_k p^k (1-p)^(n-k) at p in [0, 1].

    A ``Fraction`` (or int) argument is evaluated exactly and returns a
    ``Fraction``; a float argument returns a float.  Identity checks always
    use the exact path.
    """
    if p < 0 or p > 1:
        raise DomainError(f"p={p} outside [0, 1]")
    exact = isinstance(p, (Fraction, int))
    if not exact:
        p = float(p)
    q = (Fraction(1) if exact else 1.0) - p
    n = vec.n
    pw_p = [1] * (n + 1)
    pw_q = [1] * (n + 1)
    for k in range(1, n + 1):
        pw_p[k] = pw_p[k - 1] * p
        pw_q[k] = pw_q[k - 1] * q
    terms = [vec.coeffs[k] * pw_p[k] * pw_q[n - k] for k in range(n + 1)]
    return sum(terms) if exact else math.fsum(terms)


def dual_coeffs(vec: ExactCoeffVector) -> ExactCoeffVector:
    """Coefficients of the dual network: N_dual[k] = C(n,k) - N[n-k].

    Applying the transform twice is the identity.  A negative result signals
    an input that cannot be a genuine subset count.
    """
    row = binomial_row(vec.n)
    dual = []
    for k in range(vec.n + 1):
        v = row[k] - vec.coeffs[vec.n - k]
        if v < 0:
            raise InvalidVectorError(
                f"dual coefficient at k={k} would be {v} < 0; input is not a valid count vector"
            )
        dual.append(v)
    dims = vec.dims.dual() if vec.dims is not None else None
    return ExactCoeffVector(vec.n, tuple(dual), dims)


def check_duality_identity(h: ExactCoeffVector, hdual: ExactCoeffVector, p) -> bool:
    """True iff h(p) + h_dual(1-p) = 1 exactly, in rational arithmetic."""
    if h.n != hdual.n:
        raise InvalidVectorError(f"mismatched degrees n={h.n} vs n={hdual.n}")
    p = Fraction(p)
    return eval_nform(h, p) + eval_nform(hdual, 1 - p) == 1


def check_sum_complementarity(h: ExactCoeffVector, hdual: ExactCoeffVector) -> bool:
    """True iff the coefficient sums of the pair total exactly 2^n."""
    if h.n != hdual.n:
        raise InvalidVectorError(f"mismatched degrees n={h.n} vs n={hdual.n}")
    return h.total + hdual.total == 2 ** h.n


# -- JSON wire format -------------------------------------------------------
#
# {"n": int, "coeffs": ["...", ...], "kind": "exact" | "approx"}
#
# Coefficients travel as decimal strings so arbitrary-precision integers
# survive any JSON parser; approximate entries use repr(float) round-tripping.


def vector_to_doc(vec: CoeffVector) -> dict:
    kind = "exact" if isinstance(vec, ExactCoeffVector) else "approx"
    return {
        "n": vec.n,
        "coeffs": [repr(c) if kind == "approx" else str(c) for c in vec.coeffs],
        "kind": kind,
    }


def vector_to_json(vec: CoeffVector) -> str:
    return json.dumps(vector_to_doc(vec), sort_keys=True)


def vector_from_doc(doc: dict) -> CoeffVector:
    try:
        n = int(doc["n"])
        kind = doc["kind"]
        raw: Sequence[str] = doc["coeffs"]
        if kind == "exact":
            return ExactCoeffVector(n, tuple(int(c) for c in raw))
        if kind == "approx":
            return ApproxCoeffVector(n, tuple(float(c) for c in raw))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidVectorError(f"malformed coefficient document: {exc}") from exc
    raise InvalidVectorError(f"unknown vector kind {kind!r}")


def vector_from_json(text: str) -> CoeffVector:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidVectorError(f"malformed coefficient JSON: {exc}") from exc
    return vector_from_doc(doc)
