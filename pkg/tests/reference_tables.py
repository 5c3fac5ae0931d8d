"""Frozen reference data for the two hammock fixtures.

The 15-device fixture is the l=5, w=3 hammock; the 25-device fixture is the
self-dual l=w=5 hammock.  Exact coefficient cores were cross-checked against
the exhaustive oracle; fit rows and bound vectors are the frozen golden rows
the acceptance suite reproduces.
"""
from math import comb

from hamrel import ExactCoeffVector, HammockDims

DIMS_5_3 = HammockDims(5, 3)
DIMS_3_5 = HammockDims(3, 5)
DIMS_5_5 = HammockDims(5, 5)

# k = 5..12; below: zeros, above: the binomial tail
N_5_3_CORE = (21, 194, 782, 1772, 2443, 2114, 1187, 439)
F_5_3 = (21, 194, 561, 982, 1320, 1434, 1187, 439)
LB_5_3 = (21, 194, 249, 249, 194, 116, 1187, 439)
UB_5_3 = (21, 194, 5596, 5596, 4352, 2611, 1187, 439)

# derived through N_k + Ndual[n-k] = C(n,k); k = 3..10
FDUAL_5_3 = (16, 178, 1265, 2775, 4205, 5051, 4811, 2982)

# k = 5..20
N_5_5_CORE = (
    52, 994, 8983, 50796, 200559, 584302, 1294750, 2220298,
    2980002, 3162650, 2684458, 1842416, 1030779, 471717, 176106, 53078,
)
# k = 7..18
F_5_5 = (
    20757, 55084, 99716, 150396, 202866, 252867,
    296143, 328434, 345484, 343034, 316826, 262603,
)
# k = 5..20
LB_5_5 = (
    52, 994, 2698, 6070, 11466, 18346, 25018, 29187,
    29187, 25018, 18346, 11466, 6070, 2698, 176106, 53078,
)
UB_5_5 = (
    52, 994, 478002, 1075504, 2031508, 3250414, 4432382, 5171113,
    5171113, 4432382, 3250414, 2031508, 1075504, 478002, 176106, 53078,
)


def _full_vector(dims: HammockDims, core: tuple[int, ...]) -> ExactCoeffVector:
    l, w, n = dims.l, dims.w, dims.n
    coeffs = [0] * l
    coeffs.extend(core)
    coeffs.extend(comb(n, k) for k in range(n - w + 1, n + 1))
    assert len(coeffs) == n + 1
    return ExactCoeffVector(n, tuple(coeffs), dims)


def exact_5_3() -> ExactCoeffVector:
    return _full_vector(DIMS_5_3, N_5_3_CORE)


def exact_5_5() -> ExactCoeffVector:
    return _full_vector(DIMS_5_5, N_5_5_CORE)
