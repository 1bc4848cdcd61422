"""Critical parameters and region structure of the state families.

The dense-coding threshold of a family is the root of
g(p) = S(rho_B) - S(rho_AB) on [0, 1], located by bisection (guaranteed
bracketing, no derivative needed).  The analytic steerability bound for
the isotropic family is (H_d - 1)/(d - 1) with H_d the d-th harmonic
number.  Region maps decompose [0, 1] into labelled segments whose
boundaries are these critical points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .measures import WERNER_UNSTEERABLE_POINT, dense_coding_capacity, is_steerable
from .states import StateFamily


class NoThresholdError(RuntimeError):
    """Raised when the bracketing function does not change sign."""


@dataclass(frozen=True)
class ThresholdResult:
    family: str
    kind: str  # "dense-coding" or "steerability"
    p_star: float
    tolerance: float
    iterations: int


@dataclass(frozen=True)
class Segment:
    lo: float
    hi: float
    labels: frozenset[str]


@dataclass(frozen=True)
class RegionMap:
    family: str
    segments: tuple[Segment, ...]


def harmonic_number(d: int) -> float:
    """H_d = sum_{n=1..d} 1/n."""
    if d < 1:
        raise ValueError("harmonic number needs d >= 1")
    return math.fsum(1.0 / n for n in range(1, d + 1))


def steerability_threshold(d: int) -> float:
    """(H_d - 1)/(d - 1), the steerability bound of the isotropic family."""
    if d < 2:
        raise ValueError("steerability threshold needs d >= 2")
    return (harmonic_number(d) - 1.0) / (d - 1.0)


def find_dense_coding_threshold(
    family: StateFamily,
    tol: float = 1e-6,
    bracket: tuple[float, float] = (0.0, 1.0),
) -> ThresholdResult:
    """Bisect g(p) = S_B - S_AB to the parameter where the family becomes
    dense-codeable.  Returns the bracket midpoint once the bracket width
    is <= tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def g(p: float) -> float:
        report = dense_coding_capacity(family.evaluate(p), p)
        return report.S_B - report.S_AB

    lo, hi = float(bracket[0]), float(bracket[1])
    g_lo, g_hi = g(lo), g(hi)
    if g_lo == 0.0 or g_hi == 0.0 or (g_lo > 0.0) == (g_hi > 0.0):
        raise NoThresholdError("no threshold in domain")

    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if (g(mid) > 0.0) == (g_hi > 0.0):
            hi = mid
        else:
            lo = mid
        iterations += 1

    return ThresholdResult(
        family=family.label,
        kind="dense-coding",
        p_star=0.5 * (lo + hi),
        tolerance=tol,
        iterations=iterations,
    )


def _labels_at(family: StateFamily, p: float) -> frozenset[str]:
    labels = {"steerable" if is_steerable(family, p).steerable else "unsteerable"}
    if dense_coding_capacity(family.evaluate(p), p).dense_codeable:
        labels.add("dense-codeable")
    return frozenset(labels)


def build_region_map(family: StateFamily, grid: int = 1000) -> RegionMap:
    """Partition [0, 1] into segments bounded by the computed thresholds,
    labelling each segment by evaluating the measures at its midpoint.

    For the Werner family the map carries two degenerate (point) segments,
    at p = 0 and p = 1/sqrt(3), where the state is unsteerable.  ``grid``
    extra points are cross-checked against the segment labels; a mismatch
    means the segment structure is wrong and raises.
    """
    if grid < 100:
        raise ValueError("grid must be at least 100")

    p_star = find_dense_coding_threshold(family).p_star
    if family.name == "werner":
        point = WERNER_UNSTEERABLE_POINT
        boundaries = [0.0, point, p_star, 1.0]
        raw_segments = [
            (0.0, 0.0),
            (0.0, point),
            (point, point),
            (point, p_star),
            (p_star, 1.0),
        ]
    else:
        bound = steerability_threshold(family.d)
        boundaries = [0.0, bound, p_star, 1.0]
        raw_segments = [(0.0, bound), (bound, p_star), (p_star, 1.0)]

    segments = tuple(
        Segment(lo, hi, _labels_at(family, 0.5 * (lo + hi))) for lo, hi in raw_segments
    )

    step = 1.0 / grid
    for p in np.linspace(0.0, 1.0, grid + 1):
        if any(abs(p - b) < step for b in boundaries):
            continue
        seg = next(s for s in segments if s.lo < p < s.hi)
        if _labels_at(family, float(p)) != seg.labels:
            raise RuntimeError(f"region labels inconsistent at p = {p}")

    return RegionMap(family=family.label, segments=segments)
