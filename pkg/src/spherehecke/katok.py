"""Closed-form geodesic lengths and Morse indices for the Katok family
of Finsler metrics on the 2-sphere.

Two branches of equatorial geodesics join the two marked points: the
minus branch (m = 0, 1, 2, ... passes through the antipode) has length
2*pi*(m + eps)/(1 + lam) and the plus branch (m = 1, 2, ...) has length
2*pi*(m - eps)/(1 - lam); the Morse index is the floor of twice the
length in 2*pi-units.  All arithmetic is exact on rationals; lengths
are returned as multiples of 2*pi.

The deformation parameter lam stands in for an irrational value, so a
boundary guard rejects parameters for which any index computation
lands exactly on an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

BRANCHES = ("minus", "plus")


class BoundaryHit(ArithmeticError):
    """An index floor argument is an exact integer; perturb epsilon."""


@dataclass(frozen=True)
class KatokParams:
    lam: Fraction
    eps: Fraction

    def __post_init__(self):
        lam = Fraction(self.lam)
        eps = Fraction(self.eps)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "eps", eps)
        if not 0 <= lam < 1:
            raise ValueError(f"lambda must satisfy 0 <= lambda < 1, got {lam}")
        if not 0 < eps < Fraction(1, 2):
            raise ValueError(f"epsilon must satisfy 0 < epsilon < 1/2, got {eps}")


def _check_branch(m: int, branch: str) -> None:
    if branch not in BRANCHES:
        raise ValueError(f"branch must be 'minus' or 'plus', got {branch!r}")
    low = 0 if branch == "minus" else 1
    if m < low:
        raise ValueError(f"branch {branch!r} starts at m={low}, got m={m}")


def geodesic_length(m: int, branch: str, p: KatokParams) -> Fraction:
    """Length in 2*pi-units: (m + eps)/(1 + lam) or (m - eps)/(1 - lam)."""
    _check_branch(m, branch)
    if branch == "minus":
        return (m + p.eps) / (1 + p.lam)
    return (m - p.eps) / (1 - p.lam)


def geodesic_index(m: int, branch: str, p: KatokParams) -> int:
    """floor of 2(m +/- eps)/(1 +/- lam), guarded against exact integers."""
    arg = 2 * geodesic_length(m, branch, p)
    if arg.denominator == 1:
        raise BoundaryHit(
            f"index argument {arg} is an exact integer at m={m}, branch={branch}; "
            "perturb epsilon"
        )
    return math.floor(arg)


@dataclass(frozen=True)
class GeodesicEntry:
    branch: str
    m: int
    length: Fraction
    index: int


@dataclass(frozen=True)
class MonotonicityReport:
    """Enumeration of all geodesics of index <= N on both branches.

    Along each branch the index is nondecreasing in m, so the window is
    complete.  The proportionality defect uses the constant 1/2 in
    2*pi-units (half of the length equator), and the excluded-geodesic
    check uses the floor sandwich index <= 2*length, giving the length
    cutoff N/2.
    """

    params: KatokParams
    max_index: int
    entries: tuple[GeodesicEntry, ...]
    merged_indices: tuple[int, ...]
    indices_consecutive: bool
    max_defect: Fraction
    tolerance: Optional[Fraction]
    within_tolerance: Optional[bool]
    length_cutoff: Fraction
    excluded_lengths_exceed_cutoff: bool

    def to_json(self) -> dict:
        return {
            "lambda": str(self.params.lam),
            "epsilon": str(self.params.eps),
            "max_index": self.max_index,
            "entries": [
                {
                    "branch": e.branch,
                    "m": e.m,
                    "length": str(e.length),
                    "index": e.index,
                }
                for e in self.entries
            ],
            "merged_indices": list(self.merged_indices),
            "indices_consecutive": self.indices_consecutive,
            "max_defect": str(self.max_defect),
            "tolerance": None if self.tolerance is None else str(self.tolerance),
            "within_tolerance": self.within_tolerance,
            "length_cutoff": str(self.length_cutoff),
            "excluded_lengths_exceed_cutoff": self.excluded_lengths_exceed_cutoff,
        }


def monotonicity_report(
    n: int, p: KatokParams, tolerance: Optional[Fraction] = None
) -> MonotonicityReport:
    """Enumerate both branches up to index n and check the merged index
    sequence and the index-length proportionality defect."""
    if n < 0:
        raise ValueError("n must be >= 0")
    entries: list[GeodesicEntry] = []
    excluded_lengths: list[Fraction] = []
    for branch, start in (("minus", 0), ("plus", 1)):
        m = start
        while True:
            idx = geodesic_index(m, branch, p)
            if idx > n:
                excluded_lengths.append(geodesic_length(m, branch, p))
                break
            entries.append(
                GeodesicEntry(branch, m, geodesic_length(m, branch, p), idx)
            )
            m += 1
    entries.sort(key=lambda e: (e.length, e.branch, e.m))
    merged = tuple(sorted(e.index for e in entries))
    consecutive = merged == tuple(range(len(merged)))
    half = Fraction(1, 2)
    max_defect = max(
        (abs(half * e.index - e.length) for e in entries), default=Fraction(0)
    )
    cutoff = Fraction(n, 2)
    excluded_ok = all(length > cutoff for length in excluded_lengths)
    within = None if tolerance is None else max_defect < tolerance
    return MonotonicityReport(
        params=p,
        max_index=n,
        entries=tuple(entries),
        merged_indices=merged,
        indices_consecutive=consecutive,
        max_defect=max_defect,
        tolerance=tolerance,
        within_tolerance=within,
        length_cutoff=cutoff,
        excluded_lengths_exceed_cutoff=excluded_ok,
    )
