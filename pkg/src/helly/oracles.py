"""Independent brute-force oracles for property tests.

Nothing here shares an elimination routine or a membership test with the
production modules; a correlated bug would defeat the point of checking
one against the other. Everything is plain rational Gauss-Jordan and
exhaustive scans, gated to desk-scale sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .disks import Disk
from .exactq import RatMatrix
from .linear import LinearSystem


def naive_rank(m: RatMatrix) -> int:
    """Rank by straightforward rational Gauss-Jordan, no fraction-free tricks."""
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def _oracle_consistent(system: LinearSystem, indices: Sequence[int]) -> bool:
    rows = [list(system.equations[i].coeffs) for i in indices]
    rhs = [system.equations[i].rhs for i in indices]
    coeff = RatMatrix.from_rows(rows) if rows else RatMatrix(0, system.unknowns, ())
    aug = RatMatrix.from_rows([row + [b] for row, b in zip(rows, rhs)]) if rows else coeff
    if not rows:
        return True
    return naive_rank(coeff) == naive_rank(aug)


def exhaustive_min_inconsistent(system: LinearSystem) -> tuple[int, ...] | None:
    """First inconsistent subset in size-then-lexicographic order, or None.

    Exponential by design; refuses systems with more than 14 equations.
    """
    if system.n > 14:
        raise ValueError("exhaustive search is gated to systems of at most 14 equations")
    for size in range(1, system.n + 1):
        for idx in combinations(range(system.n), size):
            if not _oracle_consistent(system, idx):
                return idx
    return None


@dataclass(frozen=True)
class GridSpec:
    """Rational sampling grid over a box: resolution subdivisions per axis."""

    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction
    resolution: int

    def __post_init__(self) -> None:
        if self.resolution < 1:
            raise ValueError("resolution must be at least 1")
        if self.x1 < self.x0 or self.y1 < self.y0:
            raise ValueError("box must be nonempty")

    def points(self):
        dx = (self.x1 - self.x0) / self.resolution
        dy = (self.y1 - self.y0) / self.resolution
        for i in range(self.resolution + 1):
            x = self.x0 + i * dx
            for j in range(self.resolution + 1):
                yield x, self.y0 + j * dy


def grid_meet_oracle(family: Sequence[Disk], grid: GridSpec) -> tuple[Fraction, Fraction] | None:
    """First grid point inside every disk, scanning x-major.

    One-sided: a found point certifies the family meets; an empty scan
    certifies nothing.
    """
    for x, y in grid.points():
        hit = True
        for d in family:
            ddx, ddy = x - d.x, y - d.y
            if ddx * ddx + ddy * ddy > d.r * d.r:
                hit = False
                break
        if hit:
            return (x, y)
    return None
