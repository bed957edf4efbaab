"""Exact rational scalars, matrices, and affine solution sets.

Feasibility of a linear system is a yes/no property of its ranks, so the
arithmetic underneath has to be exact: one rounded pivot can turn an
inconsistent system into a "consistent" one. Everything here works over
arbitrary-precision rationals and never rounds.

Two elimination routines live here:

* ``rank`` runs fraction-free (Bareiss) elimination on an integer copy of
  the matrix. Intermediate entries stay polynomially bounded and no gcd
  reduction happens per step.
* ``solve_affine`` runs ordinary rational Gauss-Jordan, because it has to
  produce the canonical witness (free variables pinned to zero) and a
  nullspace basis, not just a count.

Pivoting is deterministic in both: first nonzero entry in the leftmost
unresolved column, no magnitude heuristics. Witnesses are therefore
reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

Rat = Fraction


def rat(num, den: int = 1) -> Rat:
    """Exact rational; ``Fraction`` keeps it reduced with positive denominator."""
    return Fraction(num, den)


@dataclass(frozen=True)
class RatMatrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Rat, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Rat | int]]) -> "RatMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        entries: list[Rat] = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            entries.extend(Fraction(x) for x in row)
        return RatMatrix(r, c, tuple(entries))

    def at(self, i: int, j: int) -> Rat:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Rat, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Rat]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        ents = tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        return RatMatrix(self.cols, self.rows, ents)

    def with_column(self, col: Sequence[Rat]) -> "RatMatrix":
        """Augment with one extra right-hand column."""
        if len(col) != self.rows:
            raise ValueError("column length must equal row count")
        ents: list[Rat] = []
        for i in range(self.rows):
            ents.extend(self.row(i))
            ents.append(Fraction(col[i]))
        return RatMatrix(self.rows, self.cols + 1, tuple(ents))


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    # Row scaling by a positive constant leaves the rank unchanged.
    out: list[list[int]] = []
    for i in range(m.rows):
        row = m.row(i)
        mul = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mul) for x in row])
    return out


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals, by fraction-free elimination.

    Result is independent of row and column order; the empty matrix has
    rank zero.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            q = a[i][c]
            rowi, rowr = a[i], a[r]
            if q:
                for j in range(c + 1, ncols):
                    num = p * rowi[j] - q * rowr[j]
                    quot, rem = divmod(num, prev)
                    assert rem == 0, "fraction-free elimination lost exactness"
                    rowi[j] = quot
            else:
                for j in range(c + 1, ncols):
                    num = p * rowi[j]
                    quot, rem = divmod(num, prev)
                    assert rem == 0, "fraction-free elimination lost exactness"
                    rowi[j] = quot
            rowi[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


@dataclass(frozen=True)
class AffineSolutionSet:
    """A nonempty affine subspace: witness point plus nullspace basis.

    ``basis`` spans the directions in which the solution set is free, so
    ``dim`` 0 is a single point, 1 a line, 2 a plane, and ``dim == k``
    with a zero witness is the whole space.
    """

    point: tuple[Rat, ...]
    basis: tuple[tuple[Rat, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def unknowns(self) -> int:
        return len(self.point)

    def element(self, weights: Sequence[Rat | int]) -> tuple[Rat, ...]:
        """The set element ``point + sum(w_i * basis_i)``."""
        if len(weights) != len(self.basis):
            raise ValueError("one weight per basis vector required")
        out = list(self.point)
        for w, vec in zip(weights, self.basis):
            wf = Fraction(w)
            for j, v in enumerate(vec):
                out[j] += wf * v
        return tuple(out)

    def contains(self, point: Sequence[Rat | int]) -> bool:
        """Exact membership: point - witness must lie in the basis span."""
        if len(point) != len(self.point):
            raise ValueError("dimension mismatch")
        delta = [Fraction(p) - q for p, q in zip(point, self.point)]
        if not self.basis:
            return all(x == 0 for x in delta)
        cols = RatMatrix.from_rows([list(vec) for vec in self.basis]).transpose()
        return rank(cols) == rank(cols.with_column(delta))


def solve_affine(m: RatMatrix, rhs: Sequence[Rat]) -> AffineSolutionSet | None:
    """Solve ``m x = rhs`` exactly; ``None`` when there is no solution.

    The witness point is the one with every free variable set to zero
    under leftmost-pivot elimination, so repeated runs agree exactly.
    """
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length must equal row count")
    nrows, ncols = m.rows, m.cols
    a = [list(m.row(i)) + [Fraction(rhs[i])] for i in range(nrows)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if a[i][ncols] != 0:
            return None
    point = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        point[c] = a[i][ncols]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis: list[tuple[Rat, ...]] = []
    for f in free_cols:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            vec[c] = -a[i][f]
        basis.append(tuple(vec))
    return AffineSolutionSet(tuple(point), tuple(basis))
