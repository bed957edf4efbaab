"""Shared random generators for the test suite."""

from fractions import Fraction

from helly import Disk, LinearSystem, linear_system


def random_nondegenerate_system(rng, k=None, n=None, planted=None, lo=-5, hi=5) -> LinearSystem:
    """Random system with no all-zero coefficient rows; optionally plants
    an integer solution so the system is consistent by construction."""
    if k is None:
        k = rng.randint(1, 4)
    if n is None:
        n = rng.randint(k + 1, 12)
    if planted is None:
        planted = rng.random() < 0.45
    solution = [rng.randint(-3, 3) for _ in range(k)] if planted else None
    rows, rhs = [], []
    for _ in range(n):
        row = [rng.randint(lo, hi) for _ in range(k)]
        while all(c == 0 for c in row):
            row = [rng.randint(lo, hi) for _ in range(k)]
        rows.append(row)
        if solution is not None:
            rhs.append(sum(c * x for c, x in zip(row, solution)))
        else:
            rhs.append(rng.randint(lo, hi))
    return linear_system(rows, rhs)


def random_disk(rng, span=10, rlo=1, rhi=10, den=3) -> Disk:
    x = Fraction(rng.randint(-span, span), rng.randint(1, den))
    y = Fraction(rng.randint(-span, span), rng.randint(1, den))
    r = Fraction(rng.randint(rlo, rhi), rng.randint(1, den))
    return Disk(x, y, r)


def random_family(rng, n=None, **kw) -> list[Disk]:
    if n is None:
        n = rng.randint(3, 10)
    return [random_disk(rng, **kw) for _ in range(n)]
