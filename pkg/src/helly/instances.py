"""Instance files and built-in generators.

Instances travel as JSON with every rational written as an exact
``[numerator, denominator]`` integer pair; decimal floats would silently
break exactness at the boundary, so they are rejected. Serialization is
canonical (fixed key order, two-space indent, trailing newline), making
generate -> serialize -> parse -> re-serialize byte-identical.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Sequence

from .disks import Disk, disk
from .linear import Equation, LinearSystem, linear_system

FORMAT_VERSION = 1


def _rat_pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _parse_rat(obj) -> Fraction:
    if (
        not isinstance(obj, list)
        or len(obj) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in obj)
    ):
        raise ValueError(f"expected a [numerator, denominator] integer pair, got {obj!r}")
    if obj[1] == 0:
        raise ValueError("rational denominator must be nonzero")
    return Fraction(obj[0], obj[1])


def dumps_linear(system: LinearSystem) -> str:
    doc = {
        "version": FORMAT_VERSION,
        "kind": "linear",
        "unknowns": system.unknowns,
        "equations": [
            {"coeffs": [_rat_pair(c) for c in eq.coeffs], "rhs": _rat_pair(eq.rhs)}
            for eq in system.equations
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def dumps_disks(family: Sequence[Disk]) -> str:
    doc = {
        "version": FORMAT_VERSION,
        "kind": "disks",
        "disks": [
            {"center": [_rat_pair(d.x), _rat_pair(d.y)], "radius": _rat_pair(d.r)}
            for d in family
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_instance(text: str):
    """Parse an instance document; returns a LinearSystem or a list of Disk."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("instance document must be a JSON object")
    if doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {doc.get('version')!r}")
    kind = doc.get("kind")
    if kind == "linear":
        unknowns = doc.get("unknowns")
        if not isinstance(unknowns, int) or unknowns < 0:
            raise ValueError("'unknowns' must be a nonnegative integer")
        eqs = doc.get("equations")
        if not isinstance(eqs, list):
            raise ValueError("'equations' must be a list")
        rows, rhs = [], []
        for e in eqs:
            if not isinstance(e, dict) or "coeffs" not in e or "rhs" not in e:
                raise ValueError("each equation needs 'coeffs' and 'rhs'")
            coeffs = [_parse_rat(c) for c in e["coeffs"]]
            if len(coeffs) != unknowns:
                raise ValueError("equation coefficient count must equal 'unknowns'")
            rows.append(coeffs)
            rhs.append(_parse_rat(e["rhs"]))
        return LinearSystem(
            unknowns, tuple(Equation(tuple(r), b) for r, b in zip(rows, rhs))
        )
    if kind == "disks":
        ds = doc.get("disks")
        if not isinstance(ds, list):
            raise ValueError("'disks' must be a list")
        out = []
        for item in ds:
            if not isinstance(item, dict) or "center" not in item or "radius" not in item:
                raise ValueError("each disk needs 'center' and 'radius'")
            center = item["center"]
            if not isinstance(center, list) or len(center) != 2:
                raise ValueError("disk center must be a pair of rationals")
            x, y = _parse_rat(center[0]), _parse_rat(center[1])
            r = _parse_rat(item["radius"])
            if r <= 0:
                raise ValueError("disk radius must be positive")
            out.append(Disk(x, y, r))
        return out
    raise ValueError(f"unknown instance kind {kind!r}")


# ---------------------------------------------------------------------------
# Built-in instances


def tetrahedral_system() -> LinearSystem:
    """Four planes positioned like tetrahedron faces: the three coordinate
    planes plus x + y + z = 1. Every three have a common point; all four
    do not."""
    return linear_system(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
        [0, 0, 0, 1],
    )


def venn_triple() -> list[Disk]:
    """Three disks in which every two overlap properly but no point lies
    in all three. Centers form a rational near-equilateral triangle with
    side lengths 2, sqrt(65)/4, sqrt(65)/4 and circumradius 65/56, which
    exceeds the radius 21/20."""
    r = Fraction(21, 20)
    return [disk(0, 0, r), disk(2, 0, r), disk(1, Fraction(7, 4), r)]


# ---------------------------------------------------------------------------
# Random generators (deterministic under seed)


def gen_random_linear(n: int, k: int, seed: int, lo: int = -5, hi: int = 5) -> LinearSystem:
    """Random nondegenerate equations with integer data in [lo, hi]."""
    rng = random.Random(seed)
    rows, rhs = [], []
    for _ in range(n):
        row = [rng.randint(lo, hi) for _ in range(k)]
        while all(c == 0 for c in row):
            row = [rng.randint(lo, hi) for _ in range(k)]
        rows.append(row)
        rhs.append(rng.randint(lo, hi))
    return linear_system(rows, rhs)


def gen_consistent_linear(n: int, k: int, seed: int, lo: int = -5, hi: int = 5) -> LinearSystem:
    """Random nondegenerate system with a planted integer solution."""
    rng = random.Random(seed)
    solution = [rng.randint(-3, 3) for _ in range(k)]
    rows, rhs = [], []
    for _ in range(n):
        row = [rng.randint(lo, hi) for _ in range(k)]
        while all(c == 0 for c in row):
            row = [rng.randint(lo, hi) for _ in range(k)]
        rows.append(row)
        rhs.append(sum(c * x for c, x in zip(row, solution)))
    return linear_system(rows, rhs)


def gen_random_disks(n: int, seed: int) -> list[Disk]:
    """Random rational disks in a small box; no structure planted."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        x = Fraction(rng.randint(-16, 16), rng.randint(1, 4))
        y = Fraction(rng.randint(-16, 16), rng.randint(1, 4))
        r = Fraction(rng.randint(1, 16), rng.randint(1, 4))
        out.append(Disk(x, y, r))
    return out


def gen_helly_disks(n: int, seed: int) -> list[Disk]:
    """Random disks all containing one planted rational point."""
    rng = random.Random(seed)
    px = Fraction(rng.randint(-8, 8), 2)
    py = Fraction(rng.randint(-8, 8), 2)
    out = []
    for _ in range(n):
        x = Fraction(rng.randint(-16, 16), rng.randint(1, 4))
        y = Fraction(rng.randint(-16, 16), rng.randint(1, 4))
        # |dx| + |dy| bounds the Euclidean distance, so this radius covers p.
        r = abs(x - px) + abs(y - py) + Fraction(rng.randint(1, 8), 4)
        out.append(Disk(x, y, r))
    return out
