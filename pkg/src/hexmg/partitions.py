"""Cell partitions behind the outer bound and their census arithmetic.

Two partitions of the cell set are used.  The two-colour partition paints
alternating columns red and white; a virtual super receiver observing the red
half can decode everything, which prices the sum gain in conferencing
prelogs.  The four-colour partition places red and blue cells on a sparse
triangular sublattice (index d*d + d + 1), surrounds every red cell with six
pink ones, and leaves the rest white; blue cells are reconstructed rather
than observed, which caps the sum gain by the blue density.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from .lattice import Cell, Network
from .regions import SystemParams

RED = "RED"
WHITE = "WHITE"
PINK = "PINK"
BLUE = "BLUE"

TWO = "two"
FOUR = "four"


@dataclass(frozen=True, eq=False)
class Partition:
    kind: str
    d: Optional[int]
    coloring: Dict[Cell, str]
    census: Dict[str, int]


def _census(coloring: Dict[Cell, str]) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for color in coloring.values():
        out[color] = out.get(color, 0) + 1
    return out


def partition_two(net: Network) -> Partition:
    """Alternating-column two-colouring; red fraction tends to 1/2."""
    coloring = {c: (RED if (c[0] + c[1]) % 2 == 0 else WHITE) for c in net.cells}
    return Partition(kind=TWO, d=None, coloring=coloring, census=_census(coloring))


def partition_four(net: Network, d: int) -> Partition:
    """Red/blue on the sublattice spanned by (d, 1), pink around red."""
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"d must be an integer >= 2, got {d!r}")
    if net.radius < 3 * d:
        raise ValueError(f"lattice radius {net.radius} too small for d={d} (need >= {3 * d})")
    n = d * d + d + 1
    coloring: Dict[Cell, str] = {}
    red_cells: List[Cell] = []
    for (q, r) in net.cells:
        a_num = (d + 1) * q + r
        b_num = d * r - q
        if a_num % n == 0 and b_num % n == 0:
            color = RED if ((a_num // n) + (b_num // n)) % 2 == 0 else BLUE
            coloring[(q, r)] = color
            if color == RED:
                red_cells.append((q, r))
        else:
            coloring[(q, r)] = WHITE
    for c in red_cells:
        for nb in net.rx_neighbors[c]:
            if coloring[nb] == WHITE:
                coloring[nb] = PINK
    return Partition(kind=FOUR, d=d, coloring=coloring, census=_census(coloring))


def fraction_limits(kind: str, d: Optional[int] = None) -> Dict[str, Fraction]:
    """Limiting colour densities on the infinite lattice."""
    if kind == TWO:
        return {RED: Fraction(1, 2), WHITE: Fraction(1, 2)}
    if kind == FOUR:
        if d is None:
            raise ValueError("four-colour limits need d")
        n = d * d + d + 1
        return {
            RED: Fraction(1, 2 * n),
            BLUE: Fraction(1, 2 * n),
            PINK: Fraction(3, n),
            WHITE: Fraction(d * d + d - 3, n),
        }
    raise ValueError(f"unknown partition kind {kind!r}")


@dataclass(frozen=True)
class CensusRow:
    color: str
    count: int
    fraction: Fraction
    limit: Fraction

    @property
    def abs_error(self) -> Fraction:
        return abs(self.fraction - self.limit)


def census_fractions(net: Network, part: Partition, depth: int = 2) -> List[CensusRow]:
    """Interior colour census against the limiting densities."""
    interior = net.interior_cells(depth)
    if not interior:
        raise ValueError("no interior cells at this radius")
    limits = fraction_limits(part.kind, part.d)
    counts = {color: 0 for color in limits}
    for c in interior:
        counts[part.coloring[c]] += 1
    total = len(interior)
    return [
        CensusRow(color, counts[color], Fraction(counts[color], total), limits[color])
        for color in sorted(limits)
    ]


def bound_arithmetic(part: Partition, params: SystemParams) -> Fraction:
    """Per-user sum multiplexing-gain cap evaluated on the finite census."""
    k = len(part.coloring)
    if part.kind == TWO:
        red = part.census.get(RED, 0)
        return Fraction(
            3 * params.m * red, 3 * k
        ) + Fraction(4 * (k - red), 3 * k) * (params.mu_rx + 2 * params.mu_tx)
    if part.kind == FOUR:
        blue = part.census.get(BLUE, 0)
        return params.m * (1 - Fraction(blue, k))
    raise ValueError(f"unknown partition kind {part.kind!r}")
