"""Rankings, per-line summaries, and measure correlation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .centrality import CentralityTable
from .errors import UsageError, ValidationError
from .model import Line, TransitNetwork

#: Sort direction per measure: eccentricity is better when small.
DIRECTIONS = {
    "degree": "descending",
    "closeness": "descending",
    "betweenness": "descending",
    "eccentricity": "ascending",
}


@dataclass(frozen=True)
class RankedEntry:
    rank: int
    station: str
    value: float


@dataclass(frozen=True)
class RankedList:
    measure: str
    direction: str
    entries: tuple[RankedEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def rank_of(self, station: str) -> int:
        for e in self.entries:
            if e.station == station:
                return e.rank
        raise ValidationError(f"station {station!r} not in ranking")


@dataclass(frozen=True)
class LineSummary:
    """Five-number summary of one measure over one line's stations."""

    line: Line
    measure: str
    min: float
    q1: float
    median: float
    q3: float
    max: float
    station_count: int


def rank(table: CentralityTable, measure: str) -> RankedList:
    """Competition-ranked stations for a measure.

    Ties share the smaller rank and are listed in station-id order, so the
    result is deterministic for equal inputs.
    """
    values = table.node_values(measure)
    direction = DIRECTIONS[measure]
    sign = -1.0 if direction == "descending" else 1.0
    items = sorted(values.items(), key=lambda kv: (sign * kv[1], kv[0]))

    entries = []
    prev_value: float | None = None
    prev_rank = 0
    for position, (sid, val) in enumerate(items, start=1):
        r = prev_rank if val == prev_value else position
        entries.append(RankedEntry(rank=r, station=sid, value=float(val)))
        prev_value, prev_rank = val, r
    return RankedList(measure=measure, direction=direction, entries=tuple(entries))


def top_fraction(ranked: RankedList, fraction: float) -> RankedList:
    """First ceil(fraction * n) entries, ranks preserved."""
    if not 0.0 < fraction <= 1.0:
        raise UsageError(f"fraction {fraction} outside (0, 1]")
    keep = math.ceil(fraction * len(ranked.entries))
    return RankedList(ranked.measure, ranked.direction, ranked.entries[:keep])


def top_count(ranked: RankedList, count: int) -> RankedList:
    """First ``count`` entries, ranks preserved."""
    if count < 1:
        raise UsageError(f"count {count} must be positive")
    return RankedList(ranked.measure, ranked.direction, ranked.entries[:count])


def line_summary(
    network: TransitNetwork, table: CentralityTable, line: int, measure: str
) -> LineSummary:
    """Five-number summary over the stations served by one line.

    Quartiles use linear interpolation at positions p*(n-1), i.e. numpy's
    default scheme. Transfer stations count toward every line they serve.
    """
    if line not in network.lines:
        raise ValidationError(f"unknown line {line}")
    values = table.node_values(measure)
    members = [values[sid] for sid, st in network.stations.items() if line in st.lines]
    if not members:
        raise ValidationError(f"line {line} has no stations")
    q = np.quantile(np.asarray(members, dtype=np.float64), [0.0, 0.25, 0.5, 0.75, 1.0])
    return LineSummary(
        line=network.lines[line],
        measure=measure,
        min=float(q[0]),
        q1=float(q[1]),
        median=float(q[2]),
        q3=float(q[3]),
        max=float(q[4]),
        station_count=len(members),
    )


def rank_correlation(table: CentralityTable, x: str, y: str) -> float:
    """Spearman rank correlation of two measures' raw values.

    Values are compared on average ranks (ties expected in hop-count
    measures). Directions are not flipped: a negative result for closeness
    versus eccentricity means close-in stations reach everything sooner.
    """
    xs = table.node_values(x)
    ys = table.node_values(y)
    order = sorted(xs)
    if len(order) < 3:
        raise ValidationError("rank correlation needs at least 3 stations")
    a = np.array([float(xs[s]) for s in order])
    b = np.array([float(ys[s]) for s in order])
    rho = stats.spearmanr(a, b).statistic
    if math.isnan(rho):
        raise ValidationError(f"correlation of {x!r} and {y!r} is undefined (constant measure)")
    return float(rho)
