"""Domain model for line-based transit networks.

A network is a simple undirected graph: stations are nodes, links are
unordered station pairs annotated with the line numbers whose tracks realize
the adjacency. Distances are hop counts; there are no weights.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import DisconnectedError, ValidationError


@dataclass(frozen=True, order=True)
class Line:
    """A numbered, colored transit line."""

    number: int
    color: str = ""

    def __post_init__(self):
        if not 1 <= self.number <= 255:
            raise ValidationError(f"line number {self.number} outside 1..255")


@dataclass(frozen=True)
class Station:
    """A station with a stable id, display name, and the lines serving it."""

    id: str
    name: str
    lines: frozenset[int]

    def __post_init__(self):
        if not self.id:
            raise ValidationError("station id must be non-empty")
        if not self.lines:
            raise ValidationError(f"station {self.id!r} belongs to no line")
        object.__setattr__(self, "lines", frozenset(self.lines))


@dataclass(frozen=True)
class Link:
    """An undirected adjacency between two stations.

    Endpoints are stored in sorted order so the unordered pair has one
    canonical representation. Parallel declarations merge at build time.
    """

    a: str
    b: str
    lines: frozenset[int]

    def __post_init__(self):
        if self.a == self.b:
            raise ValidationError(f"self-loop at station {self.a!r}")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        object.__setattr__(self, "lines", frozenset(self.lines))

    @property
    def key(self) -> tuple[str, str]:
        return (self.a, self.b)


class StationClass(Enum):
    """Degree-based station taxonomy."""

    TERMINAL = "terminal"
    REGULAR = "regular"
    Y_BRANCH = "y_branch"
    CROSS_SECTION = "cross_section"


def _classify(deg: int) -> StationClass:
    if deg <= 1:
        return StationClass.TERMINAL
    if deg == 2:
        return StationClass.REGULAR
    if deg == 3:
        return StationClass.Y_BRANCH
    return StationClass.CROSS_SECTION


@dataclass(frozen=True)
class TransitNetwork:
    """Validated, immutable station graph.

    Construct through :func:`build_network`; the constructor itself performs
    no checking. ``adjacency`` maps every station id to the sorted tuple of
    its neighbors, and ``lines`` is the number -> Line registry.
    """

    stations: Mapping[str, Station]
    links: Mapping[tuple[str, str], Link]
    lines: Mapping[int, Line]
    adjacency: Mapping[str, tuple[str, ...]]

    @property
    def station_ids(self) -> tuple[str, ...]:
        return tuple(self.stations)

    def degree(self, station_id: str) -> int:
        if station_id not in self.adjacency:
            raise ValidationError(f"unknown station id {station_id!r}")
        return len(self.adjacency[station_id])

    def station_lines(self, station_id: str) -> frozenset[int]:
        if station_id not in self.stations:
            raise ValidationError(f"unknown station id {station_id!r}")
        return self.stations[station_id].lines


def build_network(
    stations: Iterable[Station],
    links: Iterable[Link],
    lines: Iterable[Line] | None = None,
) -> TransitNetwork:
    """Validate raw stations/links and assemble a connected simple graph.

    Parallel link declarations on the same unordered pair merge into one link
    with the union of their line sets. Raises :class:`ValidationError` on a
    duplicate station id, an undeclared endpoint, a self-loop, or a link
    claiming a line not shared by both endpoints, and
    :class:`DisconnectedError` (listing components) when the result is not
    connected.
    """
    station_map: dict[str, Station] = {}
    for st in sorted(stations, key=lambda s: s.id):
        if st.id in station_map:
            raise ValidationError(f"duplicate station id {st.id!r}")
        station_map[st.id] = st

    if lines is None:
        numbers = sorted({n for st in station_map.values() for n in st.lines})
        line_map = {n: Line(n) for n in numbers}
    else:
        line_map = {}
        for ln in sorted(lines):
            if ln.number in line_map:
                raise ValidationError(f"duplicate line number {ln.number}")
            line_map[ln.number] = ln
    for st in station_map.values():
        missing = st.lines - line_map.keys()
        if missing:
            raise ValidationError(
                f"station {st.id!r} references undeclared line {sorted(missing)[0]}"
            )

    merged: dict[tuple[str, str], frozenset[int]] = {}
    for lk in links:
        for endpoint in lk.key:
            if endpoint not in station_map:
                raise ValidationError(f"link endpoint {endpoint!r} is not a declared station")
        shared = station_map[lk.a].lines & station_map[lk.b].lines
        stray = lk.lines - shared
        if stray:
            raise ValidationError(
                f"link {lk.a!r}-{lk.b!r} claims line {sorted(stray)[0]},"
                f" which is not shared by both endpoints"
            )
        if not lk.lines:
            raise ValidationError(f"link {lk.a!r}-{lk.b!r} carries no line")
        prev = merged.get(lk.key, frozenset())
        merged[lk.key] = prev | lk.lines

    link_map = {key: Link(key[0], key[1], lns) for key, lns in sorted(merged.items())}

    neighbors: dict[str, set[str]] = {sid: set() for sid in station_map}
    for a, b in link_map:
        neighbors[a].add(b)
        neighbors[b].add(a)
    adjacency = {sid: tuple(sorted(ns)) for sid, ns in neighbors.items()}

    components = _components(adjacency)
    if len(components) > 1:
        raise DisconnectedError(components)

    return TransitNetwork(
        stations=station_map, links=link_map, lines=line_map, adjacency=adjacency
    )


def _components(adjacency: Mapping[str, tuple[str, ...]]) -> list[list[str]]:
    seen: set[str] = set()
    out: list[list[str]] = []
    for start in adjacency:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return sorted(out)


def degree(network: TransitNetwork, station_id: str) -> int:
    """Number of links incident to the station."""
    return network.degree(station_id)


def classify_station(network: TransitNetwork, station_id: str) -> StationClass:
    """Degree taxonomy: 1 terminal, 2 regular, 3 y_branch, >= 4 cross_section."""
    return _classify(network.degree(station_id))


def class_census(network: TransitNetwork) -> dict[StationClass, int]:
    """Count stations per class; absent classes are omitted."""
    counts: dict[StationClass, int] = {}
    for sid in network.stations:
        cls = _classify(len(network.adjacency[sid]))
        counts[cls] = counts.get(cls, 0) + 1
    return counts
