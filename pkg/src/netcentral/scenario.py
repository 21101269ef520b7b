"""What-if topology edits: add/remove links, merge co-located stations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .analytics import rank
from .centrality import CentralityTable, all_measures
from .errors import AnalysisError, DisconnectedError, ValidationError
from .model import Link, Station, TransitNetwork, build_network


@dataclass(frozen=True)
class AddLink:
    a: str
    b: str
    line: int


@dataclass(frozen=True)
class RemoveLink:
    a: str
    b: str


@dataclass(frozen=True)
class MergeStations:
    """Collapse two stations into one node carrying both adjacency sets.

    Any direct a-b link disappears; neighbors are rewired to ``new_id``
    (default: ``a``); the merged line set is the union.
    """

    a: str
    b: str
    new_id: str | None = None


Edit = Union[AddLink, RemoveLink, MergeStations]


@dataclass(frozen=True)
class Scenario:
    base: TransitNetwork
    edits: tuple[Edit, ...]
    result: TransitNetwork


@dataclass(frozen=True)
class MeasureDelta:
    """Old/new value and rank for one station under one measure.

    ``old_*`` is None for stations created by a merge; ``new_*`` is None for
    stations removed by one.
    """

    old_value: float | None
    new_value: float | None
    old_rank: int | None
    new_rank: int | None


@dataclass(frozen=True)
class ScenarioDiff:
    scenario: Scenario
    stations: dict[str, dict[str, MeasureDelta]]
    line_means: dict[str, dict[int, tuple[float, float]]]

    def moved(self, measure: str) -> list[tuple[str, MeasureDelta]]:
        """Stations ordered by absolute rank movement, largest first."""
        def movement(item: tuple[str, MeasureDelta]) -> tuple[int, str]:
            delta = item[1]
            if delta.old_rank is None or delta.new_rank is None:
                return (-(10**9), item[0])
            return (-abs(delta.old_rank - delta.new_rank), item[0])

        return sorted(self.stations[measure].items(), key=movement)


def _edit_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def apply_scenario(base: TransitNetwork, edits: list[Edit]) -> Scenario:
    """Apply edits in order and re-validate the outcome.

    Structural mistakes (unknown station, duplicate/absent link, merge id
    collision) and a disconnected outcome raise :class:`AnalysisError`.
    """
    stations: dict[str, Station] = dict(base.stations)
    links: dict[tuple[str, str], frozenset[int]] = {
        key: lk.lines for key, lk in base.links.items()
    }

    for edit in edits:
        if isinstance(edit, AddLink):
            _require_station(stations, edit.a)
            _require_station(stations, edit.b)
            if edit.a == edit.b:
                raise AnalysisError(f"cannot link station {edit.a!r} to itself")
            key = _edit_key(edit.a, edit.b)
            if key in links:
                raise AnalysisError(f"link {key[0]!r}-{key[1]!r} already exists")
            shared = stations[edit.a].lines & stations[edit.b].lines
            if edit.line not in shared:
                raise AnalysisError(
                    f"line {edit.line} does not serve both {edit.a!r} and {edit.b!r}"
                )
            links[key] = frozenset({edit.line})
        elif isinstance(edit, RemoveLink):
            key = _edit_key(edit.a, edit.b)
            if key not in links:
                raise AnalysisError(f"no link {key[0]!r}-{key[1]!r} to remove")
            del links[key]
        elif isinstance(edit, MergeStations):
            _require_station(stations, edit.a)
            _require_station(stations, edit.b)
            if edit.a == edit.b:
                raise AnalysisError(f"cannot merge station {edit.a!r} with itself")
            new_id = edit.new_id if edit.new_id is not None else edit.a
            if new_id in stations and new_id not in (edit.a, edit.b):
                raise AnalysisError(f"merge target id {new_id!r} already exists")
            sa, sb = stations[edit.a], stations[edit.b]
            merged = Station(id=new_id, name=sa.name, lines=sa.lines | sb.lines)
            rewired: dict[tuple[str, str], frozenset[int]] = {}
            for (a, b), lns in links.items():
                ends = {edit.a: new_id, edit.b: new_id}
                na, nb = ends.get(a, a), ends.get(b, b)
                if na == nb:
                    continue
                key = _edit_key(na, nb)
                rewired[key] = rewired.get(key, frozenset()) | lns
            del stations[edit.a]
            del stations[edit.b]
            stations[new_id] = merged
            links = rewired
        else:
            raise AnalysisError(f"unsupported edit {edit!r}")

    try:
        result = build_network(
            stations.values(),
            [Link(a, b, lns) for (a, b), lns in links.items()],
            lines=base.lines.values(),
        )
    except DisconnectedError as exc:
        raise AnalysisError(f"edits disconnect the network: {exc}") from exc
    except ValidationError as exc:
        raise AnalysisError(f"edits produce an invalid network: {exc}") from exc
    return Scenario(base=base, edits=tuple(edits), result=result)


def _require_station(stations: dict[str, Station], sid: str) -> None:
    if sid not in stations:
        raise AnalysisError(f"unknown station id {sid!r}")


def scenario_diff(scenario: Scenario) -> ScenarioDiff:
    """Full before/after comparison of every node measure.

    Station deltas carry values and competition ranks on each side; line
    means average a measure over every station serving the line.
    """
    before = all_measures(scenario.base)
    after = all_measures(scenario.result)

    stations: dict[str, dict[str, MeasureDelta]] = {}
    line_means: dict[str, dict[int, tuple[float, float]]] = {}
    for measure in CentralityTable.NODE_MEASURES:
        old_vals = before.node_values(measure)
        new_vals = after.node_values(measure)
        old_rank = {e.station: e.rank for e in rank(before, measure).entries}
        new_rank = {e.station: e.rank for e in rank(after, measure).entries}
        per_station = {}
        for sid in sorted(set(old_vals) | set(new_vals)):
            per_station[sid] = MeasureDelta(
                old_value=_maybe_float(old_vals.get(sid)),
                new_value=_maybe_float(new_vals.get(sid)),
                old_rank=old_rank.get(sid),
                new_rank=new_rank.get(sid),
            )
        stations[measure] = per_station
        line_means[measure] = {
            num: (
                _line_mean(scenario.base, old_vals, num),
                _line_mean(scenario.result, new_vals, num),
            )
            for num in sorted(scenario.base.lines)
        }
    return ScenarioDiff(scenario=scenario, stations=stations, line_means=line_means)


def _maybe_float(value) -> float | None:
    return None if value is None else float(value)


def _line_mean(network: TransitNetwork, values: dict[str, float], line: int) -> float:
    members = [values[sid] for sid, st in network.stations.items() if line in st.lines]
    if not members:
        return float("nan")
    return float(sum(members) / len(members))
