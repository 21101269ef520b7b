"""Read and write the ``.net.json`` network definition format.

A network file is one UTF-8 JSON object:

.. code-block:: json

    {
      "name": "Demo",
      "lines": [{"number": 1, "color": "red"}],
      "stations": [{"id": "a", "name": "A", "lines": [1]}],
      "links": [{"from": "a", "to": "b", "line": 1}]
    }

Parsing is strict: unknown fields, duplicate object keys, duplicate ids or
line numbers, and dangling references are all rejected. Parsed documents are
canonical (sections sorted, link endpoints ordered), so serialization is
deterministic and ``parse(serialize(doc)) == doc``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import ParseError
from .model import Line, Link, Station, TransitNetwork, build_network

_BUNDLED_TUSRS = "tusrs.net.json"


@dataclass(frozen=True)
class LineSpec:
    number: int
    color: str


@dataclass(frozen=True)
class StationSpec:
    id: str
    name: str
    lines: tuple[int, ...]


@dataclass(frozen=True)
class LinkSpec:
    """One declared track segment; endpoints stored in sorted order."""

    a: str
    b: str
    line: int


@dataclass(frozen=True)
class NetworkDocument:
    name: str
    lines: tuple[LineSpec, ...]
    stations: tuple[StationSpec, ...]
    links: tuple[LinkSpec, ...]


def _reject_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ParseError(f"duplicate key {key!r}")
        seen.add(key)
    return dict(pairs)


def _expect(obj, field: str, kind: type, where: str):
    if field not in obj:
        raise ParseError(f"{where}: missing field {field!r}")
    value = obj[field]
    if kind is int:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParseError(f"{where}: field {field!r} must be an integer")
    elif not isinstance(value, kind):
        raise ParseError(f"{where}: field {field!r} must be {kind.__name__}")
    return value


def _no_extras(obj: dict, allowed: set[str], where: str) -> None:
    extras = set(obj) - allowed
    if extras:
        raise ParseError(f"{where}: unknown field {sorted(extras)[0]!r}")


def parse_network(text: bytes | str) -> NetworkDocument:
    """Parse a network document, raising :class:`ParseError` with a
    line/column position (syntax) or an offending identifier (references)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc.reason} at byte {exc.start}") from exc
    try:
        raw = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    if not isinstance(raw, dict):
        raise ParseError("document root must be an object")
    _no_extras(raw, {"name", "lines", "stations", "links"}, "document")
    name = _expect(raw, "name", str, "document")
    for section in ("lines", "stations", "links"):
        if not isinstance(raw.get(section), list):
            raise ParseError(f"document: field {section!r} must be a list")

    lines = []
    numbers: set[int] = set()
    for i, entry in enumerate(raw["lines"]):
        where = f"lines[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: must be an object")
        _no_extras(entry, {"number", "color"}, where)
        number = _expect(entry, "number", int, where)
        color = _expect(entry, "color", str, where)
        if number in numbers:
            raise ParseError(f"duplicate line number {number}")
        numbers.add(number)
        lines.append(LineSpec(number=number, color=color))

    stations = []
    ids: set[str] = set()
    for i, entry in enumerate(raw["stations"]):
        where = f"stations[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: must be an object")
        _no_extras(entry, {"id", "name", "lines"}, where)
        sid = _expect(entry, "id", str, where)
        sname = _expect(entry, "name", str, where)
        served = _expect(entry, "lines", list, where)
        if sid in ids:
            raise ParseError(f"duplicate station id {sid!r}")
        ids.add(sid)
        for ln in served:
            if not isinstance(ln, int) or isinstance(ln, bool):
                raise ParseError(f"{where}: line numbers must be integers")
            if ln not in numbers:
                raise ParseError(f"station {sid!r} references unknown line number {ln}")
        stations.append(StationSpec(id=sid, name=sname, lines=tuple(sorted(set(served)))))

    links = []
    for i, entry in enumerate(raw["links"]):
        where = f"links[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: must be an object")
        _no_extras(entry, {"from", "to", "line"}, where)
        frm = _expect(entry, "from", str, where)
        to = _expect(entry, "to", str, where)
        line = _expect(entry, "line", int, where)
        for endpoint in (frm, to):
            if endpoint not in ids:
                raise ParseError(f"link references unknown station id {endpoint!r}")
        if line not in numbers:
            raise ParseError(f"link {frm!r}-{to!r} references unknown line number {line}")
        a, b = (frm, to) if frm <= to else (to, frm)
        links.append(LinkSpec(a=a, b=b, line=line))

    return NetworkDocument(
        name=name,
        lines=tuple(sorted(lines, key=lambda l: l.number)),
        stations=tuple(sorted(stations, key=lambda s: s.id)),
        links=tuple(sorted(set(links), key=lambda l: (l.a, l.b, l.line))),
    )


def serialize_network(doc: NetworkDocument) -> bytes:
    """Canonical UTF-8 rendering; equal documents produce equal bytes."""
    payload = {
        "name": doc.name,
        "lines": [
            {"number": l.number, "color": l.color}
            for l in sorted(doc.lines, key=lambda l: l.number)
        ],
        "stations": [
            {"id": s.id, "name": s.name, "lines": list(s.lines)}
            for s in sorted(doc.stations, key=lambda s: s.id)
        ],
        "links": [
            {"from": l.a, "to": l.b, "line": l.line}
            for l in sorted(set(doc.links), key=lambda l: (l.a, l.b, l.line))
        ],
    }
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def document_to_network(doc: NetworkDocument) -> TransitNetwork:
    """Build the validated graph a document describes."""
    return build_network(
        stations=[Station(s.id, s.name, frozenset(s.lines)) for s in doc.stations],
        links=[Link(l.a, l.b, frozenset({l.line})) for l in doc.links],
        lines=[Line(l.number, l.color) for l in doc.lines],
    )


def load_bundled_tusrs() -> NetworkDocument:
    """The Tehran metro fixture shipped with the package.

    The topology is reconstructed from public route maps of the eight-line
    system; see the README for the reconstruction notes and realized counts.
    """
    data = resources.files("netcentral").joinpath("data", _BUNDLED_TUSRS).read_bytes()
    return parse_network(data)
