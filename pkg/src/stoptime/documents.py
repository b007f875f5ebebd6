"""JSON instance documents: parsing, validation and canonical serialization.

One document carries up to six optional sections plus a version tag:

    {
      "version": "1",
      "space":     {"atoms": ["a","b"], "weights": {"a":"1/2","b":"1/2"}},
      "grid":      ["0","1","2"],
      "filtration":{"levels": [[["a","b"]], [["a"],["b"]], [["a"],["b"]]],
                    "terminal": [["a"],["b"]]},
      "time":      {"a":"1", "b":"inf"},
      "process":   {"0":{"a":1,"b":1}, "1":{"a":0,"b":1}, "2":{"a":0,"b":0}},
      "borel_set": {"intervals": [{"lo":"-inf","lo_open":true,
                                   "hi":"0","hi_open":false}],
                    "points": ["0"]}
    }

All rationals are strings ("3", "-1/2"); "inf" marks the never-stopped
time and "inf"/"-inf" unbounded interval ends.  A binary process uses the
JSON integers 0 and 1; a real-valued process uses rational strings.  The
"terminal" partition may be omitted and defaults to all singletons.

Canonical form (what `serialize_document` emits): UTF-8 with non-ASCII
escaped, keys sorted lexicographically, no insignificant whitespace, one
trailing newline, rationals in lowest terms, partitions with atoms sorted
inside blocks and blocks sorted by least atom.  Serialization after
parsing is the identity on canonical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DocumentError, StoptimeError
from .filtration import Filtration, INFINITY, TimeGrid, format_time
from .probability import Partition, SampleSpace
from .processes import BinaryProcess, BorelSet, Interval, RandomTime, RealProcess, format_endpoint

VERSION = "1"
_SECTIONS = ("space", "grid", "filtration", "time", "process", "borel_set")


@dataclass
class InstanceDocument:
    space: SampleSpace | None = None
    grid: TimeGrid | None = None
    filtration: Filtration | None = None
    time: RandomTime | None = None
    process: BinaryProcess | RealProcess | None = None
    borel_set: BorelSet | None = None

    def require(self, *names: str) -> None:
        for name in names:
            if getattr(self, name) is None:
                raise DocumentError(f"document is missing required section '{name}'")


def canonical_json(obj) -> str:
    """Canonical bytes for any JSON-ready object: the one true rendering."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def _rational(value, where: str) -> Fraction:
    if not isinstance(value, str):
        raise DocumentError(f"{where}: expected a rational string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: not a rational: {value!r}") from None


def _extended(value, where: str, allow_negative: bool = False):
    if value == "inf":
        return INFINITY
    if allow_negative and value == "-inf":
        return -INFINITY
    return _rational(value, where)


def _expect_object(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentError(f"{where}: expected an object")
    return value


def _expect_array(value, where: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected an array")
    return value


def _reject_unknown(obj: dict, allowed: tuple[str, ...], where: str) -> None:
    for key in obj:
        if key not in allowed:
            raise DocumentError(f"{where}: unknown field {key!r}")


def _parse_space(raw) -> SampleSpace:
    obj = _expect_object(raw, "space")
    _reject_unknown(obj, ("atoms", "weights"), "space")
    if "atoms" not in obj or "weights" not in obj:
        raise DocumentError("space: both 'atoms' and 'weights' are required")
    atoms = _expect_array(obj["atoms"], "space.atoms")
    weights_raw = _expect_object(obj["weights"], "space.weights")
    weights = {a: _rational(w, f"space.weights[{a!r}]") for a, w in weights_raw.items()}
    try:
        return SampleSpace(atoms, weights)
    except StoptimeError as exc:
        raise DocumentError(f"space: {exc}") from exc


def _parse_grid(raw) -> TimeGrid:
    entries = _expect_array(raw, "grid")
    times = [_rational(t, f"grid[{i}]") for i, t in enumerate(entries)]
    try:
        return TimeGrid(times)
    except StoptimeError as exc:
        raise DocumentError(f"grid: {exc}") from exc


def _parse_partition(raw, where: str, space: SampleSpace) -> Partition:
    blocks = _expect_array(raw, where)
    for i, block in enumerate(blocks):
        for a in _expect_array(block, f"{where}[{i}]"):
            if not isinstance(a, str):
                raise DocumentError(f"{where}[{i}]: atom labels must be strings")
            if a not in space.atom_set:
                raise DocumentError(f"{where}[{i}]: unknown atom {a!r}")
    try:
        partition = Partition(blocks)
    except StoptimeError as exc:
        raise DocumentError(f"{where}: {exc}") from exc
    if partition.universe != space.atom_set:
        missing = sorted(space.atom_set - partition.universe)
        raise DocumentError(f"{where}: atom {missing[0]!r} is not covered")
    return partition


def _parse_filtration(raw, space: SampleSpace, grid: TimeGrid) -> Filtration:
    obj = _expect_object(raw, "filtration")
    _reject_unknown(obj, ("levels", "terminal"), "filtration")
    if "levels" not in obj:
        raise DocumentError("filtration: 'levels' is required")
    levels_raw = _expect_array(obj["levels"], "filtration.levels")
    if len(levels_raw) != len(grid.times):
        raise DocumentError(
            f"filtration: {len(levels_raw)} levels for {len(grid.times)} grid times"
        )
    levels = [
        _parse_partition(level, f"filtration.levels[{i}]", space)
        for i, level in enumerate(levels_raw)
    ]
    terminal = None
    if "terminal" in obj:
        terminal = _parse_partition(obj["terminal"], "filtration.terminal", space)
    try:
        return Filtration(space, grid, levels, terminal)
    except StoptimeError as exc:
        raise DocumentError(f"filtration: {exc}") from exc


def _parse_time(raw, space: SampleSpace, grid: TimeGrid) -> RandomTime:
    obj = _expect_object(raw, "time")
    for a in obj:
        if a not in space.atom_set:
            raise DocumentError(f"time: unknown atom {a!r}")
    for a in space.atoms:
        if a not in obj:
            raise DocumentError(f"time: missing atom {a!r}")
    values = {}
    for a, v in obj.items():
        t = _extended(v, f"time[{a!r}]")
        if t != INFINITY and t not in grid:
            raise DocumentError(f"time[{a!r}]: {v!r} is not on the grid")
        values[a] = t
    return RandomTime(values)


def _parse_process(raw, space: SampleSpace, grid: TimeGrid) -> BinaryProcess | RealProcess:
    obj = _expect_object(raw, "process")
    seen: set[Fraction] = set()
    sections: dict[Fraction, dict[str, object]] = {}
    kinds: set[str] = set()
    for ts, section_raw in obj.items():
        t = _rational(ts, f"process key {ts!r}")
        if t not in grid:
            raise DocumentError(f"process: time {ts!r} is not on the grid")
        section = _expect_object(section_raw, f"process[{ts!r}]")
        for a in section:
            if a not in space.atom_set:
                raise DocumentError(f"process[{ts!r}]: unknown atom {a!r}")
        for a in space.atoms:
            if a not in section:
                raise DocumentError(f"process[{ts!r}]: missing atom {a!r}")
        for a, v in section.items():
            if isinstance(v, bool):
                raise DocumentError(f"process[{ts!r}][{a!r}]: booleans are not values")
            if isinstance(v, int):
                kinds.add("binary")
                if v not in (0, 1):
                    raise DocumentError(f"process[{ts!r}][{a!r}]: binary values must be 0 or 1")
            elif isinstance(v, str):
                kinds.add("real")
                _rational(v, f"process[{ts!r}][{a!r}]")
            else:
                raise DocumentError(f"process[{ts!r}][{a!r}]: unsupported value {v!r}")
        seen.add(t)
        sections[t] = dict(section)
    for t in grid.times:
        if t not in seen:
            raise DocumentError(f"process: missing section for grid time {format_time(t)}")
    if kinds == {"binary"}:
        return BinaryProcess(sections)
    if kinds == {"real"}:
        return RealProcess(sections)
    raise DocumentError("process: mixes integer (binary) and string (real) values")


def _parse_borel(raw) -> BorelSet:
    obj = _expect_object(raw, "borel_set")
    _reject_unknown(obj, ("intervals", "points"), "borel_set")
    intervals = []
    for i, entry in enumerate(_expect_array(obj.get("intervals", []), "borel_set.intervals")):
        where = f"borel_set.intervals[{i}]"
        item = _expect_object(entry, where)
        _reject_unknown(item, ("lo", "lo_open", "hi", "hi_open"), where)
        for key in ("lo", "lo_open", "hi", "hi_open"):
            if key not in item:
                raise DocumentError(f"{where}: field {key!r} is required")
        if not isinstance(item["lo_open"], bool) or not isinstance(item["hi_open"], bool):
            raise DocumentError(f"{where}: 'lo_open' and 'hi_open' must be booleans")
        lo = _extended(item["lo"], f"{where}.lo", allow_negative=True)
        hi = _extended(item["hi"], f"{where}.hi", allow_negative=True)
        try:
            intervals.append(Interval(lo, hi, item["lo_open"], item["hi_open"]))
        except StoptimeError as exc:
            raise DocumentError(f"{where}: {exc}") from exc
    points = [
        _rational(p, f"borel_set.points[{i}]")
        for i, p in enumerate(_expect_array(obj.get("points", []), "borel_set.points"))
    ]
    return BorelSet(intervals, points)


def parse_document(text: str) -> InstanceDocument:
    """Parse and fully validate a JSON instance document.

    Raises DocumentError naming the offending line (for JSON syntax) or
    field (for structural problems, unknown versions and references that
    do not resolve within the document).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    obj = _expect_object(data, "document")
    if "version" not in obj:
        raise DocumentError("document: missing 'version'")
    if obj["version"] != VERSION:
        raise DocumentError(f"document: unknown version {obj['version']!r}")
    _reject_unknown(obj, ("version",) + _SECTIONS, "document")

    doc = InstanceDocument()
    if "space" in obj:
        doc.space = _parse_space(obj["space"])
    if "grid" in obj:
        doc.grid = _parse_grid(obj["grid"])
    for name in ("filtration", "time", "process"):
        if name in obj and (doc.space is None or doc.grid is None):
            raise DocumentError(f"{name}: requires both 'space' and 'grid' sections")
    if "filtration" in obj:
        doc.filtration = _parse_filtration(obj["filtration"], doc.space, doc.grid)
    if "time" in obj:
        doc.time = _parse_time(obj["time"], doc.space, doc.grid)
    if "process" in obj:
        doc.process = _parse_process(obj["process"], doc.space, doc.grid)
    if "borel_set" in obj:
        doc.borel_set = _parse_borel(obj["borel_set"])
    return doc


def _partition_json(partition: Partition) -> list:
    return [list(block) for block in partition.blocks]


def time_to_obj(rt: RandomTime) -> dict:
    return {a: format_time(t) for a, t in rt.values.items()}


def process_to_obj(process: BinaryProcess | RealProcess) -> dict:
    binary = isinstance(process, BinaryProcess)
    return {
        format_time(t): {a: (v if binary else str(v)) for a, v in section.items()}
        for t, section in process.values.items()
    }


def document_to_obj(doc: InstanceDocument) -> dict:
    """The JSON-ready dict for a document (canonical field encodings)."""
    obj: dict = {"version": VERSION}
    if doc.space is not None:
        obj["space"] = {
            "atoms": list(doc.space.atoms),
            "weights": {a: str(w) for a, w in doc.space.weights.items()},
        }
    if doc.grid is not None:
        obj["grid"] = [str(t) for t in doc.grid.times]
    if doc.filtration is not None:
        obj["filtration"] = {
            "levels": [_partition_json(level) for level in doc.filtration.levels],
            "terminal": _partition_json(doc.filtration.terminal),
        }
    if doc.time is not None:
        obj["time"] = time_to_obj(doc.time)
    if doc.process is not None:
        obj["process"] = process_to_obj(doc.process)
    if doc.borel_set is not None:
        obj["borel_set"] = {
            "intervals": [
                {
                    "lo": format_endpoint(i.lo),
                    "lo_open": i.lo_open,
                    "hi": format_endpoint(i.hi),
                    "hi_open": i.hi_open,
                }
                for i in doc.borel_set.intervals
            ],
            "points": [str(p) for p in doc.borel_set.points],
        }
    return obj


def serialize_document(doc: InstanceDocument) -> str:
    """Canonical text for a document; a fixed point of parse-then-serialize."""
    return canonical_json(document_to_obj(doc))
