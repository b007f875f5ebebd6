"""Random times, binary and real processes, and the stopping predicates.

A random time maps each atom to a grid time or INFINITY.  A binary process
maps (grid time, atom) to 0 or 1.  The two verification predicates decide:

* stopping time: the event "stopped by t" is measurable at every grid time;
* stopping process: each time-section is measurable at its own time
  (adapted) and every path is non-increasing.

No separate right-continuity check exists because on a finite grid every
path trivially has it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainMismatchError, RejectedInputError
from .filtration import INFINITY, ExtendedTime, Filtration, coerce_time, format_time, validate_filtration
from .probability import SampleSpace, Verdict, as_fraction, format_event, is_measurable, null_event


class RandomTime:
    """A map atom -> grid time or INFINITY; a candidate stopping time."""

    def __init__(self, values: Mapping[str, object]):
        self.values: dict[str, ExtendedTime] = {
            a: coerce_time(t) for a, t in values.items()
        }
        if not self.values:
            raise DomainMismatchError("random time must be defined on at least one atom")

    def value(self, atom: str) -> ExtendedTime:
        return self.values[atom]

    def __eq__(self, other) -> bool:
        return isinstance(other, RandomTime) and self.values == other.values

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}={format_time(t)}" for a, t in sorted(self.values.items()))
        return f"RandomTime({inner})"


def _normalize_sections(values, coerce, kind):
    out: dict[Fraction, dict[str, object]] = {}
    atom_keys: frozenset[str] | None = None
    for t, section in values.items():
        tt = as_fraction(t)
        sec = {a: coerce(v) for a, v in section.items()}
        if atom_keys is None:
            atom_keys = frozenset(sec)
        elif frozenset(sec) != atom_keys:
            raise DomainMismatchError(f"{kind} sections define different atom sets")
        out[tt] = sec
    if not out:
        raise DomainMismatchError(f"{kind} must have at least one time section")
    return out


class BinaryProcess:
    """A map (grid time, atom) -> {0, 1}; a candidate stopping process."""

    def __init__(self, values: Mapping[object, Mapping[str, object]]):
        def coerce(v):
            if isinstance(v, bool) or not isinstance(v, int) or v not in (0, 1):
                raise DomainMismatchError(f"binary process values must be 0 or 1, got {v!r}")
            return v

        self.values = _normalize_sections(values, coerce, "binary process")

    def section(self, t) -> dict[str, int]:
        return self.values[as_fraction(t)]

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryProcess) and self.values == other.values

    def __repr__(self) -> str:
        return f"BinaryProcess({len(self.values)} times x {len(next(iter(self.values.values())))} atoms)"


class RealProcess:
    """A map (grid time, atom) -> exact rational value."""

    def __init__(self, values: Mapping[object, Mapping[str, object]]):
        self.values = _normalize_sections(values, as_fraction, "real process")

    @classmethod
    def from_binary(cls, process: BinaryProcess) -> "RealProcess":
        return cls(process.values)

    def section(self, t) -> dict[str, Fraction]:
        return self.values[as_fraction(t)]

    def __eq__(self, other) -> bool:
        return isinstance(other, RealProcess) and self.values == other.values

    def __repr__(self) -> str:
        return f"RealProcess({len(self.values)} times x {len(next(iter(self.values.values())))} atoms)"


def _coerce_endpoint(value) -> ExtendedTime:
    if value == INFINITY or value == -INFINITY:
        return value
    return as_fraction(value)


def format_endpoint(value: ExtendedTime) -> str:
    if value == -INFINITY:
        return "-inf"
    return format_time(value)


@dataclass(frozen=True)
class Interval:
    """One interval of a BorelSet; endpoints rational or +/-infinity."""

    lo: ExtendedTime
    hi: ExtendedTime
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", _coerce_endpoint(self.lo))
        object.__setattr__(self, "hi", _coerce_endpoint(self.hi))
        if not self.lo <= self.hi:
            raise DomainMismatchError(
                f"interval endpoints out of order: {format_endpoint(self.lo)} > {format_endpoint(self.hi)}"
            )
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise DomainMismatchError("a degenerate interval must be closed on both sides")

    def __contains__(self, value) -> bool:
        v = as_fraction(value)
        above = v > self.lo or (v == self.lo and not self.lo_open)
        below = v < self.hi or (v == self.hi and not self.hi_open)
        return above and below


class BorelSet:
    """A finite union of intervals and single rational points.

    Canonical form sorts and deduplicates both lists; equality is structural
    on the canonical form (overlapping intervals are not merged).
    """

    def __init__(self, intervals: Iterable[Interval] = (), points: Iterable[object] = ()):
        self.intervals: tuple[Interval, ...] = tuple(
            sorted(set(intervals), key=lambda i: (i.lo, i.lo_open, i.hi, i.hi_open))
        )
        self.points: tuple[Fraction, ...] = tuple(sorted({as_fraction(p) for p in points}))

    @classmethod
    def point(cls, value) -> "BorelSet":
        return cls(points=[value])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BorelSet)
            and self.intervals == other.intervals
            and self.points == other.points
        )

    def __contains__(self, value) -> bool:
        return member(value, self)

    def __repr__(self) -> str:
        parts = [
            ("(" if i.lo_open else "[") + format_endpoint(i.lo) + ", "
            + format_endpoint(i.hi) + (")" if i.hi_open else "]")
            for i in self.intervals
        ]
        parts.extend("{%s}" % p for p in self.points)
        return "BorelSet(" + " u ".join(parts) + ")" if parts else "BorelSet(empty)"


def member(value, target: BorelSet) -> bool:
    """True iff the rational value lies in the interval/point union."""
    v = as_fraction(value)
    return v in target.points or any(v in i for i in target.intervals)


def check_valid_filtration(f: Filtration) -> None:
    """Raise RejectedInputError unless f's levels form a refinement chain."""
    verdict = validate_filtration(f)
    if not verdict:
        raise RejectedInputError(f"filtration invalid: {verdict.reason}")


def check_time_over(rt: RandomTime, f: Filtration) -> None:
    """Raise unless rt is defined on exactly f's atoms with on-grid values."""
    if frozenset(rt.values) != f.space.atom_set:
        raise DomainMismatchError("random time is not defined on exactly the space's atoms")
    for a, t in rt.values.items():
        if t != INFINITY and t not in f.grid:
            raise DomainMismatchError(
                f"time {format_time(t)} of atom {a!r} is not on the grid"
            )


def check_process_over(process: BinaryProcess | RealProcess, f: Filtration) -> None:
    """Raise unless the process is total on exactly grid x atoms."""
    if frozenset(process.values) != frozenset(f.grid.times):
        raise DomainMismatchError("process sections do not match the grid times")
    for section in process.values.values():
        if frozenset(section) != f.space.atom_set:
            raise DomainMismatchError("process section is not defined on exactly the space's atoms")
        break  # sections share one atom set by construction


def is_stopping_time(rt: RandomTime, f: Filtration) -> Verdict:
    """Decide whether rt is a stopping time for the filtration.

    rt passes iff for every grid time t the event {atom : rt(atom) <= t}
    is a union of blocks of the level at t.  On failure the diagnostic
    names the first failing time in grid order and the offending event.
    """
    check_valid_filtration(f)
    check_time_over(rt, f)
    atoms = f.space.atoms
    for t in f.grid.times:
        stopped = frozenset(a for a in atoms if rt.values[a] <= t)
        if not is_measurable(stopped, f.level_at(t)):
            ts = format_time(t)
            return Verdict.failed(
                f"event {{tau <= {ts}}} = {format_event(stopped, atoms)} "
                f"is not measurable w.r.t. the level at t={ts}"
            )
    return Verdict.passed()


def is_stopping_process(process: BinaryProcess, f: Filtration) -> Verdict:
    """Decide whether the 0/1 process is adapted and non-increasing.

    Checked in grid order; at each time, adaptedness of the section first
    (first non-constant block reported), then the monotone step from the
    previous time (first increasing atom in space order reported).
    """
    check_valid_filtration(f)
    check_process_over(process, f)
    atoms = f.space.atoms
    previous = None
    for t in f.grid.times:
        section = process.values[t]
        level = f.level_at(t)
        for block in level.blocks:
            first = section[block[0]]
            if any(section[a] != first for a in block[1:]):
                return Verdict.failed(
                    f"section at t={format_time(t)} is not constant on block "
                    f"{format_event(block, atoms)}"
                )
        if previous is not None:
            prev_t, prev_section = previous
            for a in atoms:
                if section[a] > prev_section[a]:
                    return Verdict.failed(
                        f"path of atom {a!r} increases between t={format_time(prev_t)} "
                        f"and t={format_time(t)}"
                    )
        previous = (t, section)
    return Verdict.passed()


def times_equal_as(first: RandomTime, second: RandomTime, space: SampleSpace) -> bool:
    """Almost-sure equality: the disagreement event has probability 0."""
    for rt in (first, second):
        if frozenset(rt.values) != space.atom_set:
            raise DomainMismatchError("random time is not defined on exactly the space's atoms")
    differ = [a for a in space.atoms if first.values[a] != second.values[a]]
    return null_event(differ, space)


def processes_equal_as(first: BinaryProcess, second: BinaryProcess, space: SampleSpace) -> bool:
    """Almost-sure equality of processes: paths differ only on a null event."""
    if frozenset(first.values) != frozenset(second.values):
        raise DomainMismatchError("processes are defined on different time grids")
    for proc in (first, second):
        for section in proc.values.values():
            if frozenset(section) != space.atom_set:
                raise DomainMismatchError("process section is not defined on exactly the space's atoms")
            break
    differ = [
        a
        for a in space.atoms
        if any(first.values[t][a] != second.values[t][a] for t in first.values)
    ]
    return null_event(differ, space)
