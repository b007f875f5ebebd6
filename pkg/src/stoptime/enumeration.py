"""Exhaustive enumeration of stopping objects, and the cardinality check.

Stopping times correspond one-to-one to monotone chains of measurable
events: A(t) = "stopped by t" must be a union of level-t blocks and can
only grow along the grid.  Enumerating those chains directly is
exponentially cheaper than filtering all candidate functions, which is
why the raw filter can serve as an independent oracle in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .bijection import process_from_time, time_from_process
from .errors import ResourceCapError
from .filtration import INFINITY, Filtration
from .processes import (
    BinaryProcess,
    RandomTime,
    check_valid_filtration,
    processes_equal_as,
    times_equal_as,
)

# Guard for exhaustive work: the product of per-level block counts must not
# exceed the cap, and neither may the number of enumerated chains.
DEFAULT_CAP = 10**7


def _chains(f: Filtration, cap: int) -> Iterator[tuple[frozenset[str], ...]]:
    """Yield every monotone chain of stopped-events, one frozenset per level."""
    product = 1
    for level in f.levels:
        product *= len(level.blocks)
    if product > cap:
        raise ResourceCapError(
            f"block-count product {product} exceeds the enumeration cap {cap}"
        )
    levels = f.levels
    emitted = 0

    def rec(i: int, stopped: frozenset[str], acc: list[frozenset[str]]):
        nonlocal emitted
        if i == len(levels):
            emitted += 1
            if emitted > cap:
                raise ResourceCapError(f"more than {cap} chains; enumeration aborted")
            yield tuple(acc)
            return
        # A valid filtration makes each block either inside or disjoint from
        # the already-stopped event, so disjointness picks the free blocks.
        available = [b for b in levels[i].block_sets if stopped.isdisjoint(b)]
        for mask in range(1 << len(available)):
            grown = stopped
            for j, block in enumerate(available):
                if mask >> j & 1:
                    grown = grown | block
            acc.append(grown)
            yield from rec(i + 1, grown, acc)
            acc.pop()

    yield from rec(0, frozenset(), [])


def _time_sort_key(f: Filtration):
    atoms = f.space.atoms
    return lambda rt: tuple(rt.values[a] for a in atoms)


def _process_sort_key(f: Filtration):
    atoms = f.space.atoms
    times = f.grid.times
    return lambda x: tuple(x.values[t][a] for a in atoms for t in times)


def enumerate_stopping_times(f: Filtration, cap: int = DEFAULT_CAP) -> list[RandomTime]:
    """All stopping times for f, each once, lexicographically by atom values.

    The order compares the value vectors (atoms in space order) with
    INFINITY greatest, so output is deterministic and byte-stable once
    serialized.
    """
    check_valid_filtration(f)
    times = f.grid.times
    out = []
    for chain in _chains(f, cap):
        values = {}
        for a in f.space.atoms:
            values[a] = next(
                (times[i] for i in range(len(times)) if a in chain[i]), INFINITY
            )
        out.append(RandomTime(values))
    out.sort(key=_time_sort_key(f))
    return out


def enumerate_stopping_processes(f: Filtration, cap: int = DEFAULT_CAP) -> list[BinaryProcess]:
    """All stopping processes for f, in an order aligned with the times.

    Sorted lexicographically by the 0/1 path matrix (atom-major, times
    ascending), which orders processes exactly like their first-zero
    times; position i here corresponds to position i of
    enumerate_stopping_times.
    """
    check_valid_filtration(f)
    times = f.grid.times
    out = []
    for chain in _chains(f, cap):
        values = {
            t: {a: 0 if a in chain[i] else 1 for a in f.space.atoms}
            for i, t in enumerate(times)
        }
        out.append(BinaryProcess(values))
    out.sort(key=_process_sort_key(f))
    return out


@dataclass
class RoundtripFailure:
    """One object whose double conversion did not reproduce it."""

    kind: str  # "time" or "process"
    original: RandomTime | BinaryProcess
    roundtripped: RandomTime | BinaryProcess | None = None
    error: str | None = None


@dataclass
class EnumerationReport:
    """Counts of both enumerations plus any round-trip failures.

    When the failure list is empty the two counts agree: the first-zero
    map is a bijection between stopping processes and stopping times.
    """

    stopping_time_count: int
    stopping_process_count: int
    roundtrip_failures: list[RoundtripFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.roundtrip_failures
            and self.stopping_time_count == self.stopping_process_count
        )


def check_bijection(
    f: Filtration, cap: int = DEFAULT_CAP, almost_sure: bool = False
) -> EnumerationReport:
    """Enumerate everything and round-trip every object both ways.

    With almost_sure=True, round-trip results are compared modulo null
    events instead of pointwise (exact comparison is the default: the
    bijection holds without any almost-sure identification).
    """
    times = enumerate_stopping_times(f, cap=cap)
    processes = enumerate_stopping_processes(f, cap=cap)
    failures: list[RoundtripFailure] = []
    space = f.space
    for rt in times:
        try:
            back = time_from_process(process_from_time(rt, f), f)
        except Exception as exc:  # conversion refused one of its own inputs
            failures.append(RoundtripFailure("time", rt, error=str(exc)))
            continue
        same = times_equal_as(back, rt, space) if almost_sure else back == rt
        if not same:
            failures.append(RoundtripFailure("time", rt, roundtripped=back))
    for proc in processes:
        try:
            back = process_from_time(time_from_process(proc, f), f)
        except Exception as exc:
            failures.append(RoundtripFailure("process", proc, error=str(exc)))
            continue
        same = processes_equal_as(back, proc, space) if almost_sure else back == proc
        if not same:
            failures.append(RoundtripFailure("process", proc, roundtripped=back))
    return EnumerationReport(len(times), len(processes), failures)
