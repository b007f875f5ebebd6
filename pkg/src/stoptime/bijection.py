"""Conversions between stopping times and stopping processes, and hitting times.

A stopping process and its stopping time carry the same information: the
time is the first moment the path sits at 0, and the process is the 0/1
indicator that the time still lies strictly in the future.  The two
conversions here realize that correspondence exactly and reject inputs
that fail their defining predicate instead of computing formally on them.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import RejectedInputError
from .filtration import INFINITY, Filtration
from .probability import Verdict
from .processes import (
    BinaryProcess,
    BorelSet,
    RandomTime,
    RealProcess,
    check_process_over,
    check_valid_filtration,
    is_stopping_process,
    is_stopping_time,
    member,
)


def time_from_process(process: BinaryProcess, f: Filtration) -> RandomTime:
    """First time each path is 0; INFINITY for the all-ones paths.

    The input must be a stopping process; the result is then a stopping
    time.  A non-stopping input is rejected: the first-zero formula is
    only meaningful once adaptedness and monotonicity hold.
    """
    verdict = is_stopping_process(process, f)
    if not verdict:
        raise RejectedInputError(f"not a stopping process: {verdict.reason}")
    values = {}
    for a in f.space.atoms:
        values[a] = next(
            (t for t in f.grid.times if process.values[t][a] == 0), INFINITY
        )
    return RandomTime(values)


def process_from_time(rt: RandomTime, f: Filtration) -> BinaryProcess:
    """The 0/1 process that is 1 strictly before rt and 0 from rt on.

    The input must be a stopping time; the result is then a stopping
    process.
    """
    verdict = is_stopping_time(rt, f)
    if not verdict:
        raise RejectedInputError(f"not a stopping time: {verdict.reason}")
    values = {
        t: {a: 1 if rt.values[a] > t else 0 for a in f.space.atoms}
        for t in f.grid.times
    }
    return BinaryProcess(values)


class HittingResult(NamedTuple):
    time: RandomTime
    verdict: Verdict


def hitting_time(
    process: RealProcess | BinaryProcess, target: BorelSet, f: Filtration
) -> HittingResult:
    """First grid time each path's value lies in the target set.

    Defined for any total real-valued process, adapted or not; binary
    processes are read as real-valued.  Alongside the time it returns the
    stopping-time verdict of the result, which is guaranteed to pass
    whenever the process is adapted (first-entry times of adapted
    processes are stopping times on a finite grid).  For a non-adapted
    process the verdict can come back false, diagnostic included.
    """
    check_valid_filtration(f)
    check_process_over(process, f)
    values = {}
    for a in f.space.atoms:
        values[a] = next(
            (t for t in f.grid.times if member(process.values[t][a], target)), INFINITY
        )
    rt = RandomTime(values)
    return HittingResult(rt, is_stopping_time(rt, f))


def roundtrip_time(rt: RandomTime, f: Filtration) -> RandomTime:
    """Map a stopping time to its process and back; the identity."""
    return time_from_process(process_from_time(rt, f), f)


def roundtrip_process(process: BinaryProcess, f: Filtration) -> BinaryProcess:
    """Map a stopping process to its time and back; the identity."""
    return process_from_time(time_from_process(process, f), f)
