"""Time grids and filtrations as refinement chains of partitions."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import DomainMismatchError
from .probability import Partition, SampleSpace, Verdict, as_fraction, refines

# Extended time value for "never stopped".  Exactly representable, compares
# correctly against every Fraction, and never results from arithmetic here.
INFINITY: float = math.inf

ExtendedTime = Fraction | float


def coerce_time(value) -> ExtendedTime:
    """Coerce a grid time or INFINITY; finite floats are rejected."""
    if value == INFINITY:
        return INFINITY
    return as_fraction(value)


def format_time(t: ExtendedTime) -> str:
    """Canonical text for a time: 'inf', or the rational as '3' / '-1/2'."""
    return "inf" if t == INFINITY else str(t)


class TimeGrid:
    """A finite, strictly increasing grid of exact rational time points."""

    def __init__(self, times: Iterable[object]):
        self.times: tuple[Fraction, ...] = tuple(as_fraction(t) for t in times)
        if not self.times:
            raise DomainMismatchError("time grid must contain at least one time")
        for earlier, later in zip(self.times, self.times[1:]):
            if not earlier < later:
                raise DomainMismatchError(
                    f"grid times must be strictly increasing, got {earlier} then {later}"
                )
        self._index = {t: i for i, t in enumerate(self.times)}

    def __contains__(self, t) -> bool:
        return t in self._index

    def index(self, t: Fraction) -> int:
        try:
            return self._index[t]
        except KeyError:
            raise DomainMismatchError(f"time {format_time(t)} is not on the grid") from None

    def __len__(self) -> int:
        return len(self.times)

    def __eq__(self, other) -> bool:
        return isinstance(other, TimeGrid) and self.times == other.times

    def __repr__(self) -> str:
        return f"TimeGrid([{', '.join(format_time(t) for t in self.times)}])"


class Filtration:
    """A sample space, a grid, one partition per grid time, and a terminal one.

    Construction checks only structure (one level per time, every partition
    over the space's atoms).  Whether the levels actually refine each other
    in time order is a separate question answered by `validate_filtration`,
    so that invalid chains can be represented and diagnosed.

    The terminal partition stands for the information available at time
    +infinity and defaults to the all-singletons partition.
    """

    def __init__(
        self,
        space: SampleSpace,
        grid: TimeGrid,
        levels: Iterable[Partition],
        terminal: Partition | None = None,
    ):
        self.space = space
        self.grid = grid
        self.levels = tuple(levels)
        self.terminal = terminal if terminal is not None else Partition.singletons(space.atoms)
        if len(self.levels) != len(grid.times):
            raise DomainMismatchError(
                f"{len(self.levels)} levels for {len(grid.times)} grid times"
            )
        for t, level in zip(grid.times, self.levels):
            if level.universe != space.atom_set:
                raise DomainMismatchError(
                    f"level at t={format_time(t)} does not partition the sample space"
                )
        if self.terminal.universe != space.atom_set:
            raise DomainMismatchError("terminal level does not partition the sample space")

    def level_at(self, t: ExtendedTime) -> Partition:
        """The partition for time t; t must be a grid time or INFINITY.

        Times between grid points are a domain error: the chain is defined
        only on the grid and is not silently extended.
        """
        if t == INFINITY:
            return self.terminal
        return self.levels[self.grid.index(coerce_time(t))]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Filtration)
            and self.space == other.space
            and self.grid == other.grid
            and self.levels == other.levels
            and self.terminal == other.terminal
        )

    def __repr__(self) -> str:
        return f"Filtration({self.space!r}, {self.grid!r}, {len(self.levels)} levels)"


def validate_filtration(f: Filtration) -> Verdict:
    """Check that information grows along the grid.

    Passes iff each level refines every earlier level and the terminal
    partition refines every level.  Consecutive checks suffice because
    refinement is transitive; the diagnostic names the first violating
    pair of times in grid order.
    """
    times = f.grid.times
    for i in range(len(times) - 1):
        if not refines(f.levels[i + 1], f.levels[i]):
            return Verdict.failed(
                f"level at t={format_time(times[i + 1])} does not refine "
                f"level at t={format_time(times[i])}"
            )
    for t, level in zip(times, f.levels):
        if not refines(f.terminal, level):
            return Verdict.failed(
                f"terminal level does not refine level at t={format_time(t)}"
            )
    return Verdict.passed()
