"""Seeded deterministic generators for test corpora.

All randomness comes from SplitMix64, a tiny published 64-bit mixing
generator, so any seed reproduces the same instance bit-for-bit across
platforms and implementations.  Distributions are unspecified and may not
be uniform; validity and determinism are the only contracts.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainMismatchError
from .filtration import Filtration, INFINITY, TimeGrid
from .probability import Partition, SampleSpace, as_fraction
from .processes import BorelSet, Interval, RandomTime, RealProcess, check_valid_filtration

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state advances by the golden-gamma, output is mixed."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def below(self, n: int) -> int:
        """Integer in [0, n); modulo bias is irrelevant for test fuel."""
        return self.next_u64() % n


def _atom_label(i: int) -> str:
    return chr(ord("a") + i) if i < 26 else f"x{i}"


def _split_one_block(partition: Partition, rng: SplitMix64) -> Partition:
    """Split one random block with >= 2 atoms into two; identity if none."""
    splittable = [i for i, b in enumerate(partition.blocks) if len(b) >= 2]
    if not splittable:
        return partition
    target = splittable[rng.below(len(splittable))]
    block = partition.blocks[target]
    mask = 1 + rng.below((1 << len(block)) - 2)  # proper nonempty subset
    taken = [a for j, a in enumerate(block) if mask >> j & 1]
    left = [a for j, a in enumerate(block) if not mask >> j & 1]
    blocks = [list(b) for k, b in enumerate(partition.blocks) if k != target]
    return Partition(blocks + [taken, left])


def gen_filtration(seed: int, max_atoms: int, max_times: int) -> Filtration:
    """A random valid filtration: a coarse start, then random block splits.

    Valid by construction (each level only ever splits the previous one),
    with occasional zero-weight atoms so almost-sure comparison has
    something to chew on.
    """
    if max_atoms < 1 or max_times < 1:
        raise DomainMismatchError("generator bounds must be at least 1")
    rng = SplitMix64(seed)
    n_atoms = 1 + rng.below(max_atoms)
    n_times = 1 + rng.below(max_times)
    atoms = [_atom_label(i) for i in range(n_atoms)]

    numerators = [rng.below(5) for _ in atoms]
    if not any(numerators):
        numerators[0] = 1
    total = sum(numerators)
    space = SampleSpace(atoms, {a: Fraction(k, total) for a, k in zip(atoms, numerators)})

    t = Fraction(rng.below(5) - 2)
    times = [t]
    for _ in range(n_times - 1):
        t = t + Fraction(1 + rng.below(4), 1 + rng.below(3))
        times.append(t)
    grid = TimeGrid(times)

    groups = 1 + rng.below(n_atoms)
    assignment: dict[int, list[str]] = {}
    for a in atoms:
        assignment.setdefault(rng.below(groups), []).append(a)
    level = Partition(assignment.values())

    levels = [level]
    for _ in range(n_times - 1):
        for _ in range(rng.below(3)):
            level = _split_one_block(level, rng)
        levels.append(level)
    terminal = level
    for _ in range(rng.below(3)):
        terminal = _split_one_block(terminal, rng)
    return Filtration(space, grid, levels, terminal)


def gen_stopping_time(seed: int, f: Filtration) -> RandomTime:
    """A random stopping time, valid by construction.

    Walks the grid; at each time every still-running block of that level
    stops with probability 1/3, so the stopped-by event is always a union
    of current-level blocks.
    """
    check_valid_filtration(f)
    rng = SplitMix64(seed)
    stopped: set[str] = set()
    values: dict[str, object] = {}
    for t in f.grid.times:
        for block in f.level_at(t).block_sets:
            if stopped.isdisjoint(block) and rng.below(3) == 0:
                stopped |= block
                for a in block:
                    values[a] = t
    for a in f.space.atoms:
        values.setdefault(a, INFINITY)
    return RandomTime(values)


def gen_adapted_real_process(seed: int, f: Filtration, value_range=(0, 1)) -> RealProcess:
    """A random real process, adapted by construction.

    Each (time, block) pair of the corresponding level draws one rational
    value on a 1/16 lattice of the given [lo, hi] range, so every section
    is block-constant.
    """
    check_valid_filtration(f)
    lo, hi = (as_fraction(v) for v in value_range)
    if lo > hi:
        raise DomainMismatchError(f"empty value range: {lo} > {hi}")
    rng = SplitMix64(seed)
    values: dict[Fraction, dict[str, Fraction]] = {}
    for t in f.grid.times:
        section: dict[str, Fraction] = {}
        for block in f.level_at(t).blocks:
            v = lo + (hi - lo) * Fraction(rng.below(17), 16)
            for a in block:
                section[a] = v
        values[t] = section
    return RealProcess(values)


def gen_borel_set(seed: int) -> BorelSet:
    """A small random interval/point union with rational endpoints."""
    rng = SplitMix64(seed)

    def small_rational() -> Fraction:
        return Fraction(rng.below(9) - 4, 1 + rng.below(2))

    intervals = []
    for _ in range(rng.below(3)):
        lo = -INFINITY if rng.below(4) == 0 else small_rational()
        hi = INFINITY if rng.below(4) == 0 else small_rational()
        if lo != -INFINITY and hi != INFINITY and lo > hi:
            lo, hi = hi, lo
        if lo == hi:
            lo_open = hi_open = False
        else:
            lo_open = rng.below(2) == 1
            hi_open = rng.below(2) == 1
        intervals.append(Interval(lo, hi, lo_open, hi_open))
    points = [small_rational() for _ in range(rng.below(3))]
    return BorelSet(intervals, points)
