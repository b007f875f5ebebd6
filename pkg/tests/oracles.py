"""Independent ground truth for the enumeration machinery.

The brute-force enumerators ignore the chain structure entirely: they walk
every candidate function and keep the ones the verification predicates
accept.  Exponentially slower than the package's enumerators, which is the
point: any disagreement convicts the clever path.
"""

from itertools import product

from stoptime import (
    BinaryProcess,
    Filtration,
    INFINITY,
    Partition,
    RandomTime,
    SampleSpace,
    is_stopping_process,
    is_stopping_time,
)


def brute_force_stopping_times(f):
    """Filter all (|T|+1)^|atoms| candidate random times, canonical order."""
    atoms = f.space.atoms
    extended = list(f.grid.times) + [INFINITY]
    found = []
    for combo in product(extended, repeat=len(atoms)):
        rt = RandomTime(dict(zip(atoms, combo)))
        if is_stopping_time(rt, f):
            found.append(rt)
    found.sort(key=lambda rt: tuple(rt.values[a] for a in atoms))
    return found


def brute_force_stopping_processes(f):
    """Filter all 2^(|T|*|atoms|) candidate binary processes, canonical order."""
    atoms = f.space.atoms
    times = f.grid.times
    cells = [(t, a) for a in atoms for t in times]
    found = []
    for bits in product((0, 1), repeat=len(cells)):
        values = {t: {} for t in times}
        for (t, a), bit in zip(cells, bits):
            values[t][a] = bit
        x = BinaryProcess(values)
        if is_stopping_process(x, f):
            found.append(x)
    found.sort(key=lambda x: tuple(x.values[t][a] for a in atoms for t in times))
    return found


def all_partitions(items):
    """Every set partition of the items (Bell-number many)."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for sub in all_partitions(rest):
        yield [[head]] + [list(b) for b in sub]
        for i in range(len(sub)):
            yield (
                [list(b) for b in sub[:i]]
                + [list(sub[i]) + [head]]
                + [list(b) for b in sub[i + 1:]]
            )


def relabel_filtration(f, mapping):
    """Apply an atom relabeling consistently to every layer of a filtration."""
    space = SampleSpace(
        [mapping[a] for a in f.space.atoms],
        {mapping[a]: w for a, w in f.space.weights.items()},
    )
    remap = lambda p: Partition([[mapping[a] for a in b] for b in p.blocks])
    return Filtration(space, f.grid, [remap(lvl) for lvl in f.levels], remap(f.terminal))


def refine_filtration(f, extra: Partition):
    """Meet every level (and the terminal) with one fixed partition.

    Taking the common refinement with a fixed partition preserves all the
    refinement relations, so the result is again a valid filtration with
    at least as much information everywhere.
    """
    return Filtration(
        f.space,
        f.grid,
        [lvl.common_refinement(extra) for lvl in f.levels],
        f.terminal.common_refinement(extra),
    )
