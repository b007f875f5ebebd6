"""Finite sample spaces, partitions as sigma-algebras, and measurability.

On a finite sample space every sigma-algebra is generated by a unique
partition of the atoms, so partitions are the only representation of
sigma-algebras used here.  Probabilities are exact rationals; there is no
floating point anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainMismatchError

Event = frozenset[str]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like '1/4' to Fraction.

    Floats are rejected: exact arithmetic is a package-wide contract and
    accepting binary floats would silently break it.
    """
    if isinstance(value, float):
        raise DomainMismatchError(
            f"floating-point value {value!r} rejected; use int, Fraction or 'p/q' string"
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DomainMismatchError(f"not a rational value: {value!r}") from exc


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome of a check, plus a diagnostic when it fails.

    Truthiness follows ``ok``, so verdicts can be used directly in
    ``assert``/``if``; ``reason`` is None exactly when the check passed.
    """

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def failed(cls, reason: str) -> "Verdict":
        return cls(False, reason)


class SampleSpace:
    """A finite sample space with exact rational probability weights.

    ``atoms`` keeps its construction order (used for deterministic output);
    weights must be nonnegative and sum to exactly 1.  Zero-weight atoms are
    allowed; they are what makes almost-sure comparison non-trivial.
    """

    def __init__(self, atoms: Iterable[str], weights: Mapping[str, object]):
        self.atoms = tuple(atoms)
        if not self.atoms:
            raise DomainMismatchError("sample space must contain at least one atom")
        for a in self.atoms:
            if not isinstance(a, str) or not a:
                raise DomainMismatchError(f"atom labels must be nonempty strings, got {a!r}")
        if len(set(self.atoms)) != len(self.atoms):
            raise DomainMismatchError("atom labels must be pairwise distinct")
        missing = [a for a in self.atoms if a not in weights]
        if missing:
            raise DomainMismatchError(f"missing weight for atom {missing[0]!r}")
        unknown = [a for a in weights if a not in set(self.atoms)]
        if unknown:
            raise DomainMismatchError(f"weight given for unknown atom {unknown[0]!r}")
        self.weights = {a: as_fraction(weights[a]) for a in self.atoms}
        for a, w in self.weights.items():
            if w < 0:
                raise DomainMismatchError(f"negative weight {w} for atom {a!r}")
        total = sum(self.weights.values())
        if total != 1:
            raise DomainMismatchError(f"weights must sum to exactly 1, got {total}")

    @property
    def atom_set(self) -> frozenset[str]:
        return frozenset(self.atoms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SampleSpace)
            and self.atoms == other.atoms
            and self.weights == other.weights
        )

    def __repr__(self) -> str:
        return f"SampleSpace({list(self.atoms)!r})"


class Partition:
    """A partition of a finite set of atoms; stands for a sigma-algebra.

    Canonical form: atoms sorted within each block, blocks sorted by their
    least atom.  Two partitions are equal iff they induce the same
    equivalence relation, and equality is plain structural comparison.
    """

    def __init__(self, blocks: Iterable[Iterable[str]]):
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        if not canon:
            raise DomainMismatchError("partition must have at least one block")
        atoms: list[str] = []
        for b in canon:
            if not b:
                raise DomainMismatchError("partition blocks must be nonempty")
            for a in b:
                if not isinstance(a, str):
                    raise DomainMismatchError(f"atom labels must be strings, got {a!r}")
            atoms.extend(b)
        if len(set(atoms)) != len(atoms):
            raise DomainMismatchError("partition blocks must be pairwise disjoint")
        self.blocks: tuple[tuple[str, ...], ...] = canon
        self.block_sets: tuple[frozenset[str], ...] = tuple(frozenset(b) for b in canon)
        self.universe: frozenset[str] = frozenset(atoms)
        self.atom_to_block: dict[str, int] = {
            a: i for i, b in enumerate(canon) for a in b
        }

    @classmethod
    def trivial(cls, atoms: Iterable[str]) -> "Partition":
        """The one-block partition {Omega}: no information."""
        return cls([tuple(atoms)])

    @classmethod
    def singletons(cls, atoms: Iterable[str]) -> "Partition":
        """The all-singletons partition: full information."""
        return cls([(a,) for a in atoms])

    def common_refinement(self, other: "Partition") -> "Partition":
        """Coarsest partition refining both (blockwise intersections)."""
        if self.universe != other.universe:
            raise DomainMismatchError("partitions are over different atom sets")
        pieces: dict[tuple[int, int], list[str]] = {}
        for a in self.universe:
            pieces.setdefault((self.atom_to_block[a], other.atom_to_block[a]), []).append(a)
        return Partition(pieces.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        inner = "|".join("{" + ",".join(b) + "}" for b in self.blocks)
        return f"Partition({inner})"


def format_event(event: Iterable[str], order: Iterable[str]) -> str:
    """Render an event as '{a, c}' with atoms listed in the given order."""
    members = set(event)
    return "{" + ", ".join(a for a in order if a in members) + "}"


def _event_over(event: Iterable[str], universe: frozenset[str], what: str) -> Event:
    e = frozenset(event)
    stray = e - universe
    if stray:
        raise DomainMismatchError(
            f"event atom {sorted(stray)[0]!r} does not belong to {what}"
        )
    return e


def is_measurable(event: Iterable[str], partition: Partition) -> bool:
    """True iff the event is a union of blocks of the partition.

    Equivalently: every block is either contained in the event or disjoint
    from it.  This is membership of the event in the sigma-algebra the
    partition generates.
    """
    e = _event_over(event, partition.universe, "the partition's atom set")
    touched = {partition.atom_to_block[a] for a in e}
    return sum(len(partition.blocks[i]) for i in touched) == len(e)


def refines(fine: Partition, coarse: Partition) -> bool:
    """True iff every block of `fine` lies inside some block of `coarse`."""
    if fine.universe != coarse.universe:
        raise DomainMismatchError("partitions are over different atom sets")
    for block in fine.blocks:
        targets = {coarse.atom_to_block[a] for a in block}
        if len(targets) > 1:
            return False
    return True


def is_constant_on_blocks(values: Mapping[str, object], partition: Partition) -> bool:
    """True iff the atom-indexed map takes a single value on each block.

    This is measurability of the map with respect to the sigma-algebra the
    partition generates.  Extra keys in `values` are ignored; a missing
    atom is a domain error.
    """
    for a in partition.universe:
        if a not in values:
            raise DomainMismatchError(f"no value for atom {a!r}")
    for block in partition.blocks:
        first = values[block[0]]
        if any(values[a] != first for a in block[1:]):
            return False
    return True


def null_event(event: Iterable[str], space: SampleSpace) -> bool:
    """True iff the event has probability exactly 0 under the space's weights."""
    e = _event_over(event, space.atom_set, "the sample space")
    return sum((space.weights[a] for a in e), Fraction(0)) == 0
