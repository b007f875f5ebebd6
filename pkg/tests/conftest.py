from fractions import Fraction

import pytest

from stoptime import Filtration, Partition, SampleSpace, TimeGrid

REF_ATOMS = ("a", "b", "c", "d")


def make_reference_filtration():
    """Four atoms, grid {0,1,2}, information revealed in two steps."""
    space = SampleSpace(REF_ATOMS, {a: Fraction(1, 4) for a in REF_ATOMS})
    grid = TimeGrid([0, 1, 2])
    levels = [
        Partition.trivial(REF_ATOMS),
        Partition([["a", "b"], ["c", "d"]]),
        Partition.singletons(REF_ATOMS),
    ]
    return Filtration(space, grid, levels, Partition.singletons(REF_ATOMS))


@pytest.fixture
def ref_filtration():
    return make_reference_filtration()
