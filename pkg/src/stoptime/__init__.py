"""Stopping times on finite filtered probability spaces.

Exact-rational toolkit for the one-to-one correspondence between stopping
times and adapted non-increasing 0/1 processes: verification predicates,
the two conversions, hitting times, exhaustive enumeration, seeded
generators and a JSON command-line interface.
"""

from .bijection import (
    HittingResult,
    hitting_time,
    process_from_time,
    roundtrip_process,
    roundtrip_time,
    time_from_process,
)
from .documents import InstanceDocument, canonical_json, parse_document, serialize_document
from .enumeration import (
    DEFAULT_CAP,
    EnumerationReport,
    RoundtripFailure,
    check_bijection,
    enumerate_stopping_processes,
    enumerate_stopping_times,
)
from .errors import (
    DocumentError,
    DomainMismatchError,
    RejectedInputError,
    ResourceCapError,
    StoptimeError,
)
from .filtration import INFINITY, Filtration, TimeGrid, format_time, validate_filtration
from .generators import (
    SplitMix64,
    gen_adapted_real_process,
    gen_borel_set,
    gen_filtration,
    gen_stopping_time,
)
from .probability import (
    Partition,
    SampleSpace,
    Verdict,
    is_constant_on_blocks,
    is_measurable,
    null_event,
    refines,
)
from .processes import (
    BinaryProcess,
    BorelSet,
    Interval,
    RandomTime,
    RealProcess,
    is_stopping_process,
    is_stopping_time,
    member,
    processes_equal_as,
    times_equal_as,
)

__all__ = [
    "BinaryProcess",
    "BorelSet",
    "DEFAULT_CAP",
    "DocumentError",
    "DomainMismatchError",
    "EnumerationReport",
    "Filtration",
    "HittingResult",
    "INFINITY",
    "InstanceDocument",
    "Interval",
    "Partition",
    "RandomTime",
    "RealProcess",
    "RejectedInputError",
    "ResourceCapError",
    "RoundtripFailure",
    "SampleSpace",
    "SplitMix64",
    "StoptimeError",
    "TimeGrid",
    "Verdict",
    "canonical_json",
    "check_bijection",
    "enumerate_stopping_processes",
    "enumerate_stopping_times",
    "format_time",
    "gen_adapted_real_process",
    "gen_borel_set",
    "gen_filtration",
    "gen_stopping_time",
    "hitting_time",
    "is_constant_on_blocks",
    "is_measurable",
    "is_stopping_process",
    "is_stopping_time",
    "member",
    "null_event",
    "parse_document",
    "process_from_time",
    "processes_equal_as",
    "refines",
    "roundtrip_process",
    "roundtrip_time",
    "serialize_document",
    "time_from_process",
    "times_equal_as",
    "validate_filtration",
]

__version__ = "0.1.0"
