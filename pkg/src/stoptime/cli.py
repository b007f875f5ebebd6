"""Command-line interface.

    stoptime verify-filtration [--in FILE]
    stoptime verify-time       [--in FILE]
    stoptime verify-process    [--in FILE]
    stoptime to-process        [--in FILE] [--out FILE]
    stoptime to-time           [--in FILE] [--out FILE]
    stoptime hit               [--in FILE] [--out FILE]
    stoptime enumerate         [--in FILE] [--out FILE] [--cap N]
    stoptime check-bijection   [--in FILE] [--out FILE] [--cap N] [--as]
    stoptime gen               [--out FILE] [--seed N] [--max-atoms N] [--max-times N]
    stoptime render            [--in FILE] [--out FILE]

Documents default to standard input/output.  Exit codes: 0 when the
checked predicate holds or the command succeeds, 1 when a predicate fails
or an input is rejected on semantic grounds (diagnostic printed), 2 for
malformed or unresolvable documents, resource-cap overruns and usage
errors.  All output is deterministic given the input and flags.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .bijection import hitting_time, process_from_time, time_from_process
from .documents import (
    InstanceDocument,
    canonical_json,
    parse_document,
    process_to_obj,
    serialize_document,
    time_to_obj,
)
from .enumeration import DEFAULT_CAP, check_bijection, enumerate_stopping_processes, enumerate_stopping_times
from .errors import DocumentError, DomainMismatchError, RejectedInputError, ResourceCapError
from .filtration import format_time, validate_filtration
from .generators import gen_filtration, gen_stopping_time
from .processes import BinaryProcess, RandomTime, is_stopping_process, is_stopping_time


def _read_document(args) -> InstanceDocument:
    if args.infile:
        text = Path(args.infile).read_text(encoding="utf-8")
    else:
        text = sys.stdin.read()
    return parse_document(text)


def _write(args, text: str) -> None:
    if args.outfile:
        Path(args.outfile).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _verdict_exit(verdict) -> int:
    print(verdict.reason if not verdict else "ok")
    return 0 if verdict else 1


def _cmd_verify_filtration(args) -> int:
    doc = _read_document(args)
    doc.require("space", "grid", "filtration")
    return _verdict_exit(validate_filtration(doc.filtration))


def _cmd_verify_time(args) -> int:
    doc = _read_document(args)
    doc.require("space", "grid", "filtration", "time")
    return _verdict_exit(is_stopping_time(doc.time, doc.filtration))


def _require_binary(doc: InstanceDocument) -> BinaryProcess:
    doc.require("space", "grid", "filtration", "process")
    if not isinstance(doc.process, BinaryProcess):
        raise DocumentError("process section holds real values; a binary (0/1) process is required")
    return doc.process


def _cmd_verify_process(args) -> int:
    doc = _read_document(args)
    return _verdict_exit(is_stopping_process(_require_binary(doc), doc.filtration))


def _cmd_to_process(args) -> int:
    doc = _read_document(args)
    doc.require("space", "grid", "filtration", "time")
    converted = process_from_time(doc.time, doc.filtration)
    _write(args, serialize_document(replace(doc, time=None, process=converted)))
    return 0


def _cmd_to_time(args) -> int:
    doc = _read_document(args)
    converted = time_from_process(_require_binary(doc), doc.filtration)
    _write(args, serialize_document(replace(doc, process=None, time=converted)))
    return 0


def _cmd_hit(args) -> int:
    doc = _read_document(args)
    doc.require("space", "grid", "filtration", "process", "borel_set")
    result = hitting_time(doc.process, doc.borel_set, doc.filtration)
    out = replace(doc, process=None, borel_set=None, time=result.time)
    _write(args, serialize_document(out))
    if not result.verdict:
        print(f"hitting time is not a stopping time: {result.verdict.reason}", file=sys.stderr)
        return 1
    return 0


def _cmd_enumerate(args) -> int:
    doc = _read_document(args)
    doc.require("space", "grid", "filtration")
    times = enumerate_stopping_times(doc.filtration, cap=args.cap)
    processes = enumerate_stopping_processes(doc.filtration, cap=args.cap)
    obj = {
        "stopping_time_count": len(times),
        "stopping_times": [time_to_obj(rt) for rt in times],
        "stopping_process_count": len(processes),
        "stopping_processes": [process_to_obj(x) for x in processes],
    }
    _write(args, canonical_json(obj))
    return 0


def _failure_obj(failure) -> dict:
    def encode(thing):
        if thing is None:
            return None
        return time_to_obj(thing) if isinstance(thing, RandomTime) else process_to_obj(thing)

    return {
        "kind": failure.kind,
        "original": encode(failure.original),
        "roundtripped": encode(failure.roundtripped),
        "error": failure.error,
    }


def _cmd_check_bijection(args) -> int:
    doc = _read_document(args)
    doc.require("space", "grid", "filtration")
    report = check_bijection(doc.filtration, cap=args.cap, almost_sure=args.almost_sure)
    obj = {
        "stopping_time_count": report.stopping_time_count,
        "stopping_process_count": report.stopping_process_count,
        "roundtrip_failures": [_failure_obj(x) for x in report.roundtrip_failures],
    }
    _write(args, canonical_json(obj))
    return 0 if report.ok else 1


def _cmd_gen(args) -> int:
    f = gen_filtration(args.seed, args.max_atoms, args.max_times)
    rt = gen_stopping_time(args.seed + 1, f)
    doc = InstanceDocument(space=f.space, grid=f.grid, filtration=f, time=rt)
    _write(args, serialize_document(doc))
    return 0


def _cmd_render(args) -> int:
    doc = _read_document(args)
    doc.require("space", "grid")
    if doc.time is not None:
        rt = doc.time
    else:
        rt = time_from_process(_require_binary(doc), doc.filtration)
    _write(args, render_timeline(doc, rt))
    return 0


def render_timeline(doc: InstanceDocument, rt: RandomTime) -> str:
    """Plain-text traffic light: one row per atom, G strictly before its
    stopping time, R from then on."""
    times = doc.grid.times
    time_strs = [format_time(t) for t in times]
    label_w = max(len("omega"), max(len(a) for a in doc.space.atoms))
    lines = [f"{'omega'.ljust(label_w)} | {' '.join(time_strs)} | tau"]
    for a in doc.space.atoms:
        cells = " ".join(
            ("G" if rt.values[a] > t else "R").ljust(len(s))
            for t, s in zip(times, time_strs)
        )
        lines.append(f"{a.ljust(label_w)} | {cells} | {format_time(rt.values[a])}".rstrip())
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stoptime",
        description="Verify, convert, enumerate and render stopping times and "
        "stopping processes on finite filtered probability spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, doc_in=True, doc_out=False, cap=False):
        p = sub.add_parser(name)
        if doc_in:
            p.add_argument("--in", dest="infile", metavar="FILE", default=None)
        if doc_out or not doc_in:
            p.add_argument("--out", dest="outfile", metavar="FILE", default=None)
        if cap:
            p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.set_defaults(func=func)
        return p

    add("verify-filtration", _cmd_verify_filtration)
    add("verify-time", _cmd_verify_time)
    add("verify-process", _cmd_verify_process)
    add("to-process", _cmd_to_process, doc_out=True)
    add("to-time", _cmd_to_time, doc_out=True)
    add("hit", _cmd_hit, doc_out=True)
    add("enumerate", _cmd_enumerate, doc_out=True, cap=True)
    check = add("check-bijection", _cmd_check_bijection, doc_out=True, cap=True)
    check.add_argument("--as", dest="almost_sure", action="store_true",
                       help="compare round trips almost surely (modulo null events)")
    gen = add("gen", _cmd_gen, doc_in=False)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--max-atoms", type=int, default=4)
    gen.add_argument("--max-times", type=int, default=3)
    add("render", _cmd_render, doc_out=True)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except RejectedInputError as exc:
        print(f"rejected: {exc}")
        return 1
    except (DocumentError, DomainMismatchError, ResourceCapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
