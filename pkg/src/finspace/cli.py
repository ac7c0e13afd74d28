"""Command-line interface.

One verb per pipeline: ``show``, ``core``, ``dual``, ``iso``, ``homology``,
``pi1`` operate on poset files; ``enumerate`` and ``classify`` run the core
generators; ``min-model`` searches for minimal models; ``verify-paper``
replays the whole published-claims expectation table; ``export`` converts a
poset file to DOT or JSON.

Exit status: 0 success, 1 failed verification checks, 2 usage errors,
3 malformed poset files.  Machine output (JSON, JSON lines, DOT) is
byte-stable across runs; progress counters go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from finspace import figures
from finspace.classify import classify_poset, inventory, min_model_search
from finspace.complexes import poset_homology
from finspace.enumeration import (
    SizeTooLarge,
    enumerate_height1_cores,
    enumerate_height2_cores,
)
from finspace.formats import (
    PosetFormatError,
    load_poset,
    poset_to_dot,
    poset_to_json,
    poset_to_text,
)
from finspace.posets import Poset, PosetError
from finspace.presentations import poset_presentation, tietze_simplify
from finspace.verify import verify_paper

USAGE_ERROR = 2
DATA_ERROR = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finspace",
        description="Finite T0-spaces: cores, homology, and classification of small models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_show = sub.add_parser("show", help="print a summary of a poset file")
    p_show.add_argument("file")

    p_core = sub.add_parser("core", help="remove beat points and print the core")
    p_core.add_argument("file")

    p_dual = sub.add_parser("dual", help="print the opposite poset")
    p_dual.add_argument("file")

    p_iso = sub.add_parser("iso", help="test two poset files for isomorphism")
    p_iso.add_argument("file_a")
    p_iso.add_argument("file_b")

    p_hom = sub.add_parser("homology", help="homology profile of the order complex")
    p_hom.add_argument("file")

    p_pi1 = sub.add_parser("pi1", help="fundamental group presentation and status")
    p_pi1.add_argument("file")
    p_pi1.add_argument("--budget", type=int, default=10_000)

    p_enum = sub.add_parser("enumerate", help="enumerate cores up to isomorphism")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--height", type=int, choices=(1, 2), required=True)
    p_enum.add_argument("--jsonl", help="write classification records to this file")

    p_cls = sub.add_parser("classify", help="inventory of cores grouped by wedge type")
    p_cls.add_argument("--n", type=int, required=True)
    p_cls.add_argument("--height", type=int, choices=(1, 2), required=True)

    p_min = sub.add_parser("min-model", help="search for minimal models of a wedge")
    p_min.add_argument("--circles", type=int, required=True)
    p_min.add_argument("--spheres", type=int, required=True)
    p_min.add_argument("--max-n", type=int, default=8)

    p_ver = sub.add_parser("verify-paper", help="re-check every published claim")
    p_ver.add_argument("--json", action="store_true", dest="as_json")

    p_exp = sub.add_parser("export", help="convert a poset file to DOT or JSON")
    group = p_exp.add_mutually_exclusive_group(required=True)
    group.add_argument("--dot", action="store_true")
    group.add_argument("--json", action="store_true", dest="as_json")
    p_exp.add_argument("file")

    return parser


def _load(path: str) -> Poset:
    try:
        return load_poset(path)
    except (PosetFormatError, PosetError) as exc:
        raise PosetFormatError(f"{path}: {exc}") from exc


def _cmd_show(args) -> int:
    p = _load(args.file)
    part = p.role_partition()

    def names(indices) -> str:
        return " ".join(sorted(p.labels[i] for i in indices)) or "-"

    print(f"points: {p.n}")
    print(f"height: {p.height}")
    print(f"connected: {'yes' if p.is_connected else 'no'}")
    print(f"homogeneous: {'yes' if p.is_homogeneous else 'no'}")
    print(f"maximal: {names(part.mxl)}")
    print(f"middle: {names(part.middle)}")
    print(f"minimal: {names(part.mnl)}")
    beats = p.beat_points()
    print(f"beat points: {names(beats)}")
    print(f"core size: {p.core().n}")
    matches = figures.matches(p)
    if matches:
        print("matches figures: " + " ".join(matches))
    return 0


def _cmd_core(args) -> int:
    p = _load(args.file)
    sys.stdout.write(poset_to_text(p.core()))
    return 0


def _cmd_dual(args) -> int:
    p = _load(args.file)
    sys.stdout.write(poset_to_text(p.dual()))
    return 0


def _cmd_iso(args) -> int:
    a = _load(args.file_a)
    b = _load(args.file_b)
    print("isomorphic" if a.is_isomorphic(b) else "not isomorphic")
    return 0


def _cmd_homology(args) -> int:
    p = _load(args.file)
    print(poset_homology(p).to_json())
    return 0


def _cmd_pi1(args) -> int:
    p = _load(args.file)
    if not p.is_connected:
        print("space is not connected; no presentation", file=sys.stderr)
        return DATA_ERROR
    if p.height > 2:
        print("height exceeds 2; presentation unsupported", file=sys.stderr)
        return DATA_ERROR
    pres = poset_presentation(p)
    status = tietze_simplify(pres, step_budget=args.budget)
    print(pres.to_text())
    print(status.describe())
    return 0


def _enumerated(args):
    if args.height == 1:
        return enumerate_height1_cores(args.n)
    done = 0

    def progress(shape, found) -> None:
        nonlocal done
        done += 1
        print(f"shape {shape.m0}+{shape.m1}+{shape.m2}: {found} cores", file=sys.stderr)

    return enumerate_height2_cores(args.n, progress=progress)


def _cmd_enumerate(args) -> int:
    cores = _enumerated(args)
    print(f"{len(cores)} cores", file=sys.stderr)
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            for p in cores:
                fh.write(classify_poset(p).to_json_line() + "\n")
        return 0
    for p in cores:
        covers = " ".join(f"{p.labels[lo]}<{p.labels[hi]}" for lo, hi in p.covers)
        print(f"{p.canonical_code.decode('ascii')}\t{p.n}\t{covers}")
    return 0


def _cmd_classify(args) -> int:
    inv = inventory(args.n, args.height)
    print(f"cores: {len(inv.records)}")
    for key, count in sorted(inv.counts.items(), key=lambda kv: (kv[0] is None, kv[0])):
        if key is None:
            print(f"unrecognized: {count}")
        else:
            verified = sum(
                1
                for r in inv.records
                if r.label_key == key and r.wedge is not None and r.wedge.pi1_verified
            )
            print(
                f"{key[0]} circles, {key[1]} spheres: {count} "
                f"(pi1 verified for {verified})"
            )
    return 0


def _cmd_min_model(args) -> int:
    try:
        res = min_model_search(args.circles, args.spheres, args.max_n)
    except SizeTooLarge as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    if not res.found:
        print(f"no model with at most {args.max_n} points")
        return 0
    print(f"minimum points: {res.n_min}")
    print(f"models: {len(res.records)}")
    for rec in res.records:
        covers = " ".join(f"{rec.labels[lo]}<{rec.labels[hi]}" for lo, hi in rec.covers)
        figs = (" figures: " + " ".join(rec.figure_matches)) if rec.figure_matches else ""
        print(f"  {covers}{figs}")
    return 0


def _cmd_verify(args) -> int:
    report = verify_paper(progress=lambda line: print(line, file=sys.stderr))
    if args.as_json:
        print(report.to_json_lines())
    else:
        print(report.to_table())
    return 0 if report.passed else 1


def _cmd_export(args) -> int:
    p = _load(args.file)
    if args.dot:
        sys.stdout.write(poset_to_dot(p))
    else:
        print(poset_to_json(p))
    return 0


_HANDLERS = {
    "show": _cmd_show,
    "core": _cmd_core,
    "dual": _cmd_dual,
    "iso": _cmd_iso,
    "homology": _cmd_homology,
    "pi1": _cmd_pi1,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "min-model": _cmd_min_model,
    "verify-paper": _cmd_verify,
    "export": _cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _HANDLERS[args.command](args)
    except PosetFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except SizeTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
