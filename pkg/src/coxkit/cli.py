"""Command-line interface: ``coxkit <subcommand> ...``.

Exit status is 0 on success, 1 on validation/computation errors and 2 on
usage errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .fan import NotFanoError
from .fanfile import FanFileError, parse_fan_file, write_fan_file
from .fixtures import FIXTURE_NAMES, fixture
from .models import DEFAULT_SEED
from .reports import Report, cmd_analyze, cmd_blowup_model, cmd_dual, cmd_hilbert, cmd_scan

log = logging.getLogger("coxkit")


class UsageError(Exception):
    pass


def load_target(target: str):
    """``fixture:NAME`` or a path to a fan file."""
    if target.startswith("fixture:"):
        name = target.split(":", 1)[1]
        if name not in FIXTURE_NAMES:
            raise UsageError("unknown fixture %r; known: %s" % (name, ", ".join(FIXTURE_NAMES)))
        return fixture(name)
    return parse_fan_file(target)


def _multi(fn, targets) -> Report:
    rep = Report()
    for t in targets:
        rep.extend(fn(load_target(t)))
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", default=argparse.SUPPRESS, help="tab-separated output")

    p = argparse.ArgumentParser(prog="coxkit", description="Cox rings of toric varieties and their hypersurfaces.")
    p.add_argument("--tsv", action="store_true", default=False, help="tab-separated output")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="grading, irrelevant ideal and flags of a fan")
    a.add_argument("targets", nargs="+", metavar="FILE|fixture:NAME")

    d = sub.add_parser("dual", parents=[common], help="toric variety of the dual polytope")
    d.add_argument("targets", nargs="+", metavar="FILE|fixture:NAME")

    s = sub.add_parser("scan", parents=[common], help="fan files with irrelevant codimension >= 3")
    s.add_argument("directory")
    s.add_argument("--glob", default="*.fan", help="file pattern (default: *.fan)")
    s.add_argument("--jobs", type=int, default=1)

    b = sub.add_parser("blowup-model", parents=[common], help="Bl_L P^n and Z_1 gradings")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=int, required=True)

    h = sub.add_parser("hilbert", parents=[common], help="graded dimension of the Cox ring of X")
    h.add_argument("--model", choices=["cox3", "cox4"], required=True)
    h.add_argument("--n", type=int, default=None)
    h.add_argument("--d", type=int, required=True)
    h.add_argument("--deg", type=int, nargs=2, required=True, metavar=("A", "B"))
    h.add_argument("--oracle", action="store_true", help="also compute the dimension by linear algebra")
    h.add_argument("--seed", type=int, default=DEFAULT_SEED)

    f = sub.add_parser("fixtures", parents=[common], help="list fixtures or write them as fan files")
    f.add_argument("--out", default=None, help="directory to write NAME.fan files into")
    return p


def run(args) -> int:
    if args.command == "analyze":
        rep = _multi(cmd_analyze, args.targets)
    elif args.command == "dual":
        rep = _multi(cmd_dual, args.targets)
    elif args.command == "scan":
        result = cmd_scan(args.directory, pattern=args.glob, jobs=args.jobs)
        for msg in result.failures.values():
            print("coxkit: %s" % msg, file=sys.stderr)
        sys.stdout.write(result.report().render(args.tsv))
        return 1 if result.failures else 0
    elif args.command == "blowup-model":
        if args.n < 3 or args.d < 3:
            raise UsageError("need --n >= 3 and --d >= 3")
        rep = cmd_blowup_model(args.n, args.d)
    elif args.command == "hilbert":
        n = args.n if args.n is not None else (3 if args.model == "cox3" else 4)
        if args.d < 3 or (args.model == "cox3" and n != 3) or (args.model == "cox4" and n < 4):
            raise UsageError("cox3 needs n = 3, cox4 needs n >= 4, and d >= 3")
        rep = cmd_hilbert(args.model, n, args.d, args.deg, oracle=args.oracle, seed=args.seed)
    elif args.command == "fixtures":
        rep = Report()
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            for name in FIXTURE_NAMES:
                write_fan_file(fixture(name), out / (name + ".fan"))
            rep.add("written", [str(out / (n + ".fan")) for n in FIXTURE_NAMES])
        else:
            rep.add("fixtures", list(FIXTURE_NAMES))
    else:  # pragma: no cover - argparse enforces the choices
        raise UsageError("unknown command")
    sys.stdout.write(rep.render(args.tsv))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="coxkit: %(message)s")
    try:
        return run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print("coxkit: error: %s" % exc, file=sys.stderr)
        return 2
    except (FanFileError, NotFanoError, ValueError, OSError) as exc:
        print("coxkit: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
