"""Command-line front end.

Exit status discipline: 0 success, 1 reserved for mathematical-property
violations (a refuted theorem), 2 for usage or input errors.  All reports
are plain ASCII and stable across runs given identical flags.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from asymtree import canon, enumeration, poset, specialleaf, treefile
from asymtree.errors import AsymtreeError, NotAsymmetric, StuckNotAtE7
from asymtree.tree import center_info

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CommandOutcome:
    status: int
    report: str


def _emit(lines, out) -> CommandOutcome:
    report = "\n".join(lines) + "\n" if lines else ""
    (out or sys.stdout).write(report)
    return CommandOutcome(status=EXIT_OK, report=report)


def cmd_check(path, out=None) -> CommandOutcome:
    t = treefile.load(path)
    info = canon.canonical_code(t)
    degrees = sorted((t.degree(v) for v in range(t.n)), reverse=True)
    centers = center_info(t)
    lines = [
        f"n: {t.n}",
        "degrees: " + " ".join(str(d) for d in degrees),
        "centers: " + " ".join(str(c) for c in centers.centers),
        f"radius: {centers.radius}",
        f"|Aut|={canon.aut_order(t).order}",
        f"asymmetric: {'yes' if t.n >= 2 and canon.is_asymmetric(t) else 'no'}",
        f"code: {info.text}",
    ]
    return _emit(lines, out)


def cmd_special_leaf(path, root, out=None) -> CommandOutcome:
    t = treefile.load(path)
    cert = specialleaf.find_special_leaf(t, root)
    return _emit(specialleaf.certificate_lines(cert), out)


def cmd_reduce(path, seed=None, out=None) -> CommandOutcome:
    t = treefile.load(path)
    if t.n < 2 or not canon.is_asymmetric(t):
        raise NotAsymmetric("input tree is not automorphism-free")
    trace = poset.reduce_to_e7(t, seed=seed)
    return _emit(poset.trace_lines(trace), out)


def cmd_enumerate(n, asymmetric=False, count_only=False, out=None) -> CommandOutcome:
    if count_only:
        lines = ["n\ttotal\tasymmetric"]
        for row in enumeration.count_report(n):
            lines.append(f"{row.n}\t{row.total}\t{row.asymmetric}")
        return _emit(lines, out)
    stream = enumeration.asymmetric_trees(n) if asymmetric else enumeration.all_trees(n)
    lines = []
    for code, t in stream.with_codes():
        edges = ",".join(f"{u}-{v}" for u, v in t.edges())
        lines.append(f"{code}\t{edges}")
    return _emit(lines, out)


def cmd_verify(n_max, out=None) -> CommandOutcome:
    chunks = []

    stream = out or sys.stdout

    def emit(line):
        chunks.append(line + "\n")
        stream.write(line + "\n")
        stream.flush()

    report = poset.verify_poset(
        n_max,
        progress=lambda s: emit(f"n={s.n} asymmetric={s.asymmetric} reduced={s.reduced}"),
    )
    emit("minimal: " + " ".join(report.minimal_codes))
    for failure in report.failures:
        emit("violation: " + failure)
    emit(f"elapsed: {report.elapsed:.2f}s")
    emit("OK" if report.ok else "VIOLATION")
    status = EXIT_OK if report.ok else EXIT_VIOLATION
    return CommandOutcome(status=status, report="".join(chunks))


def cmd_hasse(n_max, dot_path, tsv_path=None, out=None) -> CommandOutcome:
    levels, covers = poset.build_hasse(n_max)
    with open(dot_path, "w", encoding="ascii") as fh:
        fh.write(poset.hasse_to_dot(levels, covers))
    if tsv_path is not None:
        with open(tsv_path, "w", encoding="ascii") as fh:
            fh.write(poset.covers_to_tsv(covers))
    nodes = sum(len(level.nodes) for level in levels)
    return _emit([f"nodes: {nodes}", f"edges: {len(covers)}"], out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asymtree",
        description="Asymmetric trees: canonical codes, special leaves, "
        "enumeration, and the E7 leaf-deletion poset.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural report for one tree file")
    p.add_argument("file")

    p = sub.add_parser("special-leaf", help="find a special leaf w.r.t. a vertex")
    p.add_argument("file")
    p.add_argument("--root", type=int, required=True, metavar="U")

    p = sub.add_parser("reduce", help="leaf-deletion trace down to E7")
    p.add_argument("file")
    p.add_argument("--random-tiebreak", type=int, default=None, metavar="SEED")

    p = sub.add_parser("enumerate", help="stream all trees on N vertices")
    p.add_argument("n", type=int)
    p.add_argument("--asymmetric", action="store_true")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("verify", help="check E7 minimality up to a level")
    p.add_argument("--max-n", type=int, required=True, metavar="N")

    p = sub.add_parser("hasse", help="export the Hasse diagram as DOT")
    p.add_argument("--max-n", type=int, required=True, metavar="N")
    p.add_argument("--out", required=True, metavar="FILE.dot")
    p.add_argument("--tsv", default=None, metavar="FILE.tsv")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            outcome = cmd_check(args.file)
        elif args.command == "special-leaf":
            outcome = cmd_special_leaf(args.file, args.root)
        elif args.command == "reduce":
            outcome = cmd_reduce(args.file, seed=args.random_tiebreak)
        elif args.command == "enumerate":
            outcome = cmd_enumerate(
                args.n, asymmetric=args.asymmetric, count_only=args.count_only
            )
        elif args.command == "verify":
            outcome = cmd_verify(args.max_n)
        else:
            outcome = cmd_hasse(args.max_n, args.out, tsv_path=args.tsv)
    except StuckNotAtE7 as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_VIOLATION
    except AsymtreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return outcome.status


if __name__ == "__main__":
    raise SystemExit(main())
