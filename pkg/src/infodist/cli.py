"""Command-line entry point: ``infodist <subcommand> [flags]``.

Exit status is 0 when every post-verification of the subcommand passed, 1 when
a verification failed, and 2 on bad input or a runtime error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .approx import classify, fluctuation_count
from .bitcore import parse, render, string_of, strings_of_length
from .cluster import to_newick, upgma_tree
from .complexity import k_time, k_upper_trace
from .constructions import (
    diagonal_nid,
    diagonal_outputs,
    diagonal_u,
    diagonal_violations,
    gap_threshold,
    s_of_n,
    surrogate_traces,
    threshold_search,
    xor_pair,
)
from .corpus import DEFAULT_SEED, load_corpus, synthetic_corpus, write_corpus
from .errors import InfodistError
from .machine import MACHINE_SPEC, MACHINE_VERSION, StepBound, literal_bound
from .ncd import DistanceMatrix, get_compressor, matrix, triangle_audit

# flags that never change the content of a result
_UNRECORDED = {"jobs", "out", "func", "command", "verbose"}


def header_lines(args: argparse.Namespace) -> list[str]:
    flags = {k: v for k, v in sorted(vars(args).items()) if k not in _UNRECORDED}
    flag_text = " ".join(f"{k}={v}" for k, v in flags.items())
    return [f"infodist {__version__} machine={MACHINE_VERSION} command={args.command}",
            f"flags: {flag_text}"]


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _bound(args: argparse.Namespace) -> StepBound:
    return StepBound(args.bound_a, args.bound_b, args.bound_c)


def _prime(args: argparse.Namespace) -> StepBound:
    base = _bound(args).scaled(2)
    return StepBound(base.a if args.prime_a is None else args.prime_a,
                     base.b if args.prime_b is None else args.prime_b,
                     base.c if args.prime_c is None else args.prime_c)


def parse_schedule(spec: str) -> list[tuple[StepBound, int]]:
    """``"a,b,c,cap;a,b,c,cap;..."``"""
    schedule = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        a, b, c, cap = (int(v) for v in part.split(","))
        schedule.append((StepBound(a, b, c), cap))
    if not schedule:
        raise ValueError("empty schedule")
    return schedule


def cmd_machine_spec(args: argparse.Namespace) -> int:
    _emit(args, MACHINE_SPEC)
    return 0


def cmd_ktime(args: argparse.Namespace) -> int:
    x, y = parse(args.x), parse(args.y)
    cap = literal_bound(len(x)) if args.cap is None else args.cap
    est = k_time(x, y, _bound(args), cap)
    record = {"header": header_lines(args), **est.to_record()}
    _emit(args, json.dumps(record, sort_keys=True) + "\n")
    return 0 if est.verify() else 1


def cmd_lemma1(args: argparse.Namespace) -> int:
    prime = _prime(args)
    u = diagonal_u(args.n, prime)
    produced = diagonal_outputs(args.n, prime)
    hits = diagonal_violations(args.n, u, prime)
    lines = [f"# {h}" for h in header_lines(args)]
    lines.append(f"n={args.n} conditional={render(string_of(args.n), True)} "
                 f"bound_prime={','.join(map(str, prime.as_tuple()))} u={u} "
                 f"produced={len(produced)} violations={hits}")
    _emit(args, "\n".join(lines) + "\n")
    return 0 if hits == 0 else 1


def cmd_gap(args: argparse.Namespace) -> int:
    bound, prime = _bound(args), _prime(args)
    reports = [xor_pair(n, bound, prime, args.cap) for n in range(args.n_min, args.n_max + 1)]
    ok = all(r.verify() for r in reports)
    lines = [f"# {h}" for h in header_lines(args)]
    lines += [r.to_line() for r in reports]
    n0 = gap_threshold(reports)
    lines.append(f"# n0={'none' if n0 is None else n0} verified={ok}")
    _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_trace(args: argparse.Namespace) -> int:
    x = parse(args.x)
    schedule = parse_schedule(args.schedule)
    if args.mode == "upper":
        trace = k_upper_trace(x, parse(args.y), schedule)
        ok = trace.is_nonincreasing()
    else:
        trace = diagonal_nid(x, schedule)
        ok = trace.is_nondecreasing()
    text = "".join(f"# {h}\n" for h in header_lines(args)) + trace.to_text()
    _emit(args, text)
    print(f"classification={classify(trace)} fluctuations={fluctuation_count(trace)}",
          file=sys.stderr)
    return 0 if ok else 1


def cmd_threshold(args: argparse.Namespace) -> int:
    schedule = parse_schedule(args.schedule)
    supply = surrogate_traces(schedule)
    lines = [f"# {h}" for h in header_lines(args)]
    for x in strings_of_length(args.n):
        for y in strings_of_length(args.n):
            res = threshold_search(args.n, *supply(x, y), args.c, args.step_cap)
            lines.append(f"x={render(x, True)} y={render(y, True)} {res.to_line()}")
    s = s_of_n(args.n, supply, args.c, args.step_cap)
    lines.append(f"s(n)={'exhausted' if s is None else s}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_synth_corpus(args: argparse.Namespace) -> int:
    items = synthetic_corpus(args.seed, args.families, args.per_family, args.size)
    write_corpus(items, args.out)
    return 0


def cmd_ncd_matrix(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    m = matrix(corpus, get_compressor(args.compressor), jobs=args.jobs)
    head = header_lines(args)
    audit = triangle_audit(m)
    head.append(f"triangle_audit: triples={audit.triples} violations={audit.violations} "
                f"max_excess={float(audit.max_excess):.6f}")
    tsv = m.to_tsv(head)
    report = m.to_report({"lines": head})
    if args.out:
        Path(args.out).write_text(tsv)
        Path(args.out).with_suffix(".json").write_text(report)
    else:
        sys.stdout.write(tsv)
    return 0


def cmd_ncd_cluster(args: argparse.Namespace) -> int:
    text = Path(args.matrix).read_text()
    if args.matrix.endswith(".json"):
        m = DistanceMatrix.from_report(text)
    else:
        m = DistanceMatrix.from_tsv(text)
    _emit(args, to_newick(upgma_tree(m)) + "\n")
    return 0


def _add_bound_flags(p: argparse.ArgumentParser, prime: bool = False) -> None:
    p.add_argument("--bound-a", type=int, default=8)
    p.add_argument("--bound-b", type=int, default=1)
    p.add_argument("--bound-c", type=int, default=16)
    if prime:
        p.add_argument("--prime-a", type=int, default=None, help="defaults to 2 * bound-a")
        p.add_argument("--prime-b", type=int, default=None, help="defaults to bound-b")
        p.add_argument("--prime-c", type=int, default=None, help="defaults to 2 * bound-c")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="infodist", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("machine-spec", help="print the frozen opcode table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_machine_spec)

    p = sub.add_parser("ktime", help="time-bounded complexity of x given y")
    p.add_argument("--x", required=True, help="target bits ('eps' for empty)")
    p.add_argument("--y", default="eps", help="conditional bits")
    _add_bound_flags(p)
    p.add_argument("--cap", type=int, default=None, help="max program length searched")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ktime)

    p = sub.add_parser("lemma1", help="diagonal string u and its verification")
    p.add_argument("--n", type=int, required=True)
    _add_bound_flags(p, prime=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemma1)

    p = sub.add_parser("gap", help="XOR pair gap experiment over a range of n")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8)
    _add_bound_flags(p, prime=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("trace", help="approximation trace along a schedule")
    p.add_argument("--x", required=True)
    p.add_argument("--y", default="eps", help="conditional (upper mode only)")
    p.add_argument("--schedule", required=True, help="'a,b,c,cap;a,b,c,cap;...'")
    p.add_argument("--mode", choices=("upper", "diagonal"), default="upper")
    p.add_argument("--out")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("threshold", help="threshold search and s(n) on surrogate traces")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, default=8)
    p.add_argument("--schedule", required=True)
    p.add_argument("--step-cap", type=int, default=64)
    p.add_argument("--out")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("synth-corpus", help="write the seeded Markov corpus to a directory")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--families", type=int, default=3)
    p.add_argument("--per-family", type=int, default=4)
    p.add_argument("--size", type=int, default=4096)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth_corpus)

    p = sub.add_parser("ncd-matrix", help="pairwise NCD matrix of a corpus")
    p.add_argument("corpus", help="directory of files or label,path manifest")
    p.add_argument("--compressor", default="builtin",
                   help="builtin, zlib, bz2, lzma, or cmd:<command>")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="TSV path; the exact report goes next to it as .json")
    p.set_defaults(func=cmd_ncd_matrix)

    p = sub.add_parser("ncd-cluster", help="UPGMA tree (Newick) from a matrix file")
    p.add_argument("matrix", help="TSV matrix or .json report")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ncd_cluster)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (InfodistError, OSError, ValueError) as exc:
        print(f"infodist {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
