"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 negative result (verification
failed, graph not representable, no valid labeling).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, TextIO

from twelverep.errors import BudgetExceeded, NotRepresentable, TwelveRepError
from twelverep.graph import (
    BadVertexReport,
    LabeledGraph,
    PatternWitness,
    bad_vertices,
    find_forbidden_pattern,
    graph_from_json,
)
from twelverep.oracle import (
    SearchBudget,
    SearchStats,
    brute_force_shortest,
    is_permutation_representable,
    min_bad_labeling,
    representant_of_length,
)
from twelverep.shortener import TraceLevel, shorten_with_trace
from twelverep.words import Word, decode, format_word, parse_word, verify

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_NEGATIVE = 2


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    edge_count: int
    bad: tuple[int, ...]
    witnesses: dict[int, tuple[int, int, int]]
    lower_bound: int
    forbidden_pattern: Optional[PatternWitness]

    @property
    def valid(self) -> bool:
        return self.forbidden_pattern is None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "bad": list(self.bad),
            "witnesses": {str(b): list(t) for b, t in sorted(self.witnesses.items())},
            "lower_bound": self.lower_bound,
            "valid": self.valid,
            "forbidden_pattern": None if self.forbidden_pattern is None else self.forbidden_pattern.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        pattern = data["forbidden_pattern"]
        return cls(
            n=data["n"],
            edge_count=data["edge_count"],
            bad=tuple(data["bad"]),
            witnesses={int(b): tuple(t) for b, t in data["witnesses"].items()},
            lower_bound=data["lower_bound"],
            forbidden_pattern=None if pattern is None else PatternWitness.from_dict(pattern),
        )


def analyze(g: LabeledGraph) -> AnalysisReport:
    report: BadVertexReport = bad_vertices(g)
    return AnalysisReport(
        n=g.n,
        edge_count=g.edge_count,
        bad=tuple(sorted(report.bad)),
        witnesses=dict(report.witnesses),
        lower_bound=g.n + report.b_count,
        forbidden_pattern=find_forbidden_pattern(g),
    )


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which here means "negative result"
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twelverep", description="Shortest 12-representants of labeled graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("literal", nargs="?", help="word, e.g. 8753532847616421 or '10 3 2 1 ...'")
        p.add_argument("--word", help="word literal")
        p.add_argument("--word-file", type=Path, help="file holding the word")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def budget_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-n", type=int, default=None)
        p.add_argument("--acknowledge-slow", action="store_true")

    p = sub.add_parser("decode", help="print the graph a word represents")
    word_args(p)
    common(p)

    p = sub.add_parser("verify", help="check that a word represents a graph")
    word_args(p)
    p.add_argument("--graph", type=Path, required=True)
    common(p)

    p = sub.add_parser("shorten", help="shorten a word with at most two copies per letter")
    word_args(p)
    p.add_argument("--trace", choices=[lvl.value for lvl in TraceLevel], default="none")
    common(p)

    p = sub.add_parser("analyze", help="bad vertices, lower bound and validity of a labeled graph")
    p.add_argument("--graph", type=Path, required=True)
    common(p)

    for name, help_ in (
        ("oracle-shortest", "exhaustive shortest representant"),
        ("oracle-permutation", "exhaustive permutation representant"),
        ("oracle-label-search", "labeling with the fewest bad vertices"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--graph", type=Path, required=True)
        budget_args(p)
        common(p)
    return parser


def _read_word(args: argparse.Namespace, n: Optional[int] = None) -> Word:
    sources = [s for s in (args.literal, args.word) if s is not None]
    if args.word_file is not None:
        try:
            sources.append(args.word_file.read_text())
        except OSError as exc:
            raise TwelveRepError(f"cannot read {args.word_file}: {exc}") from None
    if len(sources) != 1:
        raise TwelveRepError("give exactly one word (positional, --word or --word-file)")
    return parse_word(sources[0], n)


def _read_graph(path: Path) -> LabeledGraph:
    try:
        text = path.read_text()
    except OSError as exc:
        raise TwelveRepError(f"cannot read {path}: {exc}") from None
    return graph_from_json(text)


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(max_n=args.max_n, acknowledge_slow=args.acknowledge_slow)


def _emit(out: TextIO, args: argparse.Namespace, data: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps(data) + "\n")
    else:
        out.write(text + "\n")


def _search_result(word: Optional[Word], stats: SearchStats) -> dict:
    return {
        "found": word is not None,
        "word": None if word is None else format_word(word),
        "length": None if word is None else len(word),
        "stats": stats.to_dict(),
    }


def _dispatch(args: argparse.Namespace, out: TextIO) -> int:
    cmd = args.command
    if cmd == "decode":
        g = decode(_read_word(args))
        out.write(g.to_json() + "\n")
        return EXIT_OK

    if cmd == "verify":
        g = _read_graph(args.graph)
        w = _read_word(args, g.n)
        ok = verify(w, g)
        _emit(out, args, {"verified": ok}, "true" if ok else "false")
        return EXIT_OK if ok else EXIT_NEGATIVE

    if cmd == "shorten":
        w = _read_word(args)
        level = TraceLevel(args.trace)
        result, trace = shorten_with_trace(w, level)
        if args.json:
            data = {"word": format_word(result), "length": len(result)}
            if level is not TraceLevel.NONE:
                data["trace"] = trace.to_dict()
            out.write(json.dumps(data) + "\n")
        else:
            for row in trace.rows:
                out.write((format_word(row.word) if row.word is not None else str(row.length)) + "\n")
            out.write(format_word(result) + "\n")
        return EXIT_OK

    if cmd == "analyze":
        report = analyze(_read_graph(args.graph))
        lines = [
            f"n={report.n}",
            f"edges={report.edge_count}",
            "bad={" + ",".join(map(str, report.bad)) + "}",
            f"lower_bound={report.lower_bound}",
            f"valid={'true' if report.valid else 'false'}",
        ]
        if report.forbidden_pattern is not None:
            fp = report.forbidden_pattern
            lines.append(f"forbidden_pattern={fp.kind.value}{fp.vertices}")
        _emit(out, args, report.to_dict(), "\n".join(lines))
        return EXIT_OK

    g = _read_graph(args.graph)
    budget = _budget(args)
    stats = SearchStats()
    if cmd == "oracle-shortest":
        word = brute_force_shortest(g, budget, stats)
    elif cmd == "oracle-permutation":
        word = is_permutation_representable(g, budget, stats)
    else:
        return _label_search(g, budget, stats, args, out)
    data = _search_result(word, stats)
    _emit(out, args, data, "none" if word is None else format_word(word))
    return EXIT_OK if word is not None else EXIT_NEGATIVE


def _label_search(g: LabeledGraph, budget: SearchBudget, stats: SearchStats, args, out: TextIO) -> int:
    # above the brute-force range a doubled-letter representant is searched for and then shortened
    supplier_budget = SearchBudget(max_n=max(g.n, 5), acknowledge_slow=True)

    def supplier(h: LabeledGraph) -> Optional[Word]:
        return representant_of_length(h, 2 * h.n, supplier_budget)

    if g.n > 5 and not args.acknowledge_slow:
        raise BudgetExceeded(f"n={g.n} > 5 needs --acknowledge-slow for the representant search")
    try:
        result = min_bad_labeling(g, budget, representant_for=supplier, stats=stats)
    except NotRepresentable as exc:
        _emit(out, args, {"found": False, "reason": str(exc), "stats": stats.to_dict()}, "none")
        return EXIT_NEGATIVE
    data = {"found": True, **result.to_dict(), "stats": stats.to_dict()}
    text = (
        f"labeling={' '.join(map(str, result.labeling))}\n"
        f"bad_count={result.bad_count}\n"
        f"representant={format_word(result.representant)}"
    )
    _emit(out, args, data, text)
    return EXIT_OK


def run(argv: Sequence[str], stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        stderr.write(f"twelverep: error: {exc}\n")
        return EXIT_MALFORMED
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_MALFORMED
    try:
        return _dispatch(args, stdout)
    except TwelveRepError as exc:
        stderr.write(f"twelverep: {type(exc).__name__}: {exc}\n")
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
