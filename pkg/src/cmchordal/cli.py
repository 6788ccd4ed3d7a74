"""Command-line front end.

Exit codes: 0 ran, 1 oracle disagreement, 2 unparsable input,
3 failed precondition or bad parameter, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .chordal import is_chordal
from .classify import classify, cm_type
from .complex import SimplicialComplex, face_poset
from .errors import GraphFormatError, IsolatedVertexError, NotChordalError, NotCohenMacaulayError
from .graph import Graph, format_graph, incomparability_graph_of_face_poset, parse_graph, random_chordal
from .oracle import oracle_verdicts, parse_fields
from .covers import is_unmixed
from .verify import exhaustive_graphs, random_chordal_graphs, sweep

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4

ORACLE_CAP = 12
COMBINATORIAL_CAP = 24
EXHAUSTIVE_CAP = 7

NOT_CHORDAL_NOTE = "graph is not chordal; the classification theorem does not apply"

SAMPLE_COMPLEXES = {
    "vertex": (1, [(1,)]),
    "two-points": (2, [(1,), (2,)]),
    "edge": (2, [(1, 2)]),
    "path": (3, [(1, 2), (2, 3)]),
    "hollow-triangle": (3, [(1, 2), (1, 3), (2, 3)]),
    "triangle": (3, [(1, 2, 3)]),
    "two-edges": (4, [(1, 2), (3, 4)]),
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    format: str = "text"
    fields: str = "q,f2,f3"
    n: Optional[int] = None
    max_n: Optional[int] = None
    seed: int = 0
    count: Optional[int] = None
    extra: int = 2
    jobs: int = 1
    kind: str = "chordal"
    complex: str = "hollow-triangle"
    output: Optional[str] = None
    no_oracle: bool = False


def _read_graph(cfg: RunConfig, cap: int) -> Graph:
    if cfg.input is None:
        raise CliError(EXIT_PRECONDITION, "--input is required")
    try:
        if cfg.input == "-":
            text = sys.stdin.read()
        else:
            with open(cfg.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {cfg.input}: {exc}") from None
    try:
        g = parse_graph(text)
    except GraphFormatError as exc:
        raise CliError(EXIT_PARSE, f"parse error: {exc}") from None
    if g.n > cap:
        raise CliError(EXIT_CAP, f"n = {g.n} exceeds the cap of {cap} for this command")
    iso = g.isolated_vertices()
    if iso:
        raise CliError(EXIT_PRECONDITION, str(IsolatedVertexError(iso)))
    return g


def _yn(value: Optional[bool]) -> str:
    return "n/a" if value is None else str(value).lower()


def _sets(sets) -> str:
    return " ".join("{" + ",".join(map(str, s)) + "}" for s in sets)


def _emit(cfg: RunConfig, doc: dict, lines: list[str], notes: Sequence[str] = ()) -> None:
    if cfg.format == "json":
        print(json.dumps(doc, indent=2))
        for note in notes:
            print(f"note: {note}", file=sys.stderr)
    else:
        for line in lines:
            print(line)
        for note in notes:
            print(f"note: {note}")


def cmd_classify(cfg: RunConfig) -> int:
    g = _read_graph(cfg, COMBINATORIAL_CAP)
    report = classify(g)
    lines = [
        f"vertices: {g.n}",
        f"edges: {len(g.edges)}",
        f"chordal: {_yn(report.chordal)}",
        f"cohen-macaulay: {_yn(report.cm)}",
        f"unmixed: {_yn(report.unmixed)}",
        f"m: {report.m}",
        f"partition: {_sets(report.partition) if report.partition else 'none'}",
        f"free vertices: {' '.join(map(str, report.chosen_free_vertices)) if report.chosen_free_vertices else 'none'}",
        f"type: {report.cm_type if report.cm_type is not None else 'n/a'}",
        f"gorenstein: {_yn(report.gorenstein)}",
        f"cover sizes: {report.cover_size_range[0]}..{report.cover_size_range[1]}",
    ]
    notes = [] if report.chordal else [NOT_CHORDAL_NOTE]
    _emit(cfg, report.to_dict(), lines, notes)
    return EXIT_OK


def cmd_type(cfg: RunConfig) -> int:
    g = _read_graph(cfg, COMBINATORIAL_CAP)
    try:
        t = cm_type(g)
    except NotChordalError:
        raise CliError(EXIT_PRECONDITION, NOT_CHORDAL_NOTE) from None
    except NotCohenMacaulayError:
        raise CliError(EXIT_PRECONDITION, "graph is not Cohen-Macaulay; type is undefined") from None
    _emit(cfg, {"type": t, "gorenstein": t == 1}, [f"type: {t}", f"gorenstein: {_yn(t == 1)}"])
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    fields = _fields(cfg)
    g = _read_graph(cfg, ORACLE_CAP)
    chordal = is_chordal(g)
    unmixed = is_unmixed(g)
    verdicts = oracle_verdicts(g, fields)
    notes = []
    if chordal:
        combinatorial = classify(g).cm
        agree = unmixed == combinatorial and all(v == combinatorial for v in verdicts.values())
        agreement = "AGREE" if agree else "DISAGREE"
    else:
        combinatorial = None
        agreement = "N/A"
        notes.append(NOT_CHORDAL_NOTE)
        if unmixed and not all(verdicts.values()):
            notes.append("non-chordal: unmixed yet not Cohen-Macaulay, so unmixedness alone is not sufficient")
    doc = {
        "chordal": chordal,
        "combinatorial_cm": combinatorial,
        "unmixed": unmixed,
        "oracle": {str(k): v for k, v in verdicts.items()},
        "agreement": agreement,
    }
    lines = [
        f"chordal: {_yn(chordal)}",
        f"combinatorial cohen-macaulay: {_yn(combinatorial)}",
        f"unmixed: {_yn(unmixed)}",
        *(f"oracle {k}: {_yn(v)}" for k, v in verdicts.items()),
        f"verdict: {agreement}",
    ]
    _emit(cfg, doc, lines, notes)
    return EXIT_DISAGREE if agreement == "DISAGREE" else EXIT_OK


def _fields(cfg: RunConfig):
    try:
        return parse_fields(cfg.fields)
    except ValueError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None


def cmd_verify(cfg: RunConfig) -> int:
    fields = _fields(cfg)
    oracle = not cfg.no_oracle
    n = cfg.n if cfg.n is not None else 5
    top = max(n, cfg.max_n or n)
    if n < 1:
        raise CliError(EXIT_PRECONDITION, "--n must be positive")
    cap = ORACLE_CAP if oracle else COMBINATORIAL_CAP
    if top > cap:
        raise CliError(EXIT_CAP, f"n = {top} exceeds the cap of {cap}")
    if cfg.count is None:
        if top > EXHAUSTIVE_CAP:
            raise CliError(EXIT_CAP, f"exhaustive sweeps are capped at n = {EXHAUSTIVE_CAP}")
        graphs = [g for k in range(n, top + 1) for g in exhaustive_graphs(k)]
        mode = f"exhaustive, n = {n}" if top == n else f"exhaustive, n = {n}..{top}"
    else:
        if cfg.count < 1:
            raise CliError(EXIT_PRECONDITION, "--count must be positive")
        graphs = list(random_chordal_graphs(cfg.count, range(n, top + 1), cfg.seed))
        mode = f"random chordal, n = {n}..{top}, count = {cfg.count}, seed = {cfg.seed}"
    summary = sweep(graphs, fields, oracle=oracle, free_choices=top <= 8, jobs=cfg.jobs)
    doc = {
        "mode": mode,
        "graphs": len(graphs),
        "skipped_isolated": summary.skipped_isolated,
        "tested": summary.tested,
        "chordal": summary.chordal,
        "cm": summary.cm,
        "fields": [str(k) for k in fields] if oracle else [],
        "disagreements": summary.disagreements,
        "failures": [
            {"graph": format_graph(c.graph), "problems": list(c.disagreements)}
            for c in summary.failures
        ],
    }
    lines = [
        f"mode: {mode}",
        f"graphs enumerated: {len(graphs)}",
        f"skipped (isolated vertices): {summary.skipped_isolated}",
        f"tested: {summary.tested}",
        f"chordal: {summary.chordal}",
        f"cohen-macaulay: {summary.cm}",
        f"oracle fields: {','.join(str(k) for k in fields) if oracle else 'off'}",
        f"agreements: {summary.tested - summary.disagreements}",
        f"disagreements: {summary.disagreements}",
    ]
    for c in summary.failures:
        lines.append("failure: " + format_graph(c.graph).replace("\n", "; ") + " :: " + " | ".join(c.disagreements))
    _emit(cfg, doc, lines)
    return EXIT_OK if summary.disagreements == 0 else EXIT_DISAGREE


def cmd_gen(cfg: RunConfig) -> int:
    if cfg.kind == "chordal":
        if cfg.n is None or cfg.n < 1:
            raise CliError(EXIT_PRECONDITION, "gen chordal needs --n >= 1")
        if cfg.n > COMBINATORIAL_CAP:
            raise CliError(EXIT_CAP, f"n = {cfg.n} exceeds the cap of {COMBINATORIAL_CAP}")
        if cfg.extra < 0:
            raise CliError(EXIT_PRECONDITION, "--extra must be nonnegative")
        g = random_chordal(cfg.n, cfg.extra, cfg.seed)
        text = f"# random chordal graph n={cfg.n} extra={cfg.extra} seed={cfg.seed}\n" + format_graph(g)
    else:
        if cfg.complex not in SAMPLE_COMPLEXES:
            raise CliError(
                EXIT_PRECONDITION,
                f"unknown complex {cfg.complex!r}; choose from {', '.join(SAMPLE_COMPLEXES)}",
            )
        n, facets = SAMPLE_COMPLEXES[cfg.complex]
        c = SimplicialComplex.from_generators(n, facets)
        g = incomparability_graph_of_face_poset(c)
        header = [f"# face-poset incomparability graph of {cfg.complex}"]
        header += [f"# vertex {i}: face {{{','.join(map(str, f))}}}" for i, f in enumerate(face_poset(c), 1)]
        text = "\n".join(header) + "\n" + format_graph(g)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "type": cmd_type,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmchordal", description="Cohen-Macaulay classification of chordal graphs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("--input", help="edge-list file, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")

    common(sub.add_parser("classify", help="classify a graph"))
    common(sub.add_parser("type", help="Cohen-Macaulay type of a CM chordal graph"))
    p = sub.add_parser("oracle", help="cross-check against Reisner's criterion")
    common(p)
    p.add_argument("--fields", default="q,f2,f3")
    p = sub.add_parser("verify", help="exhaustive or random verification sweep")
    common(p, with_input=False)
    p.add_argument("--fields", default="q,f2,f3")
    p.add_argument("--n", type=int, help="vertex count (lower bound when --max-n is set)")
    p.add_argument("--max-n", type=int, help="largest vertex count in the sweep")
    p.add_argument("--count", type=int, help="random samples; omit for an exhaustive sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-oracle", action="store_true", help="skip homology, raising the cap to 24")
    p = sub.add_parser("gen", help="write a test graph")
    p.add_argument("kind", choices=("chordal", "poset"))
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extra", type=int, default=2, help="clique growth per new vertex")
    p.add_argument("--complex", default="hollow-triangle", help=f"one of {', '.join(SAMPLE_COMPLEXES)}")
    p.add_argument("--output", help="file to write (default stdout)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    try:
        return COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
