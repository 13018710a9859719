"""Command line: ``solve``, ``check``, ``scc`` and ``bench``.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 enumeration budget exceeded,
4 engines disagree (bench).
"""
from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .core import FAF, FAFError, FAFParseError, FuzzySet, faf_to_json, format_degree, parse_faf, \
    parse_fuzzy_set, resolve_lattice
from .generators import from_spec
from .recursive import RECURSIVE_KINDS, gf_check, gf_enumerate, grounded_scc, prune_tolerable_attacks
from .scc import compute_sccs, condensation
from .semantics import BudgetExceeded, SemanticsKind, check, enumerate_extensions, grounded

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3, 4
DEFAULT_MAX_EXTENSIONS = 10000


class UsageError(Exception):
    pass


@dataclass
class SolveRequest:
    input: str
    semantics: SemanticsKind
    engine: str = "scc"
    lattice: str = "breakpoints"
    max_extensions: int = DEFAULT_MAX_EXTENSIONS  # 0 means unlimited
    prune: bool = False
    format: str = "fapx"
    trace: str | None = None


def _guess_format(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "structured" if path.endswith(".json") else "fapx"


def load_faf(path: str, fmt: str | None = None) -> FAF:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_faf(text, _guess_format(path, fmt))


def _kind(name: str) -> SemanticsKind:
    try:
        return SemanticsKind(name)
    except ValueError:
        raise UsageError(f"unknown semantics {name!r}") from None


def run_engine(faf: FAF, kind: SemanticsKind, engine: str, lattice, trace=None) -> tuple:
    c_set = faf.args
    if engine == "direct":
        return enumerate_extensions(faf, c_set, kind, lattice)
    if engine != "scc":
        raise UsageError(f"unknown engine {engine!r}")
    if kind not in RECURSIVE_KINDS:
        raise UsageError(f"engine scc does not support {kind.value}")
    if kind is SemanticsKind.GROUNDED:
        return (grounded_scc(faf, c_set, trace),)
    return gf_enumerate(faf, c_set, kind, lattice, trace=trace)


def cmd_solve(req: SolveRequest) -> dict:
    faf = load_faf(req.input, req.format)
    if req.prune:
        faf = prune_tolerable_attacks(faf)
    lattice = resolve_lattice(req.lattice, faf)
    records: list[dict] = []
    sink = records.append if req.trace else None
    t0 = time.perf_counter()
    exts = run_engine(faf, req.semantics, req.engine, lattice, sink)
    elapsed = (time.perf_counter() - t0) * 1000
    if req.trace:
        with open(req.trace, "w") as fh:
            for r in records:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    limit = req.max_extensions or len(exts)
    shown = exts[:limit]
    result = faf_to_json(faf)
    result.update({
        "semantics": req.semantics.value,
        "engine": req.engine,
        "lattice": lattice.name,
        "prune": req.prune,
        "extensions": [e.to_json() for e in shown],
        "count": len(exts),
        "truncated": len(shown) < len(exts),
        "elapsed_ms": round(elapsed, 3),
    })
    if req.trace:
        result["trace"] = req.trace
    return result


def _read_fuzzy_set(path: str) -> FuzzySet:
    try:
        return parse_fuzzy_set(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_check(input: str, extension: str, semantics: list[SemanticsKind], c_file: str | None = None,
              lattice: str = "breakpoints", fmt: str | None = None) -> dict:
    faf = load_faf(input, fmt)
    e = _read_fuzzy_set(extension)
    c_set = _read_fuzzy_set(c_file) if c_file else faf.args
    for s, what in ((e, "extension"), (c_set, "C")):
        unknown = sorted(set(s) - set(faf.args))
        if unknown:
            raise UsageError(f"{what} references unknown arguments: {', '.join(unknown)}")
        if any(v > faf.args[x] for x, v in s.items()):
            raise UsageError(f"{what} exceeds argument degrees")
    lat = resolve_lattice(lattice, faf)
    verdicts = {}
    for kind in semantics:
        direct = check(faf, c_set, e, kind, lat)
        scc = gf_check(faf, c_set, e, kind, lat) if kind in RECURSIVE_KINDS else None
        verdicts[kind.value] = {"direct": direct, "scc": scc}
    return {"extension": e.to_json(), "lattice": lat.name, "verdicts": verdicts}


def condensation_dot(faf: FAF) -> str:
    p = compute_sccs(faf)
    cond = condensation(faf, p)
    lines = ["digraph condensation {", "  node [shape=box];"]
    for n in cond.topo_order:
        members = ", ".join(f"{x}:{format_degree(faf.args[x])}" for x in sorted(p.components[n]))
        lines.append(f'  S{n + 1} [label="S{n + 1}\\n{members}"];')
    strongest: dict[tuple[int, int], object] = {}
    for (a, b), r in faf.attacks.items():
        key = (p.index[a], p.index[b])
        if key[0] != key[1]:
            strongest[key] = max(r, strongest.get(key, r))
    for (s, t) in sorted(strongest):
        lines.append(f'  S{s + 1} -> S{t + 1} [label="{format_degree(strongest[(s, t)])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_scc_dot(input: str, output: str | None, fmt: str | None = None) -> str:
    dot = condensation_dot(load_faf(input, fmt))
    if output:
        try:
            Path(output).write_text(dot)
        except OSError as exc:
            raise UsageError(f"cannot write {output}: {exc}") from None
    return dot


class Mismatch(Exception):
    def __init__(self, report):
        self.report = report
        super().__init__("engines disagree")


def cmd_bench(faf: FAF, engines: list[str], kind: SemanticsKind, repetitions: int = 5,
              lattice: str = "breakpoints") -> dict:
    lat = resolve_lattice(lattice, faf)
    timings: dict[str, list[float]] = {}
    outputs = {}
    for engine in engines:
        timings[engine] = []
        for _ in range(repetitions):
            t0 = time.perf_counter()
            out = run_engine(faf, kind, engine, lat)
            timings[engine].append(time.perf_counter() - t0)
        outputs[engine] = set(out)
    medians = {e: statistics.median(ts) * 1000 for e, ts in timings.items()}
    report = {
        "semantics": kind.value,
        "lattice": lat.name,
        "arguments": len(faf.args),
        "components": len(compute_sccs(faf)),
        "median_ms": {e: round(m, 3) for e, m in medians.items()},
        "count": {e: len(o) for e, o in outputs.items()},
        "equal": len({frozenset(o) for o in outputs.values()}) == 1,
    }
    if "scc" in medians and "direct" in medians and medians["scc"] > 0:
        report["speedup"] = round(medians["direct"] / medians["scc"], 2)
    if not report["equal"]:
        raise Mismatch(report)
    return report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    kinds = [k.value for k in SemanticsKind]
    p = _Parser(prog="fuzzyscc", description="Fuzzy argumentation solver (Goedel semantics).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="enumerate extensions")
    s.add_argument("--input", required=True)
    s.add_argument("--format", choices=["fapx", "structured"])
    s.add_argument("--semantics", required=True, choices=kinds)
    s.add_argument("--engine", choices=["scc", "direct"], default="scc")
    s.add_argument("--lattice", default="breakpoints", help="breakpoints | grid:k | crisp")
    s.add_argument("--max-extensions", type=int, default=DEFAULT_MAX_EXTENSIONS,
                   help="0 for unlimited")
    s.add_argument("--prune", action="store_true", help="drop always-tolerable attacks first")
    s.add_argument("--trace", help="write the recursion trace as JSON lines")

    c = sub.add_parser("check", help="membership verdicts, direct and recursive")
    c.add_argument("--input", required=True)
    c.add_argument("--format", choices=["fapx", "structured"])
    c.add_argument("--extension", required=True)
    c.add_argument("--semantics", action="append", choices=kinds,
                   help="repeatable; default: every semantics")
    c.add_argument("--C", dest="c_file", help="fuzzy set C (defaults to all arguments)")
    c.add_argument("--lattice", default="breakpoints")

    d = sub.add_parser("scc", help="DOT export of the condensation")
    d.add_argument("--input", required=True)
    d.add_argument("--format", choices=["fapx", "structured"])
    d.add_argument("--output")

    b = sub.add_parser("bench", help="time engines and compare their outputs")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--input")
    src.add_argument("--generate", help="chain(k) | cycle(n,degree) | layered(w,d)")
    b.add_argument("--format", choices=["fapx", "structured"])
    b.add_argument("--engines", default="scc,direct")
    b.add_argument("--semantics", default="preferred", choices=kinds)
    b.add_argument("--repetitions", type=int, default=5)
    b.add_argument("--lattice", default="breakpoints")
    return p


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or an argparse usage error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "solve":
            if args.max_extensions < 0:
                raise UsageError("--max-extensions must be >= 0")
            req = SolveRequest(args.input, SemanticsKind(args.semantics), args.engine, args.lattice,
                               args.max_extensions, args.prune, args.format, args.trace)
            _emit(cmd_solve(req))
        elif args.command == "check":
            kinds = [SemanticsKind(k) for k in args.semantics] if args.semantics else list(SemanticsKind)
            _emit(cmd_check(args.input, args.extension, kinds, args.c_file, args.lattice, args.format))
        elif args.command == "scc":
            dot = cmd_scc_dot(args.input, args.output, args.format)
            if not args.output:
                sys.stdout.write(dot)
        elif args.command == "bench":
            engines = [e.strip() for e in args.engines.split(",") if e.strip()]
            if args.repetitions < 1 or not engines:
                raise UsageError("need at least one engine and one repetition")
            faf = load_faf(args.input, args.format) if args.input else from_spec(args.generate)
            _emit(cmd_bench(faf, engines, _kind(args.semantics), args.repetitions, args.lattice))
    except FAFParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FAFError as exc:
        # bad lattice or generator spec
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc} (set FAF_BUDGET to raise it)", file=sys.stderr)
        return EXIT_BUDGET
    except Mismatch as exc:
        _emit(exc.report)
        print("engines disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
