"""Direct vs SCC-recursive enumeration on generated families.

    python scripts/bench_chain.py --family chain --sizes 2 3 4 --repetitions 5
    python scripts/bench_chain.py --family layered --sizes 2 3 --csv out.csv

The direct engine is skipped once its candidate count exceeds the budget.
"""
from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from dataclasses import dataclass, field

from fuzzyscc import BudgetExceeded, breakpoint_lattice, compute_sccs
from fuzzyscc.cli import run_engine
from fuzzyscc.generators import chain, layered
from fuzzyscc.semantics import SemanticsKind, candidate_count, default_budget

FAMILIES = {
    "chain": chain,
    "layered": lambda n: layered(2, n),
}


@dataclass(frozen=True)
class BenchConfig:
    family: str = "chain"
    sizes: tuple[int, ...] = (2, 3, 4)
    semantics: str = "preferred"
    repetitions: int = 5
    budget: int = field(default_factory=default_budget)


def median_ms(faf, kind, engine, lat, reps):
    times, out = [], None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = run_engine(faf, kind, engine, lat)
        times.append(time.perf_counter() - t0)
    return statistics.median(times) * 1000, set(out)


def run(cfg: BenchConfig) -> list[dict]:
    kind = SemanticsKind(cfg.semantics)
    rows = []
    for n in cfg.sizes:
        faf = FAMILIES[cfg.family](n)
        lat = breakpoint_lattice(faf)
        row = {"size": n, "arguments": len(faf.args), "components": len(compute_sccs(faf)),
               "candidates": candidate_count(faf, faf.args, lat)}
        scc_ms, scc_out = median_ms(faf, kind, "scc", lat, cfg.repetitions)
        row.update(scc_ms=round(scc_ms, 2), extensions=len(scc_out))
        if row["candidates"] <= cfg.budget:
            try:
                d_ms, d_out = median_ms(faf, kind, "direct", lat, cfg.repetitions)
            except BudgetExceeded:
                d_ms, d_out = None, None
            if d_ms is not None:
                row.update(direct_ms=round(d_ms, 2), speedup=round(d_ms / scc_ms, 1),
                           equal=d_out == scc_out)
        rows.append(row)
        print(row, flush=True)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--family", choices=sorted(FAMILIES), default=BenchConfig.family)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(BenchConfig.sizes))
    ap.add_argument("--semantics", default=BenchConfig.semantics,
                    choices=["admissible", "complete", "preferred", "grounded"])
    ap.add_argument("--repetitions", type=int, default=BenchConfig.repetitions)
    ap.add_argument("--csv")
    args = ap.parse_args()
    rows = run(BenchConfig(args.family, tuple(args.sizes), args.semantics, args.repetitions))
    if any(r.get("equal") is False for r in rows):
        print("engines disagree", file=sys.stderr)
        sys.exit(4)
    if args.csv:
        keys = sorted({k for r in rows for k in r})
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=keys)
            w.writeheader()
            w.writerows(rows)


if __name__ == "__main__":
    main()
