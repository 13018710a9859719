"""How the enumerated family depends on the degree lattice.

For each framework, preferred extensions are computed on the breakpoint
lattice and on progressively finer grids. The report shows how many
extensions each lattice yields and whether every breakpoint-lattice
extension is still preferred on the finer grid.

    python scripts/probe_grid.py --grids 4 10 20
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from importlib import resources

from fuzzyscc import (
    BudgetExceeded,
    breakpoint_lattice,
    gf_enumerate,
    grid_lattice,
    is_preferred,
    parse_faf,
    restrict,
)
from fuzzyscc.generators import chain, cycle


@dataclass(frozen=True)
class ProbeConfig:
    grids: tuple[int, ...] = (4, 10, 20)
    semantics: str = "preferred"


def frameworks():
    ex1 = parse_faf(resources.files("fuzzyscc").joinpath("data", "example1.fapx").read_text())
    ex2 = parse_faf(resources.files("fuzzyscc").joinpath("data", "example2.fapx").read_text())
    yield "example1", ex1
    yield "example2 first component", restrict(ex2, ex2.args.only({"A", "B"}))
    yield "chain(2)", chain(2)
    yield "cycle(3, 0.8)", cycle(3)


def probe(cfg: ProbeConfig) -> None:
    for name, faf in frameworks():
        base_lat = breakpoint_lattice(faf)
        base = gf_enumerate(faf, faf.args, cfg.semantics, base_lat)
        print(f"{name}: breakpoints ({len(base_lat.values)} values) -> {len(base)} extensions")
        for k in cfg.grids:
            lat = grid_lattice(faf, k)
            try:
                fine = gf_enumerate(faf, faf.args, cfg.semantics, lat)
            except BudgetExceeded as exc:
                print(f"  grid:{k}: skipped ({exc})")
                continue
            kept = sum(is_preferred(faf, faf.args, e, lat) for e in base)
            print(f"  grid:{k} ({len(lat.values)} values) -> {len(fine)} extensions; "
                  f"{kept}/{len(base)} breakpoint extensions still preferred")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--grids", type=int, nargs="+", default=list(ProbeConfig.grids))
    args = ap.parse_args()
    probe(ProbeConfig(tuple(args.grids)))


if __name__ == "__main__":
    main()
