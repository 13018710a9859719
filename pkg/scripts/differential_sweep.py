"""Randomized differential sweep: recursive engine vs direct enumeration,
plus the stable/preferred comparison.

    python scripts/differential_sweep.py --instances 500 --seed 7
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

from fuzzyscc import (
    breakpoint_lattice,
    enumerate_extensions,
    gf_enumerate,
    grounded,
    grounded_scc,
    serialize_faf,
)
from fuzzyscc.generators import random_faf


@dataclass(frozen=True)
class SweepConfig:
    instances: int = 300
    seed: int = 0
    max_args: int = 5
    max_attacks: int = 8
    kinds: tuple[str, ...] = ("admissible", "complete", "preferred")
    stable: bool = True


def sweep(cfg: SweepConfig) -> dict:
    findings = []
    stable_equal = 0
    t0 = time.perf_counter()
    for i in range(cfg.instances):
        faf = random_faf(random.Random(cfg.seed * 1_000_003 + i), cfg.max_args, cfg.max_attacks)
        lat = breakpoint_lattice(faf)
        direct = {k: set(enumerate_extensions(faf, faf.args, k, lat)) for k in cfg.kinds}
        for k in cfg.kinds:
            if set(gf_enumerate(faf, faf.args, k, lat)) != direct[k]:
                findings.append({"instance": i, "kind": k, "framework": serialize_faf(faf, "fapx")})
        if grounded_scc(faf, faf.args) != grounded(faf, faf.args):
            findings.append({"instance": i, "kind": "grounded", "framework": serialize_faf(faf, "fapx")})
        if cfg.stable:
            pref = direct.get("preferred") or set(enumerate_extensions(faf, faf.args, "preferred", lat))
            stab = set(enumerate_extensions(faf, faf.args, "stable", lat))
            if stab == pref:
                stable_equal += 1
            else:
                findings.append({"instance": i, "kind": "stable!=preferred",
                                 "framework": serialize_faf(faf, "fapx")})
    return {
        "instances": cfg.instances,
        "mismatches": len(findings),
        "stable_equals_preferred": stable_equal if cfg.stable else None,
        "seconds": round(time.perf_counter() - t0, 2),
        "findings": findings[:10],
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--instances", type=int, default=SweepConfig.instances)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--max-args", type=int, default=SweepConfig.max_args)
    ap.add_argument("--max-attacks", type=int, default=SweepConfig.max_attacks)
    ap.add_argument("--no-stable", action="store_true")
    args = ap.parse_args()
    cfg = SweepConfig(args.instances, args.seed, args.max_args, args.max_attacks, stable=not args.no_stable)
    out = sweep(cfg)
    print(json.dumps(out, indent=2))
    sys.exit(4 if out["mismatches"] else 0)


if __name__ == "__main__":
    main()
