"""Framework generators for benchmarks and randomized tests.

Generator mini-language (CLI ``bench --generate``):

    chain(k)             k mutual-attack pairs linked head to tail
    cycle(n, degree)     directed n-cycle, every degree equal
    layered(w, d)        d layers, each a w-cycle, layer i attacking layer i+1
"""
from __future__ import annotations

import random
import re
from fractions import Fraction

from .core import FAF, FAFError, FuzzySet, parse_decimal_degree

D08 = Fraction(8, 10)
D09 = Fraction(9, 10)


def chain(k: int, arg_degree=D08, forward=D08, backward=D09, link=D09) -> FAF:
    """Pairs (a_i <-> b_i) with b_i attacking a_{i+1}."""
    args, atts = {}, {}
    for i in range(k):
        a, b = f"a{i}", f"b{i}"
        args[a] = args[b] = arg_degree
        atts[(a, b)] = forward
        atts[(b, a)] = backward
        if i:
            atts[(f"b{i - 1}", a)] = link
    return FAF(FuzzySet(args), atts)


def cycle(n: int, deg=D08) -> FAF:
    names = [f"c{i}" for i in range(n)]
    return FAF(FuzzySet({x: deg for x in names}),
               {(names[i], names[(i + 1) % n]): deg for i in range(n)})


def layered(w: int, d: int, arg_degree=D08, inner=D09, across=D08) -> FAF:
    args, atts = {}, {}
    for layer in range(d):
        names = [f"l{layer}_{j}" for j in range(w)]
        for x in names:
            args[x] = arg_degree
        if w > 1:
            for j in range(w):
                atts[(names[j], names[(j + 1) % w])] = inner
        if layer:
            for j in range(w):
                atts[(f"l{layer - 1}_{j}", names[j])] = across
    return FAF(FuzzySet(args), atts)


_GEN_RE = re.compile(r"\s*(\w+)\s*\(([^)]*)\)\s*\Z")


def from_spec(spec: str) -> FAF:
    m = _GEN_RE.match(spec)
    if not m:
        raise FAFError(f"bad generator spec {spec!r}")
    name, params = m.group(1), [p.strip() for p in m.group(2).split(",") if p.strip()]
    try:
        if name == "chain" and len(params) == 1:
            return chain(int(params[0]))
        if name == "cycle" and len(params) in (1, 2):
            deg = parse_decimal_degree(params[1]) if len(params) == 2 else D08
            return cycle(int(params[0]), deg)
        if name == "layered" and len(params) == 2:
            return layered(int(params[0]), int(params[1]))
    except ValueError as exc:
        raise FAFError(f"bad generator spec {spec!r}: {exc}") from None
    raise FAFError(f"bad generator spec {spec!r}")


TENTHS = tuple(Fraction(i, 10) for i in range(1, 10))


def random_faf(rng: random.Random, max_args: int = 5, max_attacks: int = 8,
               degrees=TENTHS, crisp: bool = False, self_attacks: bool = True) -> FAF:
    """Random framework; ``crisp`` sets every degree to 1."""
    n = rng.randint(1, max_args)
    names = [chr(ord("A") + i) for i in range(n)]
    pairs = [(a, b) for a in names for b in names if self_attacks or a != b]
    m = rng.randint(0, min(max_attacks, len(pairs)))
    chosen = rng.sample(pairs, m)
    pick = (lambda: Fraction(1)) if crisp else (lambda: rng.choice(degrees))
    return FAF(FuzzySet({x: pick() for x in names}), {p: pick() for p in chosen})
