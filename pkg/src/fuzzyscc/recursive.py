"""SCC-recursive computation of fuzzy extensions.

For a component S and a (partial) extension E:

* limited part L(x): strongest attack on x from members of E outside S,
  ``max_B min(E(B), rho_Bx)``;
* residual part R(x) = min(A(x), 1 - L(x));
* defended part D(x): the largest degree <= R(x) that every outside attacker,
  after the best single weakening by E, attacks tolerably.

Each component is then solved on the framework restricted to R with
C' = D ∩ C, recursing whenever that restriction still splits into several
components, and calling the direct enumerator on single-component pieces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .attacks import _best_weakening
from .core import EMPTY, FAF, ONE, ZERO, DegreeLattice, FAFError, FuzzySet, fuzzy_subset, restrict
from .scc import compute_sccs, condensation
from .semantics import (
    BudgetExceeded,
    ExtensionSet,
    SemanticsKind,
    default_budget,
    enumerate_extensions,
    extension_set,
    grounded,
    is_admissible,
    is_complete,
    is_preferred,
)

RECURSIVE_KINDS = frozenset({
    SemanticsKind.ADMISSIBLE,
    SemanticsKind.COMPLETE,
    SemanticsKind.PREFERRED,
    SemanticsKind.GROUNDED,
})

TraceSink = Callable[[dict], None]


@dataclass(frozen=True)
class SccContext:
    scc: FuzzySet
    limited: FuzzySet
    residual: FuzzySet
    defended: FuzzySet
    restricted_faf: FAF


def _context(faf: FAF, members, e: Mapping[str, Fraction]) -> SccContext:
    limited, residual, defended = {}, {}, {}
    bw_cache: dict[str, Fraction] = {}
    for x in members:
        lim = ZERO
        room = ONE
        for b, rho in faf.attackers(x):
            if b in members:
                continue
            if b in e:
                lim = max(lim, min(e[b], rho))
            bw = bw_cache.get(b)
            if bw is None:
                bw = bw_cache[b] = _best_weakening(faf, e, b)
            room = min(room, ONE - min(bw, rho))
        limited[x] = lim
        residual[x] = min(faf.args[x], ONE - lim)
        defended[x] = min(residual[x], room)
    res = FuzzySet(residual)
    return SccContext(faf.args.only(members), FuzzySet(limited), res, FuzzySet(defended),
                      restrict(faf, res))


def _members(faf: FAF, scc: FuzzySet) -> frozenset[str]:
    comp = scc.support()
    if comp not in compute_sccs(faf).components or any(scc[x] != faf.args[x] for x in comp):
        raise FAFError(f"{scc!r} is not a strongly connected component of the framework")
    return comp


def scc_context(faf: FAF, scc: FuzzySet, e: FuzzySet) -> SccContext:
    return _context(faf, _members(faf, scc), e)


def limited_part(faf: FAF, scc: FuzzySet, e: FuzzySet) -> FuzzySet:
    return scc_context(faf, scc, e).limited


def residual_part(faf: FAF, scc: FuzzySet, e: FuzzySet) -> FuzzySet:
    return scc_context(faf, scc, e).residual


def defended_part(faf: FAF, scc: FuzzySet, e: FuzzySet) -> FuzzySet:
    return scc_context(faf, scc, e).defended


def prune_tolerable_attacks(faf: FAF) -> FAF:
    """Drop attacks that stay tolerable even at full argument degrees."""
    keep = {
        (a, b): r for (a, b), r in faf.attacks.items()
        if min(faf.args[a], r) + faf.args[b] > 1
    }
    if len(keep) == len(faf.attacks):
        return faf
    return FAF(faf.args, keep)


def _kind(kind) -> SemanticsKind:
    kind = SemanticsKind(kind)
    if kind not in RECURSIVE_KINDS:
        raise ValueError(f"{kind.value} has no SCC-recursive base function")
    return kind


# -- membership ---------------------------------------------------------------


def _base_check(faf, c_set, e, kind, lattice) -> bool:
    if kind is SemanticsKind.ADMISSIBLE:
        return is_admissible(faf, c_set, e)
    if kind is SemanticsKind.COMPLETE:
        return is_complete(faf, c_set, e)
    if kind is SemanticsKind.PREFERRED:
        return is_preferred(faf, c_set, e, lattice)
    return e == grounded(faf, c_set)


def _gf_check(faf, c_set, e, kind, lattice, prune) -> bool:
    p = compute_sccs(faf)
    if len(p) <= 1:
        return _base_check(faf, c_set, e, kind, lattice)
    for comp in p.components:
        ctx = _context(faf, comp, e)
        part = e.only(comp)
        if not fuzzy_subset(part, ctx.residual):
            return False
        sub = prune_tolerable_attacks(ctx.restricted_faf) if prune else ctx.restricted_faf
        if not _gf_check(sub, ctx.defended & c_set, part, kind, lattice, prune):
            return False
    return True


def gf_check(faf: FAF, c_set: FuzzySet, e: FuzzySet, kind, lattice: DegreeLattice,
             prune: bool = False) -> bool:
    """Recursive membership test: base check on single components, otherwise
    every component's share of ``e`` must belong to its restricted problem."""
    kind = _kind(kind)
    if not fuzzy_subset(e, faf.args):
        raise FAFError("extension is not a fuzzy subset of the framework's arguments")
    return _gf_check(faf, c_set, e, kind, lattice, prune)


# -- enumeration --------------------------------------------------------------


class _Solver:
    def __init__(self, kind, lattice, budget, prune, trace):
        self.kind = kind
        self.lattice = lattice
        self.budget = budget
        self.prune = prune
        self.trace = trace
        self.memo: dict[tuple[FAF, FuzzySet], ExtensionSet] = {}
        self.calls = 0

    def base(self, faf: FAF, c_set: FuzzySet) -> ExtensionSet:
        return enumerate_extensions(faf, c_set, self.kind, self.lattice, self.budget)

    def solve(self, faf: FAF, c_set: FuzzySet, depth: int = 0) -> ExtensionSet:
        key = (faf, c_set)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.calls += 1
        p = compute_sccs(faf)
        if len(p) <= 1:
            out = self.base(faf, c_set)
            if self.trace:
                self.trace({
                    "depth": depth, "base": self.kind.value,
                    "arguments": faf.args.to_json(), "C": c_set.to_json(),
                    "extensions": [x.to_json() for x in out],
                })
        else:
            out = self._decompose(faf, c_set, p, depth)
        self.memo[key] = out
        return out

    def _decompose(self, faf, c_set, p, depth) -> ExtensionSet:
        cond = condensation(faf, p)
        partial = [EMPTY]
        for n in cond.topo_order:
            comp = p.components[n]
            anc = set().union(*(p.components[a] for a in cond.ancestors[n]))
            grouped: dict[FuzzySet, list[FuzzySet]] = {}
            for e in partial:
                grouped.setdefault(e.only(anc), []).append(e)
            nxt = []
            for seen, group in grouped.items():
                ctx = _context(faf, comp, seen)
                sub = ctx.restricted_faf
                if self.prune:
                    sub = prune_tolerable_attacks(sub)
                c_sub = ctx.defended & c_set
                choices = self.solve(sub, c_sub, depth + 1)
                if self.trace:
                    self.trace({
                        "depth": depth, "component": sorted(comp),
                        "given": seen.to_json(), "limited": ctx.limited.to_json(),
                        "residual": ctx.residual.to_json(), "defended": ctx.defended.to_json(),
                        "C": c_sub.to_json(), "choices": [x.to_json() for x in choices],
                    })
                for e in group:
                    nxt.extend(e | ch for ch in choices)
                if len(nxt) > self.budget:
                    raise BudgetExceeded(len(nxt), self.budget)
            partial = nxt
        return extension_set(partial)


def gf_enumerate(faf: FAF, c_set: FuzzySet, kind, lattice: DegreeLattice,
                 budget: int | None = None, prune: bool = True,
                 trace: TraceSink | None = None) -> ExtensionSet:
    """Enumerate lattice-valued extensions component by component.

    Restricted subproblems are memoized on (framework, C'), so branches that
    induce the same residual problem are solved once.
    """
    kind = _kind(kind)
    budget = default_budget() if budget is None else budget
    return _Solver(kind, lattice, budget, prune, trace).solve(faf, c_set)


def grounded_scc(faf: FAF, c_set: FuzzySet, trace: TraceSink | None = None) -> FuzzySet:
    """Grounded extension by one pass over the components in topological order."""
    p = compute_sccs(faf)
    cond = condensation(faf, p)
    e = EMPTY
    for n in cond.topo_order:
        ctx = _context(faf, p.components[n], e)
        c_sub = ctx.defended & c_set
        part = grounded(ctx.restricted_faf, c_sub)
        if trace:
            trace({
                "component": sorted(p.components[n]), "limited": ctx.limited.to_json(),
                "residual": ctx.residual.to_json(), "defended": ctx.defended.to_json(),
                "grounded": part.to_json(),
            })
        e = e | part
    return e
