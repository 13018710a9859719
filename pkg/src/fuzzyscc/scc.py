"""SCC partition and condensation of the attack graph.

Attack degrees are irrelevant here: any present attack is an edge.
Components are numbered by their smallest member id so that traces and
outputs are reproducible.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

import networkx as nx

from .core import FAF, FuzzySet


@dataclass(frozen=True)
class SccPartition:
    components: tuple[frozenset[str], ...]
    index: dict

    def __len__(self):
        return len(self.components)

    def component_of(self, x: str) -> int:
        return self.index[x]


@dataclass(frozen=True)
class Condensation:
    nodes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    topo_order: tuple[int, ...]
    ancestors: dict
    parents: dict

    @property
    def initial(self) -> frozenset[int]:
        return frozenset(n for n in self.nodes if not self.parents[n])


def attack_graph(faf: FAF) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(faf.args)
    g.add_edges_from(faf.attacks)
    return g


def compute_sccs(faf: FAF) -> SccPartition:
    comps = sorted((frozenset(c) for c in nx.strongly_connected_components(attack_graph(faf))),
                   key=min)
    index = {x: i for i, c in enumerate(comps) for x in c}
    return SccPartition(tuple(comps), index)


def condensation(faf: FAF, p: SccPartition | None = None) -> Condensation:
    p = compute_sccs(faf) if p is None else p
    nodes = tuple(range(len(p)))
    edges = set()
    for a, b in faf.attacks:
        ca, cb = p.index[a], p.index[b]
        if ca != cb:
            edges.add((ca, cb))
    parents: dict[int, set[int]] = {n: set() for n in nodes}
    children: dict[int, set[int]] = {n: set() for n in nodes}
    for a, b in edges:
        parents[b].add(a)
        children[a].add(b)
    # Kahn with ties broken by smallest member id (= ordinal)
    indeg = {n: len(parents[n]) for n in nodes}
    ready = [n for n in nodes if indeg[n] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        n = heapq.heappop(ready)
        order.append(n)
        for m in children[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                heapq.heappush(ready, m)
    ancestors: dict[int, frozenset[int]] = {}
    for n in order:
        acc = set(parents[n])
        for par in parents[n]:
            acc |= ancestors[par]
        ancestors[n] = frozenset(acc)
    return Condensation(
        nodes, frozenset(edges), tuple(order), ancestors,
        {n: frozenset(ps) for n, ps in parents.items()},
    )


def is_single_scc(faf: FAF) -> bool:
    return len(compute_sccs(faf)) == 1


def component_set(faf: FAF, members) -> FuzzySet:
    """The component as a fuzzy set at full argument degrees."""
    return faf.args.only(members)
