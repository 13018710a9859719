from hypothesis import given, settings

from fuzzyscc import compute_sccs, condensation, is_single_scc, make_faf, restrict
from fuzzyscc.generators import chain

from conftest import fafs, fs
from oracles import reach_sccs


def comps(faf):
    return set(compute_sccs(faf).components)


def test_example_partitions(ex1, ex2):
    assert comps(ex1) == {frozenset("A"), frozenset("BC"), frozenset("DEF")}
    assert comps(ex2) == {frozenset("AB"), frozenset("CDEF"), frozenset("GHI")}


def test_attack_free_singletons():
    faf = make_faf({"A": "0.5", "B": "0.5", "C": "1"})
    assert comps(faf) == {frozenset("A"), frozenset("B"), frozenset("C")}


def test_condensation_example1(ex1):
    p = compute_sccs(ex1)
    cond = condensation(ex1, p)
    s1, s2, s3 = (p.component_of(x) for x in "ABD")
    assert cond.edges == {(s1, s2), (s2, s3)}
    assert cond.topo_order == (s1, s2, s3)
    assert cond.initial == {s1}


def test_condensation_example2(ex2):
    p = compute_sccs(ex2)
    cond = condensation(ex2, p)
    s1, s2, s3 = (p.component_of(x) for x in "ACG")
    assert cond.edges == {(s1, s2), (s2, s3)}
    assert cond.ancestors[s3] == {s1, s2}


def test_single_scc():
    loop = make_faf({"A": "0.5", "B": "0.5"}, {("A", "B"): "0.5", ("B", "A"): "0.5"})
    cond = condensation(loop)
    assert cond.nodes == (0,) and not cond.edges and cond.initial == {0}
    assert is_single_scc(make_faf({"A": "1"}))


def test_is_single_scc_examples(ex1, ex2):
    assert is_single_scc(restrict(ex2, fs(A="0.8", B="0.8")))
    assert not is_single_scc(ex1)


def test_self_attack_stays_separate():
    faf = make_faf({"A": "1", "B": "1"}, {("A", "A"): "1", ("A", "B"): "1"})
    assert comps(faf) == {frozenset("A"), frozenset("B")}


def test_topological_tie_break():
    faf = chain(3)
    p = compute_sccs(faf)
    order = condensation(faf, p).topo_order
    assert [min(p.components[n]) for n in order] == ["a0", "a1", "a2"]


@settings(max_examples=300)
@given(fafs(max_args=8, max_attacks=14))
def test_partition_matches_reachability_oracle(faf):
    p = compute_sccs(faf)
    assert set(p.components) == reach_sccs(faf)
    assert sorted(x for c in p.components for x in c) == sorted(faf.args)


@settings(max_examples=300)
@given(fafs(max_args=8, max_attacks=14))
def test_condensation_invariants(faf):
    p = compute_sccs(faf)
    cond = condensation(faf, p)
    pos = {n: i for i, n in enumerate(cond.topo_order)}
    assert sorted(cond.topo_order) == list(cond.nodes)
    for a, b in cond.edges:
        assert pos[a] < pos[b]
    for n in cond.nodes:
        assert n not in cond.ancestors[n]
        expect = set(cond.parents[n])
        for par in cond.parents[n]:
            expect |= cond.ancestors[par]
        assert cond.ancestors[n] == expect
