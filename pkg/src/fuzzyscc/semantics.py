"""Direct (non-recursive) semantics.

Membership checkers work on :class:`~fractions.Fraction` degrees. The brute
force enumerator scales every degree to an integer over a common denominator
and evaluates candidates in numpy batches, which keeps it exact.
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .attacks import characteristic, defends
from .core import FAF, ONE, DegreeLattice, FAFError, FuzzySet, fuzzy_subset

DEFAULT_BUDGET = 10**7
_BATCH = 1 << 16


class SemanticsKind(str, enum.Enum):
    CONFLICT_FREE = "conflict_free"
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    PREFERRED = "preferred"
    GROUNDED = "grounded"
    STABLE = "stable"


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration needs {required} candidates, budget is {budget}")


def default_budget() -> int:
    env = os.environ.get("FAF_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


ExtensionSet = tuple  # tuple[FuzzySet, ...], deduplicated and sorted


def extension_set(extensions: Iterable[FuzzySet]) -> ExtensionSet:
    """Deduplicate and sort by (argument id, degree) lexicographically."""
    return tuple(sorted(set(extensions), key=FuzzySet.sort_key))


def _check_subset(faf: FAF, e: FuzzySet, what: str = "extension") -> None:
    if not fuzzy_subset(e, faf.args):
        raise FAFError(f"{what} is not a fuzzy subset of the framework's arguments")


# -- membership checkers ----------------------------------------------------


def is_conflict_free(faf: FAF, e: FuzzySet) -> bool:
    _check_subset(faf, e)
    for (a, b), rho in faf.attacks.items():
        if a in e and b in e and min(e[a], rho) + e[b] > 1:
            return False
    return True


def is_admissible(faf: FAF, c_set: FuzzySet, e: FuzzySet) -> bool:
    _check_subset(faf, e)
    if not fuzzy_subset(e, c_set) or not is_conflict_free(faf, e):
        return False
    return all(defends(faf, e, x, d) for x, d in e.items())


def is_complete(faf: FAF, c_set: FuzzySet, e: FuzzySet) -> bool:
    return is_admissible(faf, c_set, e) and fuzzy_subset(characteristic(faf, c_set, e), e)


def is_stable(faf: FAF, e: FuzzySet) -> bool:
    """Conflict-free, and every point above E(x) is sufficiently attacked by E."""
    if not is_conflict_free(faf, e):
        return False
    for x, top in faf.args.items():
        ex = e[x]
        if ex >= top:
            continue
        hit = max((min(e[b], rho) for b, rho in faf.attackers(x)), default=Fraction(0))
        if hit < ONE - ex:
            return False
    return True


def grounded(faf: FAF, c_set: FuzzySet) -> FuzzySet:
    """Least fixed point of the characteristic function in ``c_set``."""
    s = FuzzySet()
    while True:
        nxt = characteristic(faf, c_set, s)
        if nxt == s:
            return s
        s = nxt


def is_grounded(faf: FAF, c_set: FuzzySet, e: FuzzySet) -> bool:
    _check_subset(faf, e)
    return e == grounded(faf, c_set)


def is_preferred(faf: FAF, c_set: FuzzySet, e: FuzzySet, lattice: DegreeLattice) -> bool:
    """Admissible and not strictly below any lattice-valued admissible set in C."""
    if not is_admissible(faf, c_set, e):
        return False
    enc = _Encoded(faf, c_set, lattice, extra=e.values())
    floors = {i: enc.scale(e[x]) for i, x in enumerate(enc.names)}
    for block in enc.candidates(default_budget(), floors=floors):
        adm = enc.admissible(block)
        if not adm.any():
            continue
        rows = block[adm]
        base = np.array([floors[i] for i in range(enc.n)], dtype=np.int64)
        if (rows != base).any(axis=1).any():
            return False
    return True


def check(faf: FAF, c_set: FuzzySet, e: FuzzySet, kind: SemanticsKind | str,
          lattice: DegreeLattice | None = None) -> bool:
    kind = SemanticsKind(kind)
    if kind is SemanticsKind.CONFLICT_FREE:
        return fuzzy_subset(e, c_set) and is_conflict_free(faf, e)
    if kind is SemanticsKind.ADMISSIBLE:
        return is_admissible(faf, c_set, e)
    if kind is SemanticsKind.COMPLETE:
        return is_complete(faf, c_set, e)
    if kind is SemanticsKind.GROUNDED:
        return is_grounded(faf, c_set, e)
    if kind is SemanticsKind.STABLE:
        return fuzzy_subset(e, c_set) and is_stable(faf, e)
    if lattice is None:
        raise ValueError("preferred membership needs a lattice")
    return is_preferred(faf, c_set, e, lattice)


# -- brute-force enumeration ------------------------------------------------


class _Encoded:
    """Framework, C and lattice scaled to integers over one denominator."""

    def __init__(self, faf: FAF, c_set: Mapping[str, Fraction], lattice: DegreeLattice,
                 extra: Iterable[Fraction] = ()):
        self.names = faf.names
        self.n = len(self.names)
        idx = {x: i for i, x in enumerate(self.names)}
        fracs = list(lattice.values) + list(faf.degrees()) + list(extra)
        fracs += [c_set[x] for x in self.names]
        self.q = math.lcm(*(Fraction(f).denominator for f in fracs)) if fracs else 1
        self.lattice = lattice
        self.top = np.array([self.scale(faf.args[x]) for x in self.names], dtype=np.int64)
        self.cap = np.array(
            [min(self.scale(faf.args[x]), self.scale(c_set[x])) for x in self.names], dtype=np.int64
        )
        self.att = [(idx[a], idx[b], self.scale(r)) for (a, b), r in faf.attacks.items()]
        self.into: list[list[tuple[int, int]]] = [[] for _ in self.names]
        for a, b, r in self.att:
            self.into[b].append((a, r))
        lat = [self.scale(v) for v in lattice.values]
        self.domains = [np.array([v for v in lat if v <= self.cap[i]], dtype=np.int64)
                        for i in range(self.n)]

    def scale(self, f: Fraction) -> int:
        f = Fraction(f)
        return f.numerator * (self.q // f.denominator)

    def unscale(self, row: Sequence[int]) -> FuzzySet:
        return FuzzySet((x, Fraction(int(v), self.q)) for x, v in zip(self.names, row))

    def count(self, floors: Mapping[int, int] | None = None) -> int:
        total = 1
        for i, dom in enumerate(self.domains):
            total *= int((dom >= floors[i]).sum()) if floors else len(dom)
        return total

    def candidates(self, budget: int, floors: Mapping[int, int] | None = None):
        """Yield (batch, n) int arrays covering the whole candidate product."""
        doms = self.domains
        if floors:
            doms = [d[d >= floors[i]] for i, d in enumerate(doms)]
        sizes = [len(d) for d in doms]
        total = math.prod(sizes)
        if total > budget:
            raise BudgetExceeded(total, budget)
        if total == 0:
            return
        for start in range(0, total, _BATCH):
            k = np.arange(start, min(start + _BATCH, total), dtype=np.int64)
            block = np.empty((len(k), self.n), dtype=np.int64)
            for i in range(self.n - 1, -1, -1):
                k, digit = np.divmod(k, sizes[i])
                block[:, i] = doms[i][digit]
            yield block

    def conflict_free(self, e: np.ndarray) -> np.ndarray:
        ok = np.ones(len(e), dtype=bool)
        for a, b, r in self.att:
            ok &= np.minimum(e[:, a], r) + e[:, b] <= self.q
        return ok

    def hit(self, e: np.ndarray, x: int) -> np.ndarray:
        """Strongest single attack on x from the candidate: max_B min(E(B), rho)."""
        h = np.zeros(len(e), dtype=np.int64)
        for a, r in self.into[x]:
            np.maximum(h, np.minimum(e[:, a], r), out=h)
        return h

    def characteristic(self, e: np.ndarray) -> np.ndarray:
        out = np.repeat(self.cap[None, :], len(e), axis=0)
        bw = {}
        for x in range(self.n):
            for b, r in self.into[x]:
                if b not in bw:
                    bw[b] = np.minimum(self.top[b], self.q - self.hit(e, b))
                np.minimum(out[:, x], self.q - np.minimum(bw[b], r), out=out[:, x])
        return out

    def admissible(self, e: np.ndarray) -> np.ndarray:
        ok = self.conflict_free(e)
        return ok & (e <= self.characteristic(e)).all(axis=1)

    def complete(self, e: np.ndarray) -> np.ndarray:
        ok = self.conflict_free(e)
        return ok & (e == self.characteristic(e)).all(axis=1)

    def stable(self, e: np.ndarray) -> np.ndarray:
        ok = self.conflict_free(e)
        for x in range(self.n):
            ok &= (e[:, x] >= self.top[x]) | (self.hit(e, x) >= self.q - e[:, x])
        return ok


def _maximal(rows: np.ndarray) -> np.ndarray:
    """Rows not strictly dominated (pointwise) by another row."""
    if len(rows) == 0:
        return rows
    # a dominating row has a strictly larger sum, so it is seen first
    order = np.argsort(-rows.sum(axis=1), kind="stable")
    kept = np.empty_like(rows)
    k = 0
    for i in order:
        r = rows[i]
        if k and (kept[:k] >= r).all(axis=1).any():
            continue
        kept[k] = r
        k += 1
    return kept[:k]


def enumerate_extensions(faf: FAF, c_set: FuzzySet, kind: SemanticsKind | str,
                         lattice: DegreeLattice, budget: int | None = None) -> ExtensionSet:
    """All lattice-valued extensions in ``c_set`` of the given kind.

    Preferred maximality is judged against every lattice-valued admissible
    candidate. Grounded delegates to :func:`grounded` and needs no lattice.
    """
    kind = SemanticsKind(kind)
    if kind is SemanticsKind.GROUNDED:
        return (grounded(faf, c_set),)
    budget = default_budget() if budget is None else budget
    enc = _Encoded(faf, c_set, lattice)
    test = {
        SemanticsKind.CONFLICT_FREE: enc.conflict_free,
        SemanticsKind.ADMISSIBLE: enc.admissible,
        SemanticsKind.PREFERRED: enc.admissible,
        SemanticsKind.COMPLETE: enc.complete,
        SemanticsKind.STABLE: enc.stable,
    }[kind]
    hits = [block[test(block)] for block in enc.candidates(budget)]
    rows = np.concatenate(hits) if hits else np.empty((0, enc.n), dtype=np.int64)
    if kind is SemanticsKind.PREFERRED:
        rows = _maximal(rows)
    return extension_set(enc.unscale(r) for r in rows)


def candidate_count(faf: FAF, c_set: FuzzySet, lattice: DegreeLattice) -> int:
    return _Encoded(faf, c_set, lattice).count()
