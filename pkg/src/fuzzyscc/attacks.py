"""Tolerable/sufficient attacks, weakening, weakening defence and the
characteristic function.

Defence only checks the maximal fuzzy point (B, A(B)) of each attacker:
weakening and tolerability are monotone in the attacker's degree, so that
point dominates every smaller one.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Mapping

from .core import FAF, ONE, ZERO, FAFError, FuzzySet


class AttackStatus(enum.Enum):
    TOLERABLE = "tolerable"
    SUFFICIENT = "sufficient"


def attack_status(a: Fraction, rho: Fraction, b: Fraction) -> AttackStatus:
    if min(a, rho) + b <= 1:
        return AttackStatus.TOLERABLE
    return AttackStatus.SUFFICIENT


def weaken(a: Fraction, rho: Fraction, b: Fraction) -> Fraction:
    """Degree left of (B, b) after (A, a) attacks it with strength rho."""
    return min(ONE - min(a, rho), b)


def _check_arg(faf: FAF, x: str) -> None:
    if x not in faf.args:
        raise FAFError(f"unknown argument {x!r}")


def _best_weakening(faf: FAF, s: Mapping[str, Fraction], b_arg: str) -> Fraction:
    strongest = ZERO
    for a, rho in faf.attackers(b_arg):
        v = s[a] if a in s else ZERO
        if v:
            hit = min(v, rho)
            if hit > strongest:
                strongest = hit
    return min(ONE - strongest, faf.args[b_arg])


def best_weakening(faf: FAF, s: FuzzySet, b_arg: str) -> Fraction:
    """Lowest degree any single member of ``s`` weakens ``b_arg`` to.

    Returns A(b_arg) if nothing in ``s`` attacks it.
    """
    _check_arg(faf, b_arg)
    return _best_weakening(faf, s, b_arg)


def defends(faf: FAF, s: FuzzySet, c_arg: str, c: Fraction) -> bool:
    """Does ``s`` weakening-defend the fuzzy point (c_arg, c)?"""
    _check_arg(faf, c_arg)
    if c > faf.args[c_arg]:
        raise FAFError(f"degree {c} exceeds argument degree of {c_arg}")
    for b, rho in faf.attackers(c_arg):
        if min(_best_weakening(faf, s, b), rho) + c > 1:
            return False
    return True


def characteristic(faf: FAF, c_set: Mapping[str, Fraction], s: Mapping[str, Fraction]) -> FuzzySet:
    """Largest degree of each argument that ``s`` defends, capped by ``c_set``."""
    out = {}
    bw_cache: dict[str, Fraction] = {}
    for x in faf.args:
        cap = c_set[x] if x in c_set else ZERO
        if not cap:
            continue
        for b, rho in faf.attackers(x):
            bw = bw_cache.get(b)
            if bw is None:
                bw = bw_cache[b] = _best_weakening(faf, s, b)
            room = ONE - min(bw, rho)
            if room < cap:
                cap = room
        if cap:
            out[x] = cap
    return FuzzySet(out)


def parents(faf: FAF, x: str) -> FuzzySet:
    _check_arg(faf, x)
    return FuzzySet((b, faf.args[b]) for b, _ in faf.attackers(x))


def outparents(faf: FAF, s: Mapping[str, Fraction]) -> FuzzySet:
    """Arguments outside Supp(s), at full degree, that attack some member of s."""
    inside = {x for x, v in s.items() if v}
    out = {}
    for x in inside:
        for b, _ in faf.attackers(x):
            if b not in inside:
                out[b] = faf.args[b]
    return FuzzySet(out)


def set_sufficiently_attacks(faf: FAF, s: FuzzySet, target_arg: str, t: Fraction) -> bool:
    """Does some member of ``s`` sufficiently attack (target_arg, t)?"""
    _check_arg(faf, target_arg)
    return any(min(s[b], rho) + t > 1 for b, rho in faf.attackers(target_arg) if b in s)
