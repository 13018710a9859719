"""Exact degrees, fuzzy sets, the FAF data model and the degree lattice.

All degrees are :class:`fractions.Fraction` values in [0, 1]. Nothing in the
decision logic touches floating point.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Degree = Fraction
DegreeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_DECIMAL_RE = re.compile(r"(\d+)(?:\.(\d{1,4}))?\Z")
_FRACTION_RE = re.compile(r"(\d+)/(\d+)\Z")


class FAFError(ValueError):
    """Invalid framework or fuzzy set."""


class FAFParseError(FAFError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


def degree(value: DegreeLike) -> Fraction:
    """Coerce ``value`` to an exact degree in [0, 1].

    Strings may be decimals (``"0.8"``) or ratios (``"1/3"``). Floats are
    rejected on purpose.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"degrees must be exact, got {value!r}")
    if isinstance(value, str):
        text = value.strip()
        m = _FRACTION_RE.match(text)
        if m:
            d = Fraction(int(m.group(1)), int(m.group(2)))
        else:
            try:
                d = Fraction(text)
            except ValueError as exc:
                raise FAFError(f"not a degree: {value!r}") from exc
    else:
        d = Fraction(value)
    if not ZERO <= d <= ONE:
        raise FAFError(f"degree {value!r} outside [0, 1]")
    return d


def parse_decimal_degree(text: str) -> Fraction:
    """Strict input syntax: a decimal with at most 4 fractional digits."""
    m = _DECIMAL_RE.match(text.strip())
    if not m:
        raise FAFError(f"bad degree {text!r} (expected a decimal with at most 4 fractional digits)")
    return Fraction(text.strip())


def format_degree(d: Fraction) -> str:
    """Minimal decimal string when one exists (``0.2``, ``1``), else ``p/q``."""
    d = Fraction(d)
    if d.denominator == 1:
        return str(d.numerator)
    q = d.denominator
    twos = fives = 0
    while q % 2 == 0:
        q //= 2
        twos += 1
    while q % 5 == 0:
        q //= 5
        fives += 1
    if q != 1:
        return f"{d.numerator}/{d.denominator}"
    digits = max(twos, fives)
    scaled = d.numerator * 10**digits // d.denominator
    whole, frac = divmod(scaled, 10**digits)
    return f"{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")


def tnorm(x: Fraction, y: Fraction) -> Fraction:
    """Goedel t-norm."""
    return min(x, y)


def complement(x: Fraction) -> Fraction:
    return ONE - x


class FuzzySet(Mapping[str, Fraction]):
    """Immutable map argument -> degree; absent arguments have degree 0.

    Zero entries are dropped on construction so equality and hashing are
    canonical. ``S[x]`` returns 0 for arguments outside the support, while
    ``x in S`` tests support membership.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, entries: Mapping[str, DegreeLike] | Iterable[tuple[str, DegreeLike]] = ()):
        if isinstance(entries, Mapping):
            entries = entries.items()
        items = {}
        for k, v in entries:
            d = v if type(v) is Fraction and ZERO <= v <= ONE else degree(v)
            if d:
                items[k] = d
        self._items = dict(sorted(items.items()))
        self._hash = None

    def __getitem__(self, key: str) -> Fraction:
        return self._items.get(key, ZERO)

    def __contains__(self, key: object) -> bool:
        return key in self._items

    def __iter__(self) -> Iterator[str]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FuzzySet):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self == FuzzySet(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._items.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{k}:{format_degree(v)}" for k, v in self._items.items())
        return "{" + body + "}"

    def support(self) -> frozenset[str]:
        return frozenset(self._items)

    def issubset(self, other: FuzzySet) -> bool:
        return fuzzy_subset(self, other)

    def __le__(self, other: FuzzySet) -> bool:
        return fuzzy_subset(self, other)

    def __lt__(self, other: FuzzySet) -> bool:
        return fuzzy_subset(self, other) and self != other

    def __and__(self, other: FuzzySet) -> FuzzySet:
        """Pointwise min."""
        return FuzzySet((k, min(v, other[k])) for k, v in self._items.items() if k in other)

    def __or__(self, other: FuzzySet) -> FuzzySet:
        """Pointwise max."""
        keys = set(self._items) | set(other)
        return FuzzySet((k, max(self[k], other[k])) for k in keys)

    def only(self, keys: Iterable[str]) -> FuzzySet:
        """The part of this set on ``keys`` (E ∩ S for a crisp S)."""
        keys = set(keys)
        return FuzzySet((k, v) for k, v in self._items.items() if k in keys)

    def sort_key(self) -> tuple:
        return tuple(self._items.items())

    def to_json(self) -> dict[str, str]:
        return {k: format_degree(v) for k, v in self._items.items()}


EMPTY = FuzzySet()


def fuzzy_subset(s1: Mapping[str, Fraction], s2: Mapping[str, Fraction]) -> bool:
    """True iff s1(x) <= s2(x) everywhere (absent means 0)."""
    get = s2.get if not isinstance(s2, FuzzySet) else s2.__getitem__
    for k, v in s1.items():
        if v > (get(k) or ZERO):
            return False
    return True


@dataclass(frozen=True)
class FAF:
    """Fuzzy argumentation framework: fuzzy argument set plus fuzzy attacks.

    ``attacks`` maps ``(src, dst)`` to a degree in (0, 1]; absent pairs have
    attack degree 0.
    """

    args: FuzzySet
    attacks: Mapping[tuple[str, str], Fraction] = field(default_factory=dict)
    _attackers: dict = field(init=False, repr=False, compare=False, hash=False)
    _targets: dict = field(init=False, repr=False, compare=False, hash=False)
    _key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.args, FuzzySet):
            object.__setattr__(self, "args", FuzzySet(self.args))
        attacks = {}
        for (a, b), r in self.attacks.items():
            r = degree(r)
            if r == 0:
                raise FAFError(f"attack ({a},{b}) has degree 0")
            if a not in self.args or b not in self.args:
                raise FAFError(f"attack endpoint undeclared in ({a},{b})")
            attacks[(a, b)] = r
        attacks = dict(sorted(attacks.items()))
        attackers: dict[str, list] = {x: [] for x in self.args}
        targets: dict[str, list] = {x: [] for x in self.args}
        for (a, b), r in attacks.items():
            attackers[b].append((a, r))
            targets[a].append((b, r))
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "_attackers", {k: tuple(v) for k, v in attackers.items()})
        object.__setattr__(self, "_targets", {k: tuple(v) for k, v in targets.items()})
        object.__setattr__(self, "_key", (self.args, tuple(attacks.items())))

    def __eq__(self, other):
        if not isinstance(other, FAF):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.args)

    def rho(self, a: str, b: str) -> Fraction:
        return self.attacks.get((a, b), ZERO)

    def attackers(self, x: str) -> tuple[tuple[str, Fraction], ...]:
        """``(B, rho_Bx)`` for every B attacking x."""
        return self._attackers[x]

    def targets(self, x: str) -> tuple[tuple[str, Fraction], ...]:
        return self._targets[x]

    def degrees(self) -> set[Fraction]:
        return set(self.args.values()) | set(self.attacks.values())

    def __repr__(self):
        atts = ", ".join(f"{a}->{b}:{format_degree(r)}" for (a, b), r in self.attacks.items())
        return f"FAF(args={self.args!r}, attacks=[{atts}])"


def make_faf(args: Mapping[str, DegreeLike], attacks: Mapping[tuple[str, str], DegreeLike] = ()) -> FAF:
    """Convenience constructor accepting decimal strings."""
    args_fs = FuzzySet(args)
    if len(args_fs) != len(dict(args)):
        raise FAFError("argument degrees must be in (0, 1]")
    return FAF(args_fs, dict(attacks))


def restrict(faf: FAF, s: Mapping[str, Fraction]) -> FAF:
    """The framework restricted to the fuzzy subset ``s`` of its arguments."""
    s = s if isinstance(s, FuzzySet) else FuzzySet(s)
    for x, v in s.items():
        if x not in faf.args:
            raise FAFError(f"unknown argument {x!r}")
        if v > faf.args[x]:
            raise FAFError(f"restriction degree of {x} exceeds its argument degree")
    keep = s.support()
    return FAF(s, {k: r for k, r in faf.attacks.items() if k[0] in keep and k[1] in keep})


# -- degree lattice ----------------------------------------------------------


@dataclass(frozen=True)
class DegreeLattice:
    """Finite, complement-closed set of candidate degrees used for enumeration.

    ``breakpoint_lattice`` and ``grid_lattice`` always include 1/2; the
    crisp lattice {0, 1} is allowed for classical reductions.
    """

    values: tuple[Fraction, ...]
    name: str = "custom"

    def __post_init__(self):
        vals = tuple(sorted({degree(v) for v in self.values}))
        if ZERO not in vals or ONE not in vals:
            raise FAFError("lattice must contain 0 and 1")
        if any(ONE - v not in vals for v in vals):
            raise FAFError("lattice must be closed under complement")
        object.__setattr__(self, "values", vals)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, v):
        return v in self.values

    def below(self, cap: Fraction) -> tuple[Fraction, ...]:
        return tuple(v for v in self.values if v <= cap)

    def contains_all(self, s: Mapping[str, Fraction]) -> bool:
        return all(v in self.values for v in s.values())


def breakpoint_lattice(faf: FAF) -> DegreeLattice:
    """{0, 1/2, 1} together with every input degree and its complement."""
    vs = faf.degrees()
    return DegreeLattice(tuple({ZERO, HALF, ONE} | vs | {ONE - v for v in vs}), "breakpoints")


def grid_lattice(faf: FAF, k: int) -> DegreeLattice:
    """Breakpoints refined by the uniform grid i/k."""
    if k < 2:
        raise FAFError("grid step k must be at least 2")
    grid = {Fraction(i, k) for i in range(k + 1)}
    return DegreeLattice(breakpoint_lattice(faf).values + tuple(grid), f"grid:{k}")


CRISP_LATTICE = DegreeLattice((ZERO, ONE), "crisp")


def resolve_lattice(spec: str, faf: FAF) -> DegreeLattice:
    """``breakpoints``, ``grid:k`` or ``crisp``."""
    spec = spec.strip()
    if spec == "breakpoints":
        return breakpoint_lattice(faf)
    if spec == "crisp":
        return CRISP_LATTICE
    if spec.startswith("grid:"):
        try:
            k = int(spec[5:])
        except ValueError as exc:
            raise FAFError(f"bad lattice spec {spec!r}") from exc
        return grid_lattice(faf, k)
    raise FAFError(f"bad lattice spec {spec!r}")


# -- text formats ------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<stmt>(?P<kind>arg|att)\s*\((?P<body>[^)]*)\)\s*\.)
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _parse_fapx(text: str) -> FAF:
    args: dict[str, Fraction] = {}
    attacks: dict[tuple[str, str], Fraction] = {}
    att_pos: dict[tuple[str, str], int] = {}
    for m in _TOKEN_RE.finditer(text):
        if m.group("ws") or m.group("comment"):
            continue
        line, col = _position(text, m.start())
        if m.group("bad"):
            raise FAFParseError(f"unexpected {m.group('bad')!r}", line, col)
        parts = [p.strip() for p in m.group("body").split(",")]
        kind = m.group("kind")
        want = 2 if kind == "arg" else 3
        if len(parts) != want:
            raise FAFParseError(f"{kind} expects {want} fields, got {len(parts)}", line, col)
        for name in parts[:-1]:
            if not NAME_RE.match(name):
                raise FAFParseError(f"bad argument name {name!r}", line, col)
        try:
            d = parse_decimal_degree(parts[-1])
        except FAFError as exc:
            raise FAFParseError(str(exc), line, col) from None
        if not ZERO < d <= ONE:
            raise FAFParseError(f"degree {parts[-1]} outside (0,1]", line, col)
        if kind == "arg":
            if parts[0] in args:
                raise FAFParseError(f"duplicate argument {parts[0]!r}", line, col)
            args[parts[0]] = d
        else:
            key = (parts[0], parts[1])
            if key in attacks:
                raise FAFParseError(f"duplicate attack {key}", line, col)
            attacks[key] = d
            att_pos[key] = m.start()
    for key, off in att_pos.items():
        for end in key:
            if end not in args:
                raise FAFParseError(f"attack endpoint {end!r} undeclared", *_position(text, off))
    return FAF(FuzzySet(args), attacks)


def _parse_structured(text: str) -> FAF:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FAFParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise FAFParseError("top level must be an object")
    args: dict[str, Fraction] = {}
    attacks: dict[tuple[str, str], Fraction] = {}
    try:
        for a in obj.get("arguments", []):
            name, d = a["id"], parse_decimal_degree(str(a["degree"]))
            if not NAME_RE.match(name):
                raise FAFParseError(f"bad argument name {name!r}")
            if name in args:
                raise FAFParseError(f"duplicate argument {name!r}")
            if d == 0 or d > 1:
                raise FAFParseError(f"degree {a['degree']} outside (0,1]")
            args[name] = d
        for a in obj.get("attacks", []):
            key, d = (a["from"], a["to"]), parse_decimal_degree(str(a["degree"]))
            if key in attacks:
                raise FAFParseError(f"duplicate attack {key}")
            if d == 0 or d > 1:
                raise FAFParseError(f"degree {a['degree']} outside (0,1]")
            for end in key:
                if end not in args:
                    raise FAFParseError(f"attack endpoint {end!r} undeclared")
            attacks[key] = d
    except (KeyError, TypeError) as exc:
        raise FAFParseError(f"malformed entry: {exc}") from None
    except FAFParseError:
        raise
    except FAFError as exc:
        raise FAFParseError(str(exc)) from None
    return FAF(FuzzySet(args), attacks)


def parse_faf(text: str, format: str = "fapx") -> FAF:
    """Parse a framework from ``fapx`` text or the ``structured`` JSON object."""
    if format == "fapx":
        return _parse_fapx(text)
    if format == "structured":
        return _parse_structured(text)
    raise ValueError(f"unknown format {format!r}")


def faf_to_json(faf: FAF) -> dict:
    return {
        "arguments": [{"id": x, "degree": format_degree(d)} for x, d in faf.args.items()],
        "attacks": [
            {"from": a, "to": b, "degree": format_degree(r)} for (a, b), r in faf.attacks.items()
        ],
    }


def serialize_faf(faf: FAF, format: str = "fapx") -> str:
    if format == "structured":
        return json.dumps(faf_to_json(faf), indent=2) + "\n"
    if format != "fapx":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"arg({x},{format_degree(d)})." for x, d in faf.args.items()]
    lines += [f"att({a},{b},{format_degree(r)})." for (a, b), r in faf.attacks.items()]
    return "\n".join(lines) + "\n"


def parse_fuzzy_set(text: str) -> FuzzySet:
    """A fuzzy set given as a JSON object ``{"A": "0.8"}`` or as ``arg(A,0.8).`` lines."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FAFParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(obj, dict):
            raise FAFParseError("fuzzy set must be an object")
        try:
            return FuzzySet({k: degree(str(v)) for k, v in obj.items()})
        except FAFError as exc:
            raise FAFParseError(str(exc)) from None
    if not stripped:
        return EMPTY
    return _parse_fapx(text).args
