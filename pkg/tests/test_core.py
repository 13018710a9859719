from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzyscc import (
    FAF,
    FAFError,
    FAFParseError,
    FuzzySet,
    breakpoint_lattice,
    complement,
    degree,
    format_degree,
    fuzzy_subset,
    grid_lattice,
    make_faf,
    parse_faf,
    restrict,
    serialize_faf,
    tnorm,
)
from fuzzyscc.core import CRISP_LATTICE, DegreeLattice, parse_fuzzy_set, resolve_lattice

from conftest import PURE, degrees, fafs, fs

F = Fraction


def test_parse_single_line_example():
    faf = parse_faf("arg(A,0.8). att(A,B,0.8). arg(B,0.7).")
    assert faf.args == fs(A="0.8", B="0.7")
    assert faf.attacks == {("A", "B"): F("0.8")}


def test_parse_minimal():
    faf = parse_faf("arg(A,1).")
    assert faf.args == fs(A=1)
    assert faf.attacks == {}


def test_parse_undeclared_endpoint():
    with pytest.raises(FAFParseError, match="undeclared"):
        parse_faf("att(A,B,0.5).")


@pytest.mark.parametrize("text, needle", [
    ("arg(A,0.8).\narg(A,0.5).", "duplicate"),
    ("arg(A,0).", "outside"),
    ("arg(A,1.5).", "outside"),
    ("arg(A,0.12345).", "4 fractional"),
    ("arg(A,0.5)\n", "unexpected"),
    ("arg(A-1,0.5).", "bad argument name"),
    ("arg(A,0.5).\natt(A,A,0.5).\natt(A,A,0.6).", "duplicate attack"),
])
def test_parse_errors(text, needle):
    with pytest.raises(FAFParseError, match=needle):
        parse_faf(text)


def test_parse_error_reports_position():
    with pytest.raises(FAFParseError) as info:
        parse_faf("arg(A,0.5).\n  arg(B,2).")
    assert (info.value.line, info.value.column) == (2, 3)


def test_comments_and_whitespace(ex1):
    text = "# header\n arg( A , 0.8 ) . # trailing\n\n"
    assert parse_faf(text).args == fs(A="0.8")
    assert len(ex1.args) == 6 and len(ex1.attacks) == 7


def test_structured_roundtrip(ex2):
    text = serialize_faf(ex2, "structured")
    assert parse_faf(text, "structured") == ex2


def test_structured_errors():
    with pytest.raises(FAFParseError):
        parse_faf('{"arguments": [{"id": "A", "degree": "0.5"}], '
                  '"attacks": [{"from": "A", "to": "B", "degree": "0.5"}]}', "structured")
    with pytest.raises(FAFParseError):
        parse_faf("{not json", "structured")


def test_faf_invariants():
    with pytest.raises(FAFError):
        FAF(fs(A="0.5"), {("A", "B"): F("0.5")})
    with pytest.raises(FAFError):
        make_faf({"A": "0.5"}, {("A", "A"): "0"})
    selfish = make_faf({"A": "0.5"}, {("A", "A"): "0.5"})
    assert selfish.rho("A", "A") == F("0.5")
    assert selfish.rho("A", "Z") == 0


def test_degree_exactness():
    assert degree("0.1") + degree("0.2") == degree("0.3")
    assert degree("0.4") + degree("0.6") == 1
    with pytest.raises(TypeError):
        degree(0.5)
    with pytest.raises(FAFError):
        degree("1.01")


@pytest.mark.parametrize("d, text", [
    (F(1, 5), "0.2"), (F(1), "1"), (F(0), "0"), (F(1, 2), "0.5"),
    (F(1, 3), "1/3"), (F(1234, 10000), "0.1234"), (F(1, 8), "0.125"),
])
def test_format_degree(d, text):
    assert format_degree(d) == text


@given(st.integers(0, 10000))
def test_format_parse_roundtrip(n):
    d = F(n, 10000)
    assert degree(format_degree(d)) == d


def test_tnorm_examples():
    assert tnorm(F("0.8"), F("0.8")) == F("0.8")
    assert tnorm(F("0.3"), F("0.7")) == F("0.3")
    assert tnorm(F("0.42"), F(1)) == F("0.42")


def test_complement_examples():
    assert complement(F("0.8")) == F("0.2")
    assert complement(F("0.5")) == F("0.5")
    assert complement(F(0)) == 1


@PURE
@given(degrees)
def test_complement_involution(x):
    assert complement(complement(x)) == x


@PURE
@given(degrees, degrees, degrees)
def test_tnorm_laws(x, y, z):
    assert tnorm(x, tnorm(y, z)) == tnorm(tnorm(x, y), z)
    assert tnorm(x, y) == tnorm(y, x)
    assert tnorm(x, x) == x
    assert tnorm(x, F(1)) == x
    assert tnorm(x, F(0)) == 0


def test_fuzzy_subset_examples():
    assert fuzzy_subset(FuzzySet(), fs(A="0.3"))
    assert fuzzy_subset(fs(A="0.2"), fs(A="0.8", B="0.1"))
    assert not fuzzy_subset(fs(A="0.9"), fs(A="0.8"))


def test_fuzzy_set_canonical():
    assert FuzzySet({"A": 0, "B": "0.5"}) == fs(B="0.5")
    assert hash(FuzzySet({"A": 0, "B": "0.5"})) == hash(fs(B="0.5"))
    assert fs(A="0.3")["Z"] == 0
    assert "Z" not in fs(A="0.3")
    assert fs(A="0.3", B="0.9") & fs(A="0.5", B="0.2") == fs(A="0.3", B="0.2")
    assert fs(A="0.3") | fs(B="0.2") == fs(A="0.3", B="0.2")


def test_restrict_examples(ex1):
    assert restrict(ex1, ex1.args) == ex1
    sub = restrict(ex1, fs(D="0.4", E="0.6", F="0.7"))
    assert sub.args == fs(D="0.4", E="0.6", F="0.7")
    assert sub.attacks == {("D", "E"): F("0.7"), ("E", "F"): F("0.8"), ("F", "D"): F("0.9")}
    empty = restrict(ex1, FuzzySet())
    assert len(empty.args) == 0 and not empty.attacks


def test_restrict_rejects_non_subset(ex1):
    with pytest.raises(FAFError):
        restrict(ex1, fs(A="0.9"))
    with pytest.raises(FAFError):
        restrict(ex1, fs(Z="0.1"))


def test_breakpoint_lattice_example1(ex1):
    # degrees {0.6, 0.7, 0.8, 0.9} plus complements {0.4, 0.3, 0.2, 0.1}, plus 0, 1/2, 1
    expected = {F(i, 10) for i in range(11)}
    assert set(breakpoint_lattice(ex1).values) == expected


def test_breakpoint_lattice_trivial():
    crisp = make_faf({"A": 1, "B": 1}, {("A", "B"): 1})
    assert breakpoint_lattice(crisp).values == (0, F(1, 2), 1)
    half = make_faf({"A": "0.5"}, {("A", "A"): "0.5"})
    assert breakpoint_lattice(half).values == (0, F(1, 2), 1)


def test_lattice_validation():
    with pytest.raises(FAFError):
        DegreeLattice((F(0), F("0.3"), F(1)))
    assert CRISP_LATTICE.values == (0, 1)
    faf = make_faf({"A": "0.7"})
    assert set(grid_lattice(faf, 4).values) >= {F(1, 4), F(3, 4), F("0.3")}
    with pytest.raises(FAFError):
        resolve_lattice("grid:1", faf)
    with pytest.raises(FAFError):
        resolve_lattice("nonsense", faf)


@given(fafs())
def test_restrict_full_is_identity(faf):
    assert restrict(faf, faf.args) == faf


@given(fafs(degree=st.integers(1, 10000).map(lambda n: F(n, 10000))))
def test_breakpoint_lattice_closure(faf):
    lat = breakpoint_lattice(faf)
    vals = set(lat.values)
    assert {F(0), F(1, 2), F(1)} <= vals
    assert all(1 - v in vals for v in vals)
    assert faf.degrees() <= vals
    assert list(lat.values) == sorted(vals)


@given(fafs(degree=st.integers(1, 10000).map(lambda n: F(n, 10000))))
def test_parse_serialize_roundtrip(faf):
    for fmt in ("fapx", "structured"):
        text = serialize_faf(faf, fmt)
        again = parse_faf(text, fmt)
        assert again == faf
        assert serialize_faf(again, fmt) == text


def test_parse_fuzzy_set_formats():
    assert parse_fuzzy_set('{"A": "0.8", "B": "1/3"}') == FuzzySet({"A": F("0.8"), "B": F(1, 3)})
    assert parse_fuzzy_set("arg(A,0.8).") == fs(A="0.8")
    assert parse_fuzzy_set("") == FuzzySet()
