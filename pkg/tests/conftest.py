from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fuzzyscc import FAF, FuzzySet, parse_faf

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# >= 1000 cases for pure-function properties
PURE = settings(max_examples=1000, deadline=None)


def load_example(name: str) -> FAF:
    text = resources.files("fuzzyscc").joinpath("data", name).read_text()
    return parse_faf(text)


@pytest.fixture(scope="session")
def ex1() -> FAF:
    return load_example("example1.fapx")


@pytest.fixture(scope="session")
def ex2() -> FAF:
    return load_example("example2.fapx")


def fs(**kw) -> FuzzySet:
    return FuzzySet({k: Fraction(v) for k, v in kw.items()})


E1_COMPLETE = dict(A="0.8", B="0.2", C="0.6", D="0.4", E="0.6", F="0.4")
E2_PRIME = dict(A="0.2", B="0.8", C="0.2", D="0.8", E="0.2", F="0.8", G="0.8", H="0.2", I="0.2")
E2_DOUBLE = dict(A="0.8", B="0.2", C="0.5", D="0.5", E="0.5", F="0.5", G="0.5", H="0.5", I="0.5")

# -- strategies ----------------------------------------------------------------

degrees = st.integers(0, 10000).map(lambda n: Fraction(n, 10000))
tenths = st.integers(1, 9).map(lambda n: Fraction(n, 10))
pos_degrees = st.integers(1, 10000).map(lambda n: Fraction(n, 10000))


@st.composite
def fafs(draw, max_args=5, max_attacks=8, degree=tenths):
    n = draw(st.integers(1, max_args))
    names = [chr(ord("A") + i) for i in range(n)]
    pairs = [(a, b) for a in names for b in names]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_attacks, unique=True))
    args = {x: draw(degree) for x in names}
    return FAF(FuzzySet(args), {p: draw(degree) for p in chosen})


@st.composite
def faf_and_subset(draw, **kw):
    """A framework plus a fuzzy subset of its arguments with tenth degrees."""
    faf = draw(fafs(**kw))
    sub = {}
    for x, top in faf.args.items():
        k = draw(st.integers(0, int(top * 10)))
        sub[x] = Fraction(k, 10)
    return faf, FuzzySet(sub)


# -- bookkeeping for the acceptance report ---------------------------------------

SUITE_RESULTS: dict[str, str] = {}
SUITE_IDS: set[str] = set()
NOT_MODULE_SUITES = ("test_acceptance.py", "test_cli.py")


def pytest_collection_modifyitems(session, config, items):
    # acceptance checks run last so the property-suite outcome is known
    items.sort(key=lambda it: it.module.__name__ == "test_acceptance")
    SUITE_IDS.update(it.nodeid for it in items if it.path.name not in NOT_MODULE_SUITES)


def pytest_runtest_logreport(report):
    if report.nodeid in SUITE_IDS and (report.when == "call" or report.failed):
        if SUITE_RESULTS.get(report.nodeid) != "failed":
            SUITE_RESULTS[report.nodeid] = report.outcome
