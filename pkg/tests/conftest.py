import random
import sys

import pytest

from argshift.catalog import load_catalog, parse_entry
from argshift.poly import parse_polynomial

CATALOG = {e.name: e for e in load_catalog()}

# extra algebras exercised by property tests (not part of the bundled catalog)
EXTRA = {
    "so3": {"name": "so3", "dim": 3,
            "brackets": {"1,2": {"3": "1"}, "2,3": {"1": "1"}, "1,3": {"2": "-1"}},
            "casimirs": ["x1^2 + x2^2 + x3^2"]},
    "e2": {"name": "e2", "dim": 3,
           "brackets": {"1,2": {"3": "1"}, "1,3": {"2": "-1"}},
           "casimirs": ["x2^2 + x3^2"]},
    "gl2": {"name": "gl2", "dim": 4,
            "brackets": {"1,2": {"2": "2"}, "1,3": {"3": "-2"}, "2,3": {"1": "1"}},
            "casimirs": ["x4", "x1^2 + 4*x2*x3"]},
    # complex aff(1) as a real 4-dimensional algebra; p_g = x3^2 + x4^2
    "aff1C": {"name": "aff1C", "dim": 4,
              "brackets": {"1,3": {"3": "1"}, "1,4": {"4": "1"}, "2,3": {"4": "1"}, "2,4": {"3": "-1"}},
              "casimirs": []},
    # 4-dim nilpotent filiform algebra
    "n4": {"name": "n4", "dim": 4,
           "brackets": {"1,2": {"3": "1"}, "1,3": {"4": "1"}},
           "casimirs": ["x4", "x3^2 - 2*x2*x4"]},
}
EXTRA_ENTRIES = {k: parse_entry(v) for k, v in EXTRA.items()}


@pytest.fixture(params=sorted(CATALOG))
def entry(request):
    return CATALOG[request.param]


@pytest.fixture(params=sorted(CATALOG) + sorted(EXTRA_ENTRIES))
def any_entry(request):
    return CATALOG.get(request.param) or EXTRA_ENTRIES[request.param]


def alg(name):
    return (CATALOG.get(name) or EXTRA_ENTRIES[name]).algebra


def P(text, n):
    return parse_polynomial(text, n)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: int(k.split()[0])):
        ok, detail = results[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    done = {int(k.split()[0]) for k in results}
    for n in sorted(set(range(1, 11)) - done):
        terminalreporter.write_line(f"FAIL  {n}: did not complete (see errors above)")
