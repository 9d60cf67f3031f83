import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from signed_ess.bruhat import catalog_W  # noqa: E402
from signed_ess.perm_core import SignedPermutation, WindowPermutation  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def W3():
    return catalog_W(3).elements


@pytest.fixture(scope="session")
def W4():
    return catalog_W(4).elements


def signed_perms(min_n=1, max_n=6):
    """Hypothesis strategy for signed permutations with ``min_n <= n <= max_n``."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(st.permutations(range(1, n + 1)),
                            st.lists(st.booleans(), min_size=n, max_size=n))
    ).map(lambda ps: SignedPermutation(tuple(-x if neg else x for x, neg in zip(*ps))))


def window_perms(min_len=1, max_len=8, lo=st.integers(-4, 2)):
    return st.tuples(lo, st.integers(min_len, max_len)).flatmap(
        lambda t: st.permutations(range(t[0], t[0] + t[1])).map(
            lambda vals, lo_=t[0]: WindowPermutation(lo_, tuple(vals))))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
