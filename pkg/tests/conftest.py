import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from youngbraid import BraidWord, FreeWord  # noqa: E402

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")


def letters(rank, max_size=12):
    return st.lists(
        st.integers(1, rank).flatmap(lambda k: st.sampled_from((k, -k))), max_size=max_size
    )


def free_words(rank=3, max_size=12):
    return letters(rank, max_size).map(lambda ls: FreeWord(ls, rank))


def braid_words(n, max_size=12):
    return st.lists(
        st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k))), max_size=max_size
    ).map(lambda ls: BraidWord(ls, n))


@pytest.fixture(params=["python", "cython"])
def kernel(request):
    if request.param == "python":
        from youngbraid import _pykernel

        return _pykernel
    ck = pytest.importorskip("youngbraid._ckernel")
    return ck


ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
