import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from grkit import kernels  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
STORE = ROOT / "witnesses"

# criterion lines collected by test_acceptance and printed in the summary
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def store_dir():
    return STORE


@pytest.fixture(scope="session")
def corpus():
    from oracles import gallai_corpus
    return gallai_corpus(seed=0, size=1000, nmax=60)


@pytest.fixture(params=kernels.backends(), ids=lambda m: m.BACKEND)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
