import sys

import numpy as np
import pytest


@pytest.fixture
def rng():
    # one fixed stream per test keeps failures reproducible
    return np.random.default_rng(20260815)


@pytest.fixture
def rng_alt():
    return np.random.default_rng(987654321)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    results = getattr(mod, "RESULTS", None) if mod is not None else None
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(results):
        name, ok, detail = results[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {num:>2}  {name}: {detail}")
