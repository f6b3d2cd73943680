from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# filled by test_acceptance.criterion
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, float]] = {}


def valid_pairs(ns, cs=(1, 2, 3, 4)):
    """(n, a) with a = c 2^(n-2) - 1 odd, i.e. c 2^(n-1) = 2a + 2."""
    out = []
    for n in ns:
        for c in cs:
            a = c * 2 ** (n - 2) - 1
            if a >= 1 and a % 2:
                out.append((n, a))
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        title, ok, secs = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s) {title}")


@pytest.fixture
def pairs_small():
    return valid_pairs(range(3, 6))
