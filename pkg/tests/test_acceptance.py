"""One test per acceptance criterion; each prints a single pass/fail line."""

import pytest

from jtrace.acceptance import CRITERIA

import conftest


@pytest.mark.slow
@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion{c.number:02d}_{c.module}")
def test_criterion(criterion):
    try:
        passed, detail = criterion.run()
    except Exception as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"criterion {criterion.number:>2} [{criterion.module}] {'PASS' if passed else 'FAIL'}  {criterion.title}: {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line
