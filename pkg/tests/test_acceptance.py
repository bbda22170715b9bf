"""One test per acceptance criterion; the pass/fail lines are echoed in the run summary."""
import pytest

from finsurg import acceptance

import conftest


@pytest.mark.parametrize("check", acceptance.ALL_CHECKS, ids=lambda c: c.__name__)
def test_criterion(check):
    (res,) = acceptance.run_checks([check])
    line = res.line()
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert res.passed, line
