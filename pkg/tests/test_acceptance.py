"""Run every acceptance criterion, one pass/fail line each.

The criteria live in transperm.selftest so that `transperm selftest` and this
module exercise exactly the same checks.
"""

import pytest

from transperm import selftest

_IDS = [f"{n}-{name.replace(' ', '-')}" for n, name, _ in selftest.CRITERIA]


@pytest.mark.parametrize("number,name,fn", selftest.CRITERIA, ids=_IDS)
def test_criterion(number, name, fn):
    try:
        detail = fn()
    except AssertionError as exc:
        print(f"FAIL criterion {number}: {name} -- {exc}")
        raise
    print(f"PASS criterion {number}: {name} -- {detail}")
