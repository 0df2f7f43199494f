from fractions import Fraction

import pytest

from genconorm.instance import load_fixture


def Q(text) -> Fraction:
    return Fraction(text)


@pytest.fixture
def fixture_op():
    return lambda name: load_fixture(name).op()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, title, detail = RESULTS[key]
        line = f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
