import pytest

from specmine.traces import TraceSet

TRACE1 = ("regLogin", "order", "inv", "pay", "ship")
TRACE2 = ("premLogin", "order", "ship", "inv", "pay")
TRACE3 = ("premLogin", "cat", "cat", "order", "ship", "inv", "pay")


@pytest.fixture
def two_traces():
    return TraceSet.of(TRACE1, TRACE2)


@pytest.fixture
def three_traces():
    return TraceSet.of(TRACE1, TRACE2, TRACE3)


def T(text):
    """Trace from a space separated string."""
    return tuple(text.split())


def corpus(*lines):
    return TraceSet.of(*(T(x) for x in lines))


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
