import contextlib

import pytest

from helpers import random_sample

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def random_graphs():
    return random_sample()


@pytest.fixture
def criterion(request):
    """Context manager recording one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash[_LINES]

    @contextlib.contextmanager
    def record(label):
        try:
            yield
        except BaseException as exc:
            lines.append(f"FAIL  {label}: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}")
            print(lines[-1])
            raise
        lines.append(f"PASS  {label}")
        print(lines[-1])

    return record
