import pytest
from hypothesis import settings

# jit compilation on first call would trip per-example deadlines
settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """Print and remember one PASS/FAIL line per acceptance criterion."""

    def record(n: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
        print(line)
        request.config.stash[ACCEPTANCE].append((n, line))

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = sorted(config.stash[ACCEPTANCE])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in lines:
            terminalreporter.write_line(line)
