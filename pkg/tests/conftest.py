import pytest

_LINES_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    lines = request.config.stash.setdefault(_LINES_KEY, [])

    def log(line):
        print(line)
        lines.append(line)

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
