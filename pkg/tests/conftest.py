import pytest


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="also run the rank-4 checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: rank-4 checks, opt-in with --extended")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="rank-4 checks need --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


_LINES = pytest.StashKey()


@pytest.fixture
def verdict(request):
    """Record a PASS/FAIL line for the acceptance summary and echo it."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(label, ok, detail=""):
        line = "%s %s%s" % ("PASS" if ok else "FAIL", label, ": " + detail if detail else "")
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
