import pytest

from hypercube_ids import _backend


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run tests marked slow",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(params=sorted(_backend.available()))
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    kernels = _backend.select(request.param)
    monkeypatch.setattr(_backend, "kernels", kernels)
    return kernels


def pytest_configure(config):
    config._acceptance = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(results):
        terminalreporter.write_line(line[1])
