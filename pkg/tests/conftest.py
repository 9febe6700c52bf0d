import pytest

from epos import _pykernels

try:
    from epos import _ckernels
except ImportError:
    _ckernels = None

KERNELS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])

_criteria: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", help="run the n = 9 extended sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(params=KERNELS, ids=lambda m: m.IMPLEMENTATION, scope="module")
def kernel(request):
    return request.param


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion (printed in the summary)."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  [{detail}]"
        print(line)
        _criteria.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)
