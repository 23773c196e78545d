import pytest

from a2cells.kernel import available_backends

A_SWEEP = [f"A:{n}" for n in range(3, 9)]
B_SWEEP = [f"B:{n}" for n in range(3, 9)]
C_SWEEP = [f"Ctilde:{m}" for m in range(4, 9)]
E_SWEEP = [f"E:{q},{r}" for q in range(1, 6) for r in range(q, 6) if q + r <= 6]
F_SWEEP = [f"F:{n}" for n in range(4, 9)]
H_SWEEP = [f"H:{n}" for n in range(3, 9)]
SWEEP = A_SWEEP + B_SWEEP + C_SWEEP + E_SWEEP + F_SWEEP + H_SWEEP


def pytest_addoption(parser):
    parser.addoption("--slow-ok", action="store_true", default=False, help="run the slow oracle comparisons (B4)")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running oracle comparisons (run with --slow-ok)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow-ok"):
        return
    skip = pytest.mark.skip(reason="needs --slow-ok")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


@pytest.fixture
def slow_ok(request):
    return request.config.getoption("--slow-ok")
