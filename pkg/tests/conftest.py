import pytest

from ramseycert import _kernel, _pykernel

try:
    from ramseycert import _ckernel
except ImportError:  # extension not built
    _ckernel = None

KERNELS = [_pykernel] + ([_ckernel] if _ckernel is not None else [])


@pytest.fixture(params=KERNELS, ids=lambda k: k.BACKEND)
def kernel(request):
    return request.param


@pytest.fixture
def default_kernel():
    return _kernel.kernel


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
