import importlib

import pytest

from supercatalan import _kernels_py

ACCEPTANCE_LINES = {}


def _backends():
    params = [pytest.param(_kernels_py, id="python")]
    try:
        compiled = importlib.import_module("supercatalan._kernels")
    except ImportError:
        params.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    else:
        params.append(pytest.param(compiled, id="cython"))
    return params


@pytest.fixture(params=_backends())
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
