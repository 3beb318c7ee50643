import pytest

from synchrokit import _kernels

BACKENDS = _kernels.available_backends()
KERNEL_NAMES = ["closure", "regular_flags", "collapsible", "shortest_reset", "min_image_size", "conjugacy_reps"]


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return BACKENDS[request.param]


@pytest.fixture(params=sorted(BACKENDS))
def use_backend(request, monkeypatch):
    """Route the whole library through one kernel backend."""
    impl = BACKENDS[request.param]
    for name in KERNEL_NAMES:
        monkeypatch.setattr(_kernels, name, getattr(impl, name))
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
