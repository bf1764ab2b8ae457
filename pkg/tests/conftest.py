import math

import numpy as np
import pytest

from hardy_noise import SchmidtSpec

_acceptance_results = []


def random_density(rng, dim, rank=None):
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def two_qubit_weight_grid(n=60, margin=1e-3):
    """p1 values in (0, 1) away from the degenerate point 1/sqrt(2)."""
    grid = np.linspace(0.02, 0.98, n)
    return [float(p) for p in grid if abs(p - math.sqrt(0.5)) > margin]


def random_spec(rng, dims=None):
    d1, d2 = dims or (int(rng.integers(2, 5)), int(rng.integers(2, 5)))
    r = int(rng.integers(2, min(d1, d2) + 1))
    while True:
        w = rng.uniform(0.05, 1.0, size=r)
        w /= np.linalg.norm(w)
        if abs(w[0] - w[1]) > 1e-3:
            return SchmidtSpec(d1, d2, tuple(w))


@pytest.fixture
def rng():
    return np.random.default_rng(20061016)


@pytest.fixture
def hardy_max():
    return SchmidtSpec.hardy_max()


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in getattr(report, "acceptance_marks", ()):
        _acceptance_results.append((mark, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.acceptance_marks = [tuple(m.args) for m in item.iter_markers("acceptance")]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_acceptance_results):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")
