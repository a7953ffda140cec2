import itertools

import pytest

from gaussphi._backend import available_backends
from gaussphi.core import GaussianInt, mul_one_plus_i


@pytest.fixture(params=list(available_backends()))
def kernels(request):
    """Each available kernel module (compiled first, then pure Python)."""
    return available_backends()[request.param]


def digit_sum_ball(n):
    """B_n by listing every digit vector (v_0..v_n); independent of the BFS oracle."""
    digits = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]
    powers = [GaussianInt(1, 0)]
    for _ in range(n):
        powers.append(mul_one_plus_i(powers[-1]))
    out = set()
    for combo in itertools.product(digits, repeat=n + 1):
        re = sum(d[0] * p.re - d[1] * p.im for d, p in zip(combo, powers))
        im = sum(d[0] * p.im + d[1] * p.re for d, p in zip(combo, powers))
        out.add((re, im))
    return out


@pytest.fixture(scope="session")
def digit_sum_levels():
    """Least level of each point, by full digit-vector enumeration up to n = 6."""
    levels = {}
    for n in range(7):
        for pt in digit_sum_ball(n):
            levels.setdefault(pt, n)
    return levels


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS

    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[num])
