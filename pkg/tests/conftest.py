import itertools

import pytest

from rmdesigns.gf2code import BinaryCode


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run 2^26-word enumerations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def naive_codewords(code: BinaryCode):
    """Every GF(2) combination of the generators, as 0/1 lists (no Gray code, no numpy)."""
    for coeffs in itertools.product((0, 1), repeat=code.k):
        v = 0
        for c, g in zip(coeffs, code.generators):
            if c:
                v ^= g
        yield [(v >> j) & 1 for j in range(code.n)]


def naive_jacobi_terms(code: BinaryCode, T):
    T = set(T)
    terms = {}
    for bits in naive_codewords(code):
        m1 = sum(bits[j] for j in T)
        m0 = len(T) - m1
        n1 = sum(bits[j] for j in range(code.n) if j not in T)
        n0 = code.n - len(T) - n1
        terms[(m0, m1, n0, n1)] = terms.get((m0, m1, n0, n1), 0) + 1
    return terms


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
