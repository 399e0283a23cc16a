from itertools import combinations_with_replacement

import pytest

from orbilens import LensTuple
from orbilens.residues import is_prime

COMPOSITE_UP_TO_40 = [q for q in range(8, 41) if not is_prime(q)]


def L(q, *entries):
    return LensTuple.from_values(q, entries)


def brute_force_dims(q, entries, max_degree, W=0):
    """dim P^d_G for d <= max_degree by listing every monomial."""
    weights = [w for p in entries for w in (p, -p)] + [0] * W
    dims = []
    for d in range(max_degree + 1):
        count = 0
        for combo in combinations_with_replacement(range(len(weights)), d):
            if sum(weights[i] for i in combo) % q == 0:
                count += 1
        dims.append(count)
    return dims


@pytest.fixture
def lens():
    return L


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
