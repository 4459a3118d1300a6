"""Independent oracles shared by the test modules.

Nothing here calls into the code under test beyond constructing inputs.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("repro", derandomize=True, print_blob=True)
settings.load_profile("repro")

ACCEPTANCE_LINES = []


def brute_roots(coeffs, p):
    """Roots in Z/p by plain evaluation of every residue."""
    out = set()
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            out.add(x)
    return out


def brute_has_root_mod(coeffs, q):
    """Exhaustive search over Z/q, power basis (not Horner)."""
    xs = np.arange(q, dtype=np.int64)
    total = np.zeros(q, dtype=np.int64)
    power = np.ones(q, dtype=np.int64)
    for c in coeffs:
        total = (total + (c % q) * power) % q
        power = (power * xs) % q
    return bool((total == 0).any())


def sylvester_det(f, g):
    """det of the Sylvester matrix, by Fraction Gaussian elimination."""
    a = list(reversed(f))
    b = list(reversed(g))
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    if size == 0:
        return 1
    rows = [[0] * i + a + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + b + [0] * (m - 1 - i) for i in range(m)]
    M = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if M[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, size):
            if M[r][c]:
                k = M[r][c] / M[c][c]
                M[r] = [x - k * y for x, y in zip(M[r], M[c])]
    assert det.denominator == 1
    return int(det)


def subgroup_closure(gens, p):
    """The subgroup of F_p^x generated by residues, by repeated multiplication."""
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g % p
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def small_primes(bound):
    return [p for p in range(2, bound + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


@pytest.fixture
def record_criterion():
    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
