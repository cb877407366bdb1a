from pathlib import Path

import pytest
from hypothesis import strategies as st

from hyperoct.sigperm import SignedPermutation

DATA = Path(__file__).parent / "data"

# filled by test_acceptance; printed after the run
ACCEPTANCE_RESULTS = []


def load_numeral_table():
    rows = []
    for line in (DATA / "numeral_table.txt").read_text().splitlines():
        dec, hyper = line.split()
        rows.append((int(dec), hyper))
    return rows


def load_b3_table():
    rows = []
    for line in (DATA / "b3_table.txt").read_text().splitlines():
        rank, window, code = line.split("  ")
        rows.append((int(rank), tuple(int(v) for v in window.split()), tuple(int(c) for c in code.split(":"))))
    return rows


@pytest.fixture(scope="session")
def numeral_table():
    return load_numeral_table()


@pytest.fixture(scope="session")
def b3_table():
    return load_b3_table()


@st.composite
def signed_perms(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({elapsed:.3f} s)")
