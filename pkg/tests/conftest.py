from __future__ import annotations

from collections import Counter
from itertools import combinations, product

import pytest

# Sweep box used throughout: every (g0, k) with g0 <= 4, k <= 6.
SWEEP = [(g0, k) for g0 in range(5) for k in range(7)]


def hand_tally(g0: int, k: int) -> Counter:
    """Tiny independent enumeration of the Kunneth basis of H*(J_0 x R^k).

    Written separately from the package census (subsets via itertools,
    not bit masks) so the two can check each other.
    """
    gens = range(g0)
    subsets = [s for n in range(g0 + 1) for s in combinations(gens, n)]
    r_classes = {"H0": (0, 0, 0), "H1": (1, 0, 0), "H2": (2, 2, 1)}
    out: Counter = Counter()
    for holo in subsets:
        for anti in subsets:
            for rs in product(r_classes.values(), repeat=k):
                t = len(holo) + len(anti)
                deg = t + sum(c[0] for c in rs)
                wt = t + sum(c[1] for c in rs)
                h = sum(c[2] for c in rs)
                out[(deg, wt, len(holo) + h, len(anti) + h)] += 1
    return out


def hand_betti(g0: int, k: int) -> tuple[int, ...]:
    tally = hand_tally(g0, k)
    top = max(key[0] for key in tally)
    return tuple(
        sum(v for key, v in tally.items() if key[0] == i) for i in range(top + 1)
    )


# -- one-line-per-criterion summary for tests/test_acceptance.py --------------

_ACCEPTANCE: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append(("PASS" if report.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] criterion {doc}")
