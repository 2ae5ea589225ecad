from functools import lru_cache

import pytest


@lru_cache(maxsize=None)
def naive_partitions(n, max_part=None):
    """All partitions of n as nonincreasing tuples, independent of the package."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in naive_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@pytest.fixture(scope="session")
def partitions_upto():
    def upto(n):
        return [p for k in range(n + 1) for p in naive_partitions(k)]

    return upto


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose call outcomes to fixtures (used by the acceptance report lines)
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
