"""Shared fixtures: enumeration sweeps reused across test modules.

The expensive sweeps (connected catalogs with all signature
representatives) are session-scoped so the acceptance tests and the
property suites share one computation.
"""

from __future__ import annotations

import pytest

from snlab import enumerate_connected, enumerate_signatures


def connected_graphs_upto(n_max, **filters):
    for n in range(1, n_max + 1):
        yield from enumerate_connected(n, cap=max(n_max, 8), **filters)


def signed_sweep(n_max, **filters):
    for g in connected_graphs_upto(n_max, **filters):
        for sg in enumerate_signatures(g):
            yield sg


@pytest.fixture(scope="session")
def graphs_upto_6():
    return list(connected_graphs_upto(6))


@pytest.fixture(scope="session")
def graphs_upto_7():
    return list(connected_graphs_upto(7))


@pytest.fixture(scope="session")
def signed_upto_5():
    return list(signed_sweep(5))


@pytest.fixture(scope="session")
def signed_upto_6():
    return list(signed_sweep(6))


@pytest.fixture(scope="session")
def unicyclic_graphs_upto_9():
    """All connected unicyclic graphs with n <= 9."""
    out = []
    for n in range(3, 10):
        out.extend(enumerate_connected(n, unicyclic_only=True, cap=9))
    return out


@pytest.fixture(scope="session")
def unicyclic_signed_upto_9(unicyclic_graphs_upto_9):
    """All (graph, signature) pairs on connected unicyclic graphs n <= 9."""
    out = []
    for g in unicyclic_graphs_upto_9:
        out.extend(enumerate_signatures(g))
    return out
