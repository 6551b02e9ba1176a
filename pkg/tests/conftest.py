import pytest

from cayleysrg import (
    build_graph,
    claimed_aut_group,
    claimed_origin_stabilizer,
    enumerate_automorphisms,
)


def _memo(fn):
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = fn(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def graph():
    """Session-cached graph factory; graphs are immutable, sharing is safe."""
    return _memo(build_graph)


@pytest.fixture(scope="session")
def claimed_group():
    return _memo(claimed_aut_group)


@pytest.fixture(scope="session")
def origin_stabilizer():
    return _memo(claimed_origin_stabilizer)


@pytest.fixture(scope="session")
def brute_list():
    return _memo(lambda n: enumerate_automorphisms(build_graph(n)))
