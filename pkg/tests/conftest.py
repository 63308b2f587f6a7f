from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from halinspan import HalinGraph, build_halin, random_halin

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# K4 ids: u=0, v1=1, v2=2, v3=3; e1=v1v2, e2=v2v3, e3=v1v3
U, V1, V2, V3 = 0, 1, 2, 3
E1, E2, E3 = (1, 2), (2, 3), (1, 3)


@pytest.fixture
def k4() -> HalinGraph:
    return build_halin("u", {"u": ["v1", "v2", "v3"]})


@pytest.fixture
def six() -> HalinGraph:
    """Smallest depth-2 Halin graph."""
    return build_halin("u", {"u": ["a", "v3", "v4"], "a": ["v1", "v2"]})


def wheel(k: int) -> HalinGraph:
    return build_halin(0, {0: list(range(1, k + 1))})


def reflect(h: HalinGraph) -> HalinGraph:
    return HalinGraph(h.root, h.children, h.leaf_order[::-1], h.labels)


def corpus(count: int = 50, lo: int = 4, hi: int = 12, max_children: int = 4, offset: int = 0):
    """Seeded graphs with n spread evenly over [lo, hi]."""
    span = hi - lo + 1
    return [random_halin(offset + s, lo + s % span, max_children) for s in range(count)]


@st.composite
def halin_graphs(draw, min_n: int = 4, max_n: int = 11) -> HalinGraph:
    seed = draw(st.integers(0, 10**6))
    n = draw(st.integers(min_n, max_n))
    max_children = draw(st.integers(3, 5))
    h = random_halin(seed, n, max_children)
    h = h.with_sigma_start(draw(st.integers(0, h.p - 1)))
    if draw(st.booleans()):
        h = reflect(h)
    return h
