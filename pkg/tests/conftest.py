"""Shared generators for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from diagramsort.core import PartitionDiagram, _diagram_from_rgs


def random_rgs(rng: random.Random, length: int) -> tuple[int, ...]:
    out = []
    high = 0
    for _ in range(length):
        v = rng.randint(0, high)
        out.append(v)
        high = max(high, v + 1)
    return tuple(out)


def random_diagram(rng: random.Random, order: int) -> PartitionDiagram:
    return _diagram_from_rgs(order, random_rgs(rng, 2 * order))


@st.composite
def diagrams(draw, max_order: int = 4, min_order: int = 0) -> PartitionDiagram:
    order = draw(st.integers(min_order, max_order))
    rgs = []
    high = 0
    for _ in range(2 * order):
        v = draw(st.integers(0, high))
        rgs.append(v)
        high = max(high, v + 1)
    return _diagram_from_rgs(order, tuple(rgs))
