from __future__ import annotations

from hypothesis import strategies as st

from ecgraph.core import ColoredGraph


@st.composite
def colored_graphs(draw, min_n: int = 1, max_n: int = 8, max_colors: int = 6):
    n = draw(st.integers(min_n, max_n))
    triples = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                triples.append((u, v, draw(st.integers(1, max_colors))))
    return ColoredGraph(n, triples)
