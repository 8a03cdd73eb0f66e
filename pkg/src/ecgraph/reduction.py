"""Edge-minimal reduction preserving every vertex's color degree.

A graph is edge-minimal when deleting any edge lowers the color degree of
at least one endpoint, i.e. every edge is the only one of its color at one
of its ends.  An edge-minimal graph contains no monochromatic triangle and
no monochromatic path with three edges.
"""

from __future__ import annotations

from .core import ColoredGraph


def _color_counts(graph: ColoredGraph) -> list[dict[int, int]]:
    counts: list[dict[int, int]] = [{} for _ in range(graph.n)]
    for u, v in graph.edges:
        c = graph.color(u, v)
        counts[u][c] = counts[u].get(c, 0) + 1
        counts[v][c] = counts[v].get(c, 0) + 1
    return counts


def _removable_edge(graph: ColoredGraph) -> tuple[int, int] | None:
    """Lexicographically smallest edge whose removal keeps both endpoints'
    color degrees, or None if the graph is edge-minimal."""
    counts = _color_counts(graph)
    for u, v in graph.edges:
        c = graph.color(u, v)
        if counts[u][c] >= 2 and counts[v][c] >= 2:
            return (u, v)
    return None


def is_edge_minimal(graph: ColoredGraph) -> tuple[bool, tuple[int, int] | None]:
    """Whether every edge removal drops an endpoint's color degree.

    On False the witness is a removable edge (deterministically the
    lexicographically smallest one).
    """
    witness = _removable_edge(graph)
    return witness is None, witness


def edge_minimal_reduce(graph: ColoredGraph) -> ColoredGraph:
    """Delete removable edges until none remain.

    Repeatedly removes the lexicographically smallest edge whose removal
    preserves both endpoints' color degrees, rescanning from the start
    after each deletion.  The result keeps d^c of every vertex and is
    edge-minimal; the fixed deletion order makes it deterministic.
    """
    current = graph
    while True:
        edge = _removable_edge(current)
        if edge is None:
            return current
        current = current.without_edge(*edge)
