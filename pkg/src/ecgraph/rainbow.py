"""Rainbow triangle enumeration and structured searches.

Searches return :class:`Certificate` witnesses so that every positive
answer can be re-checked against the graph without trusting the search.
Scans run in ascending vertex/edge order and return the first witness,
which keeps outputs deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ColoredGraph
from .matching import max_matching


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class RainbowTriangleIndex:
    """All rainbow triangles of a graph plus per-vertex/per-edge counts."""

    triangles: tuple[tuple[int, int, int], ...]
    rt_vertex: dict[int, int]
    rt_edge: dict[tuple[int, int], int]

    def count(self) -> int:
        return len(self.triangles)

    def rt(self, v: int) -> int:
        return self.rt_vertex.get(v, 0)

    def rt_pair(self, u: int, v: int) -> int:
        return self.rt_edge.get((u, v) if u < v else (v, u), 0)

    def rt_set(self, v: int, others) -> int:
        """Sum of rt(v, x) over x in ``others``."""
        return sum(self.rt_pair(v, x) for x in others)


def build_index(graph: ColoredGraph) -> RainbowTriangleIndex:
    """Enumerate rainbow triangles by bitset intersection over edges."""
    tris: list[tuple[int, int, int]] = []
    rt_v: dict[int, int] = {}
    rt_e: dict[tuple[int, int], int] = {}
    for u, v in graph.edges:
        cuv = graph.color(u, v)
        common = graph.adjacency_bits(u) & graph.adjacency_bits(v)
        for w in _bits(common >> (v + 1)):
            w += v + 1
            cuw = graph.color(u, w)
            cvw = graph.color(v, w)
            if cuv != cuw and cuv != cvw and cuw != cvw:
                tris.append((u, v, w))
                for a in (u, v, w):
                    rt_v[a] = rt_v.get(a, 0) + 1
                for e in ((u, v), (u, w), (v, w)):
                    rt_e[e] = rt_e.get(e, 0) + 1
    return RainbowTriangleIndex(tuple(tris), rt_v, rt_e)


def has_rainbow_triangle(graph: ColoredGraph) -> bool:
    """Early-exit existence test (same scan order as build_index)."""
    for u, v in graph.edges:
        cuv = graph.color(u, v)
        common = graph.adjacency_bits(u) & graph.adjacency_bits(v)
        for w in _bits(common >> (v + 1)):
            w += v + 1
            cuw = graph.color(u, w)
            cvw = graph.color(v, w)
            if cuv != cuw and cuv != cvw and cuw != cvw:
                return True
    return False


@dataclass(frozen=True)
class RainbowEdgeGraph:
    """Edges xy such that v, x, y is a rainbow triangle, for a fixed v."""

    center: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def rainbow_edge_graph(graph: ColoredGraph, v: int) -> RainbowEdgeGraph:
    graph._check_vertex(v)
    es = []
    nbrs = graph.neighbors(v)
    for i, x in enumerate(nbrs):
        cvx = graph.color(v, x)
        for y in nbrs[i + 1:]:
            if not graph.has_edge(x, y):
                continue
            cvy = graph.color(v, y)
            cxy = graph.color(x, y)
            if cvx != cvy and cvx != cxy and cvy != cxy:
                es.append((x, y))
    verts = tuple(sorted({w for e in es for w in e}))
    return RainbowEdgeGraph(center=v, vertices=verts, edges=tuple(es))


@dataclass(frozen=True)
class Certificate:
    """Witness for a successful search; ``self_check`` revalidates it.

    kind: one of book, fan, disjoint_family, spanning_fan.
    base: the shared edge for a book, the center vertex for fans, None for
    a disjoint family.  ``triangles`` always lists the full triples.
    """

    kind: str
    base: tuple[int, int] | int | None
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def apexes(self) -> tuple[int, ...]:
        if self.kind != "book":
            raise ValueError("apexes are defined for book certificates")
        u, v = self.base
        return tuple(sorted(set(t) - {u, v})[0] for t in self.triangles)

    def cited_edges(self) -> list[tuple[int, int]]:
        es = set()
        for t in self.triangles:
            a, b, c = sorted(t)
            es.update({(a, b), (a, c), (b, c)})
        return sorted(es)

    def self_check(self, graph: ColoredGraph) -> bool:
        """True iff the certificate is valid for the given graph."""
        tris = [tuple(sorted(t)) for t in self.triangles]
        if not tris or len(set(tris)) != len(tris):
            return False
        for a, b, c in tris:
            if not (graph.has_edge(a, b) and graph.has_edge(a, c)
                    and graph.has_edge(b, c)):
                return False
        if self.kind != "spanning_fan":
            for a, b, c in tris:
                cs = {graph.color(a, b), graph.color(a, c), graph.color(b, c)}
                if len(cs) != 3:
                    return False
        if self.kind == "book":
            u, v = self.base
            return all(u in t and v in t for t in tris)
        if self.kind == "fan":
            v = self.base
            if any(v not in t for t in tris):
                return False
            rims = [tuple(sorted(set(t) - {v})) for t in tris]
            hit = [w for rim in rims for w in rim]
            return len(set(hit)) == len(hit)
        if self.kind == "disjoint_family":
            hit = [w for t in tris for w in t]
            return len(set(hit)) == len(hit)
        if self.kind == "spanning_fan":
            v = self.base
            if any(v not in t for t in tris):
                return False
            rims = [tuple(sorted(set(t) - {v})) for t in tris]
            hit = [w for rim in rims for w in rim]
            if sorted(hit) != sorted(set(range(graph.n)) - {v}):
                return False
            for x, y in rims:
                cxy = graph.color(x, y)
                if cxy == graph.color(v, x) or cxy == graph.color(v, y):
                    return False
            return True
        return False

    def to_json(self, graph: ColoredGraph) -> dict:
        """JSON document citing the colors of every referenced edge."""
        base = list(self.base) if isinstance(self.base, tuple) else self.base
        return {
            "kind": self.kind,
            "base": base,
            "triangles": [list(t) for t in self.triangles],
            "edge_colors": [
                [u, v, graph.color(u, v)] for u, v in self.cited_edges()
            ],
        }


def max_book(graph: ColoredGraph, index: RainbowTriangleIndex | None = None) -> int:
    """Largest k such that k rainbow triangles share one edge."""
    index = index if index is not None else build_index(graph)
    return max(index.rt_edge.values(), default=0)


def find_book(graph: ColoredGraph, k: int,
              index: RainbowTriangleIndex | None = None) -> Certificate | None:
    """First edge (lexicographically) carrying k rainbow triangles."""
    if k < 1:
        raise ValueError("k must be >= 1")
    index = index if index is not None else build_index(graph)
    for u, v in graph.edges:
        if index.rt_pair(u, v) >= k:
            apexes = sorted(
                (set(t) - {u, v}).pop()
                for t in index.triangles if u in t and v in t
            )[:k]
            tris = tuple(tuple(sorted((u, v, a))) for a in apexes)
            return Certificate(kind="book", base=(u, v), triangles=tris)
    return None


def _fan_matching(graph: ColoredGraph, v: int) -> list[tuple[int, int]]:
    sub = rainbow_edge_graph(graph, v)
    return max_matching(graph.n, sub.edges)


def max_fan(graph: ColoredGraph) -> int:
    """Largest k such that k rainbow triangles share only one vertex."""
    return max((len(_fan_matching(graph, v)) for v in range(graph.n)), default=0)


def find_fan(graph: ColoredGraph, k: int) -> Certificate | None:
    """Fan of k rainbow triangles at the first center that admits one.

    A fan at v exists iff the rainbow-triangle edges of v contain a
    matching of size k, so the search reduces to maximum matching.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    for v in range(graph.n):
        matched = _fan_matching(graph, v)
        if len(matched) >= k:
            tris = tuple(tuple(sorted((v, x, y))) for x, y in matched[:k])
            return Certificate(kind="fan", base=v, triangles=tris)
    return None


def find_disjoint_rainbow_triangles(graph: ColoredGraph, k: int,
                                    index: RainbowTriangleIndex | None = None
                                    ) -> Certificate | None:
    """k pairwise vertex-disjoint rainbow triangles, by exact backtracking.

    Intended for small instances (n up to ~20): branches over the sorted
    triangle list and prunes on the remaining vertex count.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    index = index if index is not None else build_index(graph)
    tris = index.triangles
    chosen: list[tuple[int, int, int]] = []

    def extend(start: int, used: set[int]) -> bool:
        if len(chosen) == k:
            return True
        if len(chosen) + (graph.n - len(used)) // 3 < k:
            return False
        for i in range(start, len(tris)):
            t = tris[i]
            if used.isdisjoint(t):
                chosen.append(t)
                if extend(i + 1, used | set(t)):
                    return True
                chosen.pop()
        return False

    if extend(0, set()):
        return Certificate(kind="disjoint_family", base=None,
                           triangles=tuple(chosen))
    return None


def max_disjoint_rainbow_triangles(graph: ColoredGraph) -> int:
    """Largest k for which a disjoint family exists (exact, small n)."""
    index = build_index(graph)
    k = 0
    while find_disjoint_rainbow_triangles(graph, k + 1, index) is not None:
        k += 1
    return k


def find_pc_spanning_fan(graph: ColoredGraph) -> Certificate | None:
    """Properly colored fan covering all vertices, for odd n.

    Looks for a center v and a perfect matching M on the remaining
    vertices such that each triangle v, x, y (xy in M) is properly colored:
    c(vx) != c(xy) and c(xy) != c(yv), while c(vx) == c(vy) is allowed.
    """
    if graph.n % 2 == 0:
        raise ValueError("spanning fan needs an odd vertex count")

    def matchable(v: int, free: list[int], picked: list[tuple[int, int]]) -> bool:
        if not free:
            return True
        x = free[0]
        rest = free[1:]
        for idx, y in enumerate(rest):
            if not (graph.has_edge(x, y) and graph.has_edge(v, x)
                    and graph.has_edge(v, y)):
                continue
            cxy = graph.color(x, y)
            if cxy == graph.color(v, x) or cxy == graph.color(v, y):
                continue
            picked.append((x, y))
            if matchable(v, rest[:idx] + rest[idx + 1:], picked):
                return True
            picked.pop()
        return False

    for v in range(graph.n):
        others = [w for w in range(graph.n) if w != v]
        picked: list[tuple[int, int]] = []
        if matchable(v, others, picked):
            tris = tuple(tuple(sorted((v, x, y))) for x, y in picked)
            return Certificate(kind="spanning_fan", base=v, triangles=tris)
    return None
