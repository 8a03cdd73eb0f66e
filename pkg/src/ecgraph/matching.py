"""Exact matching, vertex cover, and the matching-structure partition.

Operations take an uncolored view: a vertex count n and an edge collection
on 0..n-1.  Everything here is exact and deterministic at desk scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

COVER_SIZE_LIMIT = 64


def _normalize_edges(n: int, edges) -> list[tuple[int, int]]:
    out = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        out.add((u, v) if u < v else (v, u))
    return sorted(out)


def max_matching(n: int, edges) -> list[tuple[int, int]]:
    """Maximum matching in a general graph via augmenting paths with
    blossom contraction.  Returns the matched pairs sorted lexicographically.
    """
    es = _normalize_edges(n, edges)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    match = [-1] * n

    def lca(base, parent, a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(base, parent, blossom, v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root: int) -> bool:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom to its base
                    cur = lca(base, parent, v, to)
                    blossom = [False] * n
                    mark_path(base, parent, blossom, v, cur, to)
                    mark_path(base, parent, blossom, to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)
    return sorted((v, match[v]) for v in range(n) if v < match[v])


def matching_number(n: int, edges) -> int:
    return len(max_matching(n, edges))


def _greedy_matching_size(edges: list[tuple[int, int]]) -> int:
    used: set[int] = set()
    size = 0
    for u, v in edges:
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            size += 1
    return size


def min_vertex_cover(n: int, edges, size_limit: int = COVER_SIZE_LIMIT) -> list[int]:
    """Exact minimum vertex cover by branch and bound.

    Branches on a highest-degree endpoint of an uncovered edge (in cover /
    all its neighbors in cover), pruned by a greedy matching lower bound.
    Raises for instances above ``size_limit`` vertices.
    """
    if n > size_limit:
        raise ValueError(f"instance too large for exact cover search (n={n})")
    es = _normalize_edges(n, edges)

    # both endpoints of a greedy maximal matching form a valid initial cover
    initial: set[int] = set()
    for u, v in es:
        if u not in initial and v not in initial:
            initial.add(u)
            initial.add(v)
    best: list[int] = sorted(initial)

    def bnb(remaining: list[tuple[int, int]], chosen: list[int]) -> None:
        nonlocal best
        if not remaining:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        if len(chosen) + _greedy_matching_size(remaining) >= len(best):
            return
        deg: dict[int, int] = {}
        for u, v in remaining:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        x = max(deg.items(), key=lambda kv: (kv[1], -kv[0]))[0]
        bnb([e for e in remaining if x not in e], chosen + [x])
        nbrs = sorted({w for e in remaining if x in e for w in e if w != x})
        rest = [e for e in remaining
                if e[0] not in nbrs and e[1] not in nbrs and x not in e]
        bnb(rest, chosen + nbrs)

    bnb(es, [])
    return best


def cover_number(n: int, edges) -> int:
    return len(min_vertex_cover(n, edges))


def connected_components(n: int, edges) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest vertex."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in _normalize_edges(n, edges):
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(n: int, edges) -> bool:
    return len(connected_components(n, edges)) <= 1


@dataclass(frozen=True)
class GallaiPartition:
    """Alternating-path decomposition of a graph relative to a maximum
    matching, with a virtual vertex joined to every unsaturated vertex.

    ``v0`` is the set of vertices reachable from the virtual vertex only by
    alternating paths that end with a non-matching edge; ``components`` are
    the connected components of the graph minus ``v0``.  The identity
    alpha' = |v0| + sum(floor(|V_i| / 2)) holds and is checked at build
    time, together with the structure of matching edges at ``v0``.
    """

    n: int
    matching: tuple[tuple[int, int], ...]
    v0: frozenset[int]
    components: tuple[tuple[int, ...], ...]
    alpha_edges: tuple[tuple[int, int], ...]
    gamma_edges: tuple[tuple[int, int], ...]
    virtual_vertex: int

    @property
    def alpha_prime(self) -> int:
        return len(self.matching)

    @property
    def p(self) -> int:
        return len(self.components)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "matching": [list(e) for e in self.matching],
            "v0": sorted(self.v0),
            "components": [list(c) for c in self.components],
            "alpha_edges": [list(e) for e in self.alpha_edges],
            "gamma_edges": [list(e) for e in self.gamma_edges],
            "virtual_vertex": self.virtual_vertex,
        }


def _gamma_vertices(n: int, es: list[tuple[int, int]], alpha_prime: int) -> frozenset[int]:
    # A vertex lies in V_0 exactly when it neighbors some vertex that a
    # maximum matching can miss, while no maximum matching misses it.
    missable = []
    for v in range(n):
        if matching_number(n, [e for e in es if v not in e]) == alpha_prime:
            missable.append(v)
    mset = set(missable)
    v0 = set()
    for u, v in es:
        if u in mset and v not in mset:
            v0.add(v)
        elif v in mset and u not in mset:
            v0.add(u)
    return frozenset(v0)


def gallai_partition(n: int, edges, matching) -> GallaiPartition:
    """Build the partition for a maximum matching; raises if the matching is
    not maximum or if n <= 2 * alpha' (the decomposition needs unsaturated
    vertices).
    """
    es = _normalize_edges(n, edges)
    eset = set(es)
    m = _normalize_edges(n, matching)
    seen: set[int] = set()
    for u, v in m:
        if (u, v) not in eset:
            raise ValueError(f"matching edge ({u}, {v}) not in graph")
        if u in seen or v in seen:
            raise ValueError("matching edges are not disjoint")
        seen.update((u, v))
    alpha_prime = matching_number(n, es)
    if len(m) != alpha_prime:
        raise ValueError(f"matching has size {len(m)}, maximum is {alpha_prime}")
    if n <= 2 * alpha_prime:
        raise ValueError("partition undefined: n <= 2 * alpha'")

    v0 = _gamma_vertices(n, es, alpha_prime)
    rest_edges = [e for e in es if e[0] not in v0 and e[1] not in v0]
    comps = tuple(c for c in connected_components(n, rest_edges)
                  if c[0] not in v0)

    x = n
    unsaturated = [v for v in range(n) if v not in seen]
    alpha = tuple(m) + tuple((v, x) for v in unsaturated)
    gamma = tuple(e for e in es if e not in set(m))
    part = GallaiPartition(
        n=n,
        matching=tuple(m),
        v0=v0,
        components=comps,
        alpha_edges=alpha,
        gamma_edges=gamma,
        virtual_vertex=x,
    )
    problems = _partition_violations(part, eset)
    if problems:
        raise RuntimeError("partition invariant violated: " + "; ".join(problems))
    return part


def _partition_violations(part: GallaiPartition, eset: set) -> list[str]:
    """Internal consistency checks: the size identity, the placement of
    matching edges around v0, and saturation of v0."""
    problems = []
    comp_of: dict[int, int] = {}
    for i, comp in enumerate(part.components):
        for v in comp:
            comp_of[v] = i
    covered = part.v0 | set(comp_of)
    if covered != set(range(part.n)) or part.v0 & set(comp_of):
        problems.append("v0 and components do not partition the vertex set")

    rhs = len(part.v0) + sum(len(c) // 2 for c in part.components)
    if part.alpha_prime != rhs:
        problems.append(f"size identity fails: {part.alpha_prime} != {rhs}")

    saturated = {v for e in part.matching for v in e}
    if not part.v0 <= saturated:
        problems.append("v0 contains an unsaturated vertex")

    # every alpha edge at a gamma vertex ends in an odd component,
    # and each odd component receives exactly one such edge
    odd = {i for i, c in enumerate(part.components) if len(c) % 2 == 1}
    hits: dict[int, int] = {i: 0 for i in odd}
    x = part.virtual_vertex
    for u, v in part.alpha_edges:
        gamma_ends = [w for w in (u, v) if w == x or w in part.v0]
        if not gamma_ends:
            continue
        others = [w for w in (u, v) if w != x and w not in part.v0]
        if len(others) != 1 or comp_of.get(others[0]) not in odd:
            problems.append(f"alpha edge ({u}, {v}) not matched to an odd component")
            continue
        hits[comp_of[others[0]]] += 1
    for i in odd:
        if hits[i] != 1:
            problems.append(
                f"odd component {i} meets {hits[i]} alpha edges at gamma vertices")
    return problems


@dataclass(frozen=True)
class PartitionDiagnostics:
    """Raw outcome of every partition-based bound for one instance.

    ``size_identity_ok`` and ``structure_ok`` restate the construction
    invariants; ``chain_ok`` is beta <= n - p <= 2 alpha' - |v0|.  The last
    group reports the stronger bounds that need n >= 2 alpha' + 2; they are
    recorded as observed, with ``connected`` alongside because the stronger
    bounds can genuinely fail on disconnected graphs.
    """

    n: int
    alpha_prime: int
    beta: int
    cover: tuple[int, ...]
    v0_size: int
    p: int
    connected: bool
    size_identity_ok: bool
    structure_ok: bool
    chain_ok: bool
    strong_applicable: bool
    strong_beta_ok: bool | None
    strong_v0_ok: bool | None
    tight_applicable: bool
    tight_comps_ok: bool | None
    tight_cover_ok: bool | None

    def to_json(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v)
                for k, v in self.__dict__.items()}


def verify_partition_lemmas(n: int, edges, part: GallaiPartition) -> PartitionDiagnostics:
    """Evaluate the matching/covering bounds against an exact cover.

    Never raises on a failed bound: this is a diagnostics report, meant to
    record which inequalities hold for the instance.
    """
    es = _normalize_edges(n, edges)
    eset = set(es)
    cover = min_vertex_cover(n, es)
    beta = len(cover)
    a = part.alpha_prime
    v0 = len(part.v0)
    p = part.p

    size_identity = a == v0 + sum(len(c) // 2 for c in part.components)
    structure = not _partition_violations(part, eset)
    chain = beta <= n - p <= 2 * a - v0

    applicable = n >= 2 * a + 2
    strong_beta = beta <= 2 * a - 1 if applicable else None
    strong_v0 = v0 >= 1 if applicable else None

    tight_applicable = applicable and beta == 2 * a - 1
    tight_comps = tight_cover = None
    if tight_applicable:
        tight_comps = all(
            len(c) % 2 == 1
            and all((c[i], c[j]) in eset
                    for i in range(len(c)) for j in range(i + 1, len(c)))
            for c in part.components
        )
        candidate = sorted(part.v0) + [v for c in part.components for v in c[1:]]
        cand_set = set(candidate)
        covers = all(u in cand_set or v in cand_set for u, v in es)
        tight_cover = beta == n - p and covers and len(candidate) == beta

    return PartitionDiagnostics(
        n=n,
        alpha_prime=a,
        beta=beta,
        cover=tuple(cover),
        v0_size=v0,
        p=p,
        connected=is_connected(n, es),
        size_identity_ok=size_identity,
        structure_ok=structure,
        chain_ok=chain,
        strong_applicable=applicable,
        strong_beta_ok=strong_beta,
        strong_v0_ok=strong_v0,
        tight_applicable=tight_applicable,
        tight_comps_ok=tight_comps,
        tight_cover_ok=tight_cover,
    )
