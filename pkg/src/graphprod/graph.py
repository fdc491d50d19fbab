"""Simplicial graphs and the purely graph-theoretic computations.

The defining graph of a graph product is simplicial: undirected, no loops,
no multi-edges. Vertices are identified by declaration order throughout the
package, so the tuple `vertices` is authoritative and everything downstream
speaks vertex indices.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import (
    DuplicateVertex,
    GraphProductError,
    SelfLoop,
    UnknownEndpoint,
)


@dataclass(frozen=True)
class SimplicialGraph:
    vertices: tuple[str, ...]
    adj: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise UnknownEndpoint(f"unknown vertex {name!r}") from None

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.adj[i] if i < j]


def validate_graph(vertices, edges) -> SimplicialGraph:
    """Check simpliciality and build the immutable graph.

    `vertices` is an iterable of names, `edges` an iterable of name pairs.
    Raises DuplicateVertex, SelfLoop or UnknownEndpoint.
    """
    names = tuple(vertices)
    seen = set()
    for v in names:
        if v in seen:
            raise DuplicateVertex(f"vertex {v!r} declared twice")
        seen.add(v)
        if not isinstance(v, str) or not v or ":" in v or any(c.isspace() for c in v):
            raise GraphProductError(
                f"vertex name {v!r} must be a nonempty string without spaces or ':'"
            )
    index = {v: i for i, v in enumerate(names)}
    adj: list[set[int]] = [set() for _ in names]
    for e in edges:
        u, w = e
        if u not in index:
            raise UnknownEndpoint(f"edge endpoint {u!r} is not a declared vertex")
        if w not in index:
            raise UnknownEndpoint(f"edge endpoint {w!r} is not a declared vertex")
        if u == w:
            raise SelfLoop(f"self loop at {u!r}")
        adj[index[u]].add(index[w])
        adj[index[w]].add(index[u])
    return SimplicialGraph(names, tuple(frozenset(s) for s in adj))


# ---------------------------------------------------------------------------
# metric bits


def opposite_diameter(graph: SimplicialGraph) -> int:
    """Max diameter of a connected component of the opposite graph.

    The opposite graph joins u,v exactly when they are distinct and not
    adjacent in `graph`. An isolated vertex contributes diameter 0. This
    constant feeds the conjugator length bound.
    """
    n = graph.n
    if n == 0:
        return 0
    opp = [
        frozenset(j for j in range(n) if j != i and j not in graph.adj[i])
        for i in range(n)
    ]
    best = 0
    for src in range(n):
        dist = {src: 0}
        q = deque([src])
        while q:
            x = q.popleft()
            for y in opp[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        best = max(best, max(dist.values()))
    return best


def enumerate_cliques(graph: SimplicialGraph) -> list[tuple[int, ...]]:
    """All maximal cliques, each sorted, listed in lexicographic order.

    Plain Bron-Kerbosch; the graphs in play have a handful of vertices so
    no pivoting is needed. Isolated vertices appear as singleton cliques.
    """
    out: list[tuple[int, ...]] = []

    def grow(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        for v in sorted(p):
            grow(r | {v}, p & graph.adj[v], x & graph.adj[v])
            p = p - {v}
            x = x | {v}

    if graph.n:
        grow(set(), set(range(graph.n)), set())
    return sorted(out)


# ---------------------------------------------------------------------------
# Dehn function classification


def meier_condition(graph: SimplicialGraph, infinite) -> bool:
    """Meier's criterion specialised to a vertex-labelled graph.

    Requires: no induced 4-cycle, no edge joining two infinite vertices,
    and the link of every infinite vertex a complete graph. `infinite` is
    a per-vertex boolean sequence in declaration order.
    """
    inf = tuple(bool(b) for b in infinite)
    if len(inf) != graph.n:
        raise GraphProductError("infinite-flag sequence has wrong length")
    for quad in itertools.combinations(range(graph.n), 4):
        degs = [sum(1 for w in quad if w in graph.adj[v]) for v in quad]
        if sum(degs) == 8 and min(degs) == 2:
            return False  # induced square
    for i in range(graph.n):
        if not inf[i]:
            continue
        link = sorted(graph.adj[i])
        if any(inf[j] for j in link):
            return False
        for a, b in itertools.combinations(link, 2):
            if b not in graph.adj[a]:
                return False
    return True


@dataclass(frozen=True)
class DehnClass:
    """Symbolic Dehn function bound for a graph product.

    `case` is one of "clique", "meier", "non-meier". `terms` lists the
    arguments of the max, as strings: "linear", "quadratic", "delta(u)" or
    "closure-of-delta(u)" where u is a vertex name and closure means the
    subnegative closure of that vertex group's Dehn function.
    """

    case: str
    terms: tuple[str, ...]

    def __str__(self) -> str:
        if len(self.terms) == 1:
            return self.terms[0]
        return "max(" + ", ".join(self.terms) + ")"


def dehn_class(graph: SimplicialGraph, infinite) -> DehnClass:
    """Classify the Dehn function of the product, up to equivalence.

    Three regimes. When Meier's criterion fails the product contains a
    flat plane and the bound is max(quadratic, tilde-terms). When it holds
    and the graph is complete, the product is a direct product with at most
    one infinite factor and the vertex Dehn functions dominate. Otherwise
    the bound is max(linear, tilde-terms). A tilde-term is delta(u) plain
    when u is adjacent to every other vertex, else its subnegative closure;
    for dominating u the closure would change nothing, which is why the
    plain form is reported there.
    """
    if graph.n == 0:
        raise GraphProductError("dehn_class needs at least one vertex")
    inf = tuple(bool(b) for b in infinite)
    if len(inf) != graph.n:
        raise GraphProductError("infinite-flag sequence has wrong length")

    def tilde(i: int) -> str:
        name = graph.vertices[i]
        if len(graph.adj[i]) == graph.n - 1:
            return f"delta({name})"
        return f"closure-of-delta({name})"

    is_clique = all(
        graph.adjacent(i, j) for i, j in itertools.combinations(range(graph.n), 2)
    )
    if not meier_condition(graph, inf):
        return DehnClass(
            "non-meier", ("quadratic",) + tuple(tilde(i) for i in range(graph.n))
        )
    if is_clique:
        return DehnClass(
            "clique", tuple(f"delta({v})" for v in graph.vertices)
        )
    return DehnClass(
        "meier", ("linear",) + tuple(tilde(i) for i in range(graph.n))
    )


def subnegative_closure(values) -> list:
    """Smallest subnegative majorant of f, sampled at 1..n.

    `values[k-1]` is f(k). The closure is
    F(k) = max over compositions k = k_1 + ... + k_m of sum f(k_i),
    computed by the first-part recursion F(k) = max_j (f(j) + F(k-j)).
    """
    f = list(values)
    n = len(f)
    closure: list = [0] * (n + 1)
    for k in range(1, n + 1):
        closure[k] = max(f[j - 1] + closure[k - j] for j in range(1, k + 1))
    return closure[1:]
