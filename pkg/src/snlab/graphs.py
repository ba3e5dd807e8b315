"""Simple undirected graphs, signed graphs, and structural invariants.

Vertices are the integers ``0 .. n-1``. Edges are unordered pairs stored as
``(u, v)`` with ``u < v``. Everything here is immutable after construction
and safe to share between workers; all operations are pure functions.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Union

from .errors import StructureError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def _adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # compact, deterministic
        return f"Graph({self.n}, {self.sorted_edges()})"


@dataclass(frozen=True)
class SignedGraph:
    """A graph together with a total edge-sign map into {+1, -1}.

    ``signed_edges`` is the sorted tuple of ``(u, v, sign)`` triples; its
    edge set must equal the underlying graph's exactly.
    """

    graph: Graph
    signed_edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = {}
        for u, v, s in self.signed_edges:
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s!r}")
            e = _norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate sign for edge {e}")
            seen[e] = s
        if set(seen) != self.graph.edges:
            raise ValueError("sign map domain must equal the edge set")
        object.__setattr__(
            self, "signed_edges",
            tuple(sorted((u, v, seen[(u, v)]) for u, v in self.graph.edges)))

    @classmethod
    def with_signs(cls, graph: Graph, signs: Mapping[Edge, int]) -> "SignedGraph":
        return cls(graph, tuple((u, v, s) for (u, v), s in signs.items()))

    @classmethod
    def all_positive(cls, graph: Graph) -> "SignedGraph":
        return cls(graph, tuple((u, v, 1) for u, v in graph.edges))

    @classmethod
    def with_negatives(cls, graph: Graph, negatives: Iterable[Edge]) -> "SignedGraph":
        neg = {_norm_edge(u, v) for u, v in negatives}
        missing = neg - graph.edges
        if missing:
            raise ValueError(f"negative edges not in graph: {sorted(missing)}")
        return cls(graph, tuple(
            (u, v, -1 if (u, v) in neg else 1) for u, v in graph.edges))

    @cached_property
    def _sign_map(self) -> dict[Edge, int]:
        return {(u, v): s for u, v, s in self.signed_edges}

    def sign(self, u: int, v: int) -> int:
        return self._sign_map[_norm_edge(u, v)]

    @property
    def n(self) -> int:
        return self.graph.n

    def negative_edges(self) -> list[Edge]:
        return sorted((u, v) for u, v, s in self.signed_edges if s == -1)

    def __repr__(self) -> str:
        return f"SignedGraph({self.graph!r}, negatives={self.negative_edges()})"


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its vertices in cyclic order, length >= 3.

    Stored in canonical rotation: minimum vertex first, then the smaller of
    its two cycle neighbors, so equal cycles compare equal.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle vertices must be distinct")
        i = vs.index(min(vs))
        rot = vs[i:] + vs[:i]
        if rot[-1] < rot[1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        object.__setattr__(self, "vertices", rot)

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_list(self) -> list[Edge]:
        vs = self.vertices
        return [_norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __repr__(self) -> str:
        return f"Cycle{self.vertices}"


def is_cycle_of(g: Graph, c: Cycle) -> bool:
    """True when consecutive vertices of ``c`` are adjacent in ``g``."""
    return all(g.has_edge(u, v) for u, v in c.edge_list())


@dataclass(frozen=True)
class ContractionTree:
    """Result of contracting each (vertex-disjoint) cycle to a single vertex.

    ``origin[t]`` is either the original vertex an acyclic tree vertex came
    from, or the :class:`Cycle` a cyclic tree vertex stands for.
    ``cyclic_vertices`` indexes the latter kind.
    """

    tree: Graph
    cyclic_vertices: frozenset[int]
    origin: tuple[Union[int, Cycle], ...]

    @property
    def acyclic_vertices(self) -> frozenset[int]:
        return frozenset(range(self.tree.n)) - self.cyclic_vertices

    @cached_property
    def core(self) -> Graph:
        """The tree with all cyclic vertices deleted (densely relabeled)."""
        g, _ = delete_vertices(self.tree, self.cyclic_vertices)
        return g


class PendantType(enum.Enum):
    """Classification of a degree-1 vertex in a graph with a cycle.

    TYPE_I: its unique neighbor lies on no cycle.
    TYPE_II: its unique neighbor lies on some cycle.
    """

    TYPE_I = 1
    TYPE_II = 2


# ---------------------------------------------------------------------------
# subgraphs and deletion

def induced_subgraph(g, vs: Iterable[int]):
    """Subgraph induced on ``vs``, densely relabeled.

    Accepts a :class:`Graph` or :class:`SignedGraph` (signs restricted).
    Returns ``(subgraph, relabel)`` where ``relabel`` maps old vertex ids of
    the kept vertices to their new dense ids.
    """
    base = g.graph if isinstance(g, SignedGraph) else g
    keep = sorted(set(vs))
    for v in keep:
        if not (0 <= v < base.n):
            raise ValueError(f"vertex {v} out of range for n={base.n}")
    relabel = {v: i for i, v in enumerate(keep)}
    kept_edges = [(u, v) for u, v in base.edges if u in relabel and v in relabel]
    sub = Graph(len(keep), frozenset(_norm_edge(relabel[u], relabel[v])
                                     for u, v in kept_edges))
    if isinstance(g, SignedGraph):
        signs = {_norm_edge(relabel[u], relabel[v]): g.sign(u, v)
                 for u, v in kept_edges}
        return SignedGraph.with_signs(sub, signs), relabel
    return sub, relabel


def delete_vertices(g, vs: Iterable[int]):
    """``g`` minus the vertices ``vs`` and their incident edges.

    Same return convention as :func:`induced_subgraph`.
    """
    base = g.graph if isinstance(g, SignedGraph) else g
    drop = set(vs)
    for v in drop:
        if not (0 <= v < base.n):
            raise ValueError(f"vertex {v} out of range for n={base.n}")
    return induced_subgraph(g, set(range(base.n)) - drop)


# ---------------------------------------------------------------------------
# connectivity and cycle space

def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by
    smallest member."""
    seen = [False] * g.n
    comps = []
    for src in range(g.n):
        if seen[src]:
            continue
        seen[src] = True
        comp = [src]
        q = deque([src])
        while q:
            v = q.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def num_components(g: Graph) -> int:
    return len(connected_components(g))


def is_connected(g: Graph) -> bool:
    return num_components(g) == 1


def cycle_space_dim(g: Graph) -> int:
    """Dimension of the cycle space: |E| - |V| + number of components."""
    return len(g.edges) - g.n + num_components(g)


def pendant_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if g.degree(v) == 1)


# ---------------------------------------------------------------------------
# blocks (maximal 2-connected subgraphs and bridges)

@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def contains_cycle(self) -> bool:
        return len(self.edges) >= len(self.vertices)


def blocks(g: Graph) -> list[Block]:
    """Block decomposition; every edge belongs to exactly one block.

    Isolated vertices belong to no block. Deterministic order (by sorted
    edge lists).
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    estack: list[Edge] = []
    found: list[list[Edge]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        comp = []
                        while True:
                            e = estack.pop()
                            comp.append(e)
                            if e == (u, v):
                                break
                        found.append(comp)
                continue
            if w == parent[v]:
                continue
            if disc[w] == -1:
                parent[w] = v
                estack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(g.neighbors(w))))
            elif disc[w] < disc[v]:
                estack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
    out = []
    for comp in found:
        es = frozenset(_norm_edge(u, v) for u, v in comp)
        vs = frozenset(v for e in es for v in e)
        out.append(Block(vs, es))
    out.sort(key=lambda b: sorted(b.edges))
    return out


def vertices_on_cycles(g: Graph) -> frozenset[int]:
    """Vertices lying on at least one cycle."""
    out: set[int] = set()
    for b in blocks(g):
        if b.contains_cycle():
            out |= b.vertices
    return frozenset(out)


def cycles_pairwise_vertex_disjoint(g: Graph):
    """Whether all cycles of ``g`` are pairwise vertex-disjoint.

    Equivalent to every block being a single edge or a single cycle AND no
    vertex lying in two cycle blocks (cycle blocks may still meet at cut
    vertices otherwise). Returns ``(True, cycles)`` with one :class:`Cycle`
    per cycle block (their count then equals the cycle-space dimension), or
    ``(False, None)``.
    """
    cycles = []
    seen: set[int] = set()
    for b in blocks(g):
        if len(b.edges) == 1:
            continue
        if len(b.edges) != len(b.vertices):
            return False, None
        if seen & b.vertices:
            return False, None
        seen |= b.vertices
        cycles.append(_block_cycle(b))
    cycles.sort(key=lambda c: c.vertices)
    return True, cycles


def _block_cycle(b: Block) -> Cycle:
    # a 2-connected block with |E| == |V| is a single cycle; walk it
    adj: dict[int, list[int]] = {v: [] for v in b.vertices}
    for u, v in b.edges:
        adj[u].append(v)
        adj[v].append(u)
    start = min(b.vertices)
    walk = [start]
    prev = -1
    cur = start
    while True:
        nxt = min(w for w in adj[cur] if w != prev) if prev == -1 else \
            next(w for w in adj[cur] if w != prev)
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    return Cycle(tuple(walk))


def contract_cycles(g: Graph) -> ContractionTree:
    """Contract each cycle of ``g`` to a single cyclic vertex.

    Requires all cycles to be pairwise vertex-disjoint; raises
    :class:`StructureError` otherwise. The result is acyclic.
    """
    ok, cycles = cycles_pairwise_vertex_disjoint(g)
    if not ok:
        raise StructureError("cycles are not pairwise vertex-disjoint")
    on_cycle: dict[int, int] = {}
    pieces: list[Union[int, Cycle]] = []
    for cyc in cycles:
        for v in cyc.vertices:
            on_cycle[v] = len(pieces)
        pieces.append(cyc)
    for v in range(g.n):
        if v not in on_cycle:
            pieces.append(v)

    def piece_key(p):
        return min(p.vertices) if isinstance(p, Cycle) else p

    order = sorted(range(len(pieces)), key=lambda i: piece_key(pieces[i]))
    new_id = {old: new for new, old in enumerate(order)}
    origin = tuple(pieces[old] for old in order)

    plain_id = {p: new_id[idx] for idx, p in enumerate(pieces)
                if not isinstance(p, Cycle)}

    def mapped(v: int) -> int:
        return new_id[on_cycle[v]] if v in on_cycle else plain_id[v]

    tree_edges = set()
    for u, v in g.edges:
        mu, mv = mapped(u), mapped(v)
        if mu != mv:
            tree_edges.add(_norm_edge(mu, mv))
    tree = Graph(len(pieces), frozenset(tree_edges))
    if cycle_space_dim(tree) != 0:
        raise StructureError("contraction did not produce an acyclic graph")
    cyclic = frozenset(i for i, p in enumerate(origin) if isinstance(p, Cycle))
    return ContractionTree(tree, cyclic, origin)


def pendant_type(g, u: int) -> PendantType:
    """Classify pendant vertex ``u`` by whether its neighbor is on a cycle.

    Accepts a :class:`Graph` or :class:`SignedGraph`; the classification
    depends only on the underlying graph. The graph must contain a cycle.
    """
    base = g.graph if isinstance(g, SignedGraph) else g
    if base.degree(u) != 1:
        raise ValueError(f"vertex {u} is not pendant (degree {base.degree(u)})")
    cyclic = vertices_on_cycles(base)
    if not cyclic:
        raise ValueError("pendant classification needs at least one cycle")
    (v,) = base.neighbors(u)
    return PendantType.TYPE_II if v in cyclic else PendantType.TYPE_I


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best: int | None = None
    for src in range(g.n):
        dist = {src: 0}
        par = {src: -1}
        q = deque([src])
        while q:
            v = q.popleft()
            if best is not None and dist[v] * 2 >= best:
                continue
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    par[w] = v
                    q.append(w)
                elif par[v] != w:
                    cand = dist[v] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


# ---------------------------------------------------------------------------
# small constructors, mostly for tests and the family generator

def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` pendant vertices."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = {(u + a.n, v + a.n) for u, v in b.edges}
    return Graph(a.n + b.n, frozenset(a.edges) | shifted)
