"""Maximum matchings: blossom algorithm, brute-force oracle, counting.

Two independent routes to the matching number are kept on purpose. The
blossom implementation is the fast path used everywhere; the brute-force
recursion exists so tests can cross-check it on every small graph rather
than trusting a single implementation.

All functions that return a concrete matching return the canonical one:
lexicographically least sorted edge tuple among all maximum matchings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CapacityError, StructureError
from .graphs import (Cycle, Edge, Graph, contract_cycles, cycle_space_dim,
                     cycles_pairwise_vertex_disjoint, induced_subgraph, is_connected)

BRUTE_FORCE_EDGE_CAP = 24


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, stored sorted."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen or u == v:
                raise ValueError("matching edges must be pairwise disjoint")
            seen.add(u)
            seen.add(v)
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def size(self) -> int:
        return len(self.edges)

    def covers(self, v: int) -> bool:
        return any(v in e for e in self.edges)


# ---------------------------------------------------------------------------
# blossom algorithm (fast path)

def _blossom_pairs(adj: tuple[tuple[int, ...], ...]) -> list[int]:
    """Maximum matching as a partner array (-1 for exposed vertices)."""
    n = len(adj)
    match = [-1] * n
    p = [-1] * n

    def lca(a: int, b: int, base: list[int]) -> int:
        used = set()
        a = base[a]
        while True:
            used.add(a)
            if match[a] == -1:
                break
            a = base[p[match[a]]]
        b = base[b]
        while b not in used:
            b = base[p[match[b]]]
        return b

    def mark_path(v: int, b: int, child: int, base: list[int],
                  blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            p[i] = -1
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # odd cycle found; contract the blossom
                    curbase = lca(v, to, base)
                    blossom = [False] * n
                    mark_path(v, curbase, to, base, blossom)
                    mark_path(to, curbase, v, base, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    # greedy seed cuts down the number of augmentation phases
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for v in range(n):
        if match[v] == -1:
            u = find_augmenting(v)
            while u != -1:
                pv = p[u]
                ppv = match[pv]
                match[u] = pv
                match[pv] = u
                u = ppv
    return match


def matching_number(g: Graph) -> int:
    """Size of a maximum matching."""
    pairs = _blossom_pairs(g._adj)
    return sum(1 for v in pairs if v != -1) // 2


def max_matching(g: Graph) -> Matching:
    """The canonical (lexicographically least) maximum matching.

    Built by committing edges in sorted order whenever a maximum matching
    through the committed set still exists; each feasibility probe is one
    blossom run on the residual graph.
    """
    target = matching_number(g)
    chosen: list[Edge] = []
    used: set[int] = set()
    for u, v in g.sorted_edges():
        if len(chosen) == target:
            break
        if u in used or v in used:
            continue
        rest = set(range(g.n)) - used - {u, v}
        sub, _ = induced_subgraph(g, rest)
        if matching_number(sub) >= target - len(chosen) - 1:
            chosen.append((u, v))
            used.add(u)
            used.add(v)
    return Matching(tuple(chosen))


# ---------------------------------------------------------------------------
# brute force (oracle path)

def _all_matchings(g: Graph):
    """Yield every matching of ``g`` as a sorted edge tuple.

    Decides vertices in increasing order: the current vertex is either left
    unmatched or matched to a still-free higher neighbor, so each matching
    appears exactly once.
    """
    n = g.n
    adj = g._adj

    def rec(i: int, used: int, acc: tuple[Edge, ...]):
        while i < n and (used >> i) & 1:
            i += 1
        if i == n:
            yield acc
            return
        yield from rec(i + 1, used | (1 << i), acc)
        for j in adj[i]:
            if j > i and not (used >> j) & 1:
                yield from rec(i + 1, used | (1 << i) | (1 << j), acc + ((i, j),))

    yield from rec(0, 0, ())


def _check_brute_cap(g: Graph) -> None:
    if len(g.edges) > BRUTE_FORCE_EDGE_CAP:
        raise CapacityError(
            f"brute-force matching is capped at {BRUTE_FORCE_EDGE_CAP} edges, "
            f"got {len(g.edges)}")


def brute_force_max_matching(g: Graph) -> Matching:
    """Exhaustive maximum matching; independent of the blossom code."""
    _check_brute_cap(g)
    best: tuple[Edge, ...] = ()
    for m in _all_matchings(g):
        if len(m) > len(best) or (len(m) == len(best) and m < best):
            best = m
    return Matching(best)


def count_maximum_matchings(g: Graph) -> int:
    """Number of maximum matchings, by exhaustive enumeration."""
    _check_brute_cap(g)
    best = 0
    count = 0
    for m in _all_matchings(g):
        if len(m) > best:
            best = len(m)
            count = 1
        elif len(m) == best:
            count += 1
    return count


def enumerate_maximum_matchings(g: Graph) -> list[tuple[Edge, ...]]:
    """All maximum matchings as sorted edge tuples, sorted."""
    _check_brute_cap(g)
    best: list[tuple[Edge, ...]] = []
    size = 0
    for m in _all_matchings(g):
        if len(m) > size:
            size = len(m)
            best = [m]
        elif len(m) == size:
            best.append(m)
    best.sort()
    return best


# ---------------------------------------------------------------------------
# matching statistics around the unique cycle of a unicyclic graph

def unique_cycle(g: Graph) -> Cycle:
    """The single cycle of a connected unicyclic graph."""
    if not is_connected(g) or cycle_space_dim(g) != 1:
        raise StructureError("expected a connected graph with exactly one cycle")
    ok, cycles = cycles_pairwise_vertex_disjoint(g)
    assert ok and cycles is not None and len(cycles) == 1
    return cycles[0]


@dataclass(frozen=True)
class MatchingSets:
    """Counts of the matching families attached to the unique cycle.

    ``boundary_edges`` are the edges joining the cycle to the rest of the
    graph. ``num_max`` counts maximum matchings of the whole graph;
    ``num_max_offcycle`` those of the graph minus the cycle's vertices
    (equivalently, of the contraction tree minus its cyclic vertex);
    ``num_meeting_boundary`` and ``num_avoiding_boundary`` split ``num_max``
    by whether a matching uses a boundary edge.
    """

    boundary_edges: frozenset[Edge]
    num_max: int
    num_max_offcycle: int
    num_meeting_boundary: int
    num_avoiding_boundary: int


def matching_sets(g: Graph) -> MatchingSets:
    cyc = unique_cycle(g)
    on = set(cyc.vertices)
    boundary = frozenset(e for e in g.edges if (e[0] in on) != (e[1] in on))
    t = contract_cycles(g)
    core = t.core
    maxima = enumerate_maximum_matchings(g)
    meeting = sum(1 for m in maxima if any(e in boundary for e in m))
    return MatchingSets(
        boundary_edges=boundary,
        num_max=len(maxima),
        num_max_offcycle=len(enumerate_maximum_matchings(core)),
        num_meeting_boundary=meeting,
        num_avoiding_boundary=len(maxima) - meeting,
    )


def even_cycle_matching_equivalence(g: Graph) -> tuple[bool, bool]:
    """Two equivalent statements about a unicyclic graph with an even cycle.

    Left: the contraction tree and the contraction tree minus its cyclic
    vertex have equal matching numbers. Right: the matching number of the
    graph splits as cycle part plus off-cycle part, and no maximum matching
    uses a cycle-boundary edge. Returns ``(left, right)``.
    """
    cyc = unique_cycle(g)
    if len(cyc) % 2 != 0:
        raise StructureError("expected an even cycle")
    t = contract_cycles(g)
    left = matching_number(t.tree) == matching_number(t.core)
    ms = matching_sets(g)
    split = matching_number(g) == len(cyc) // 2 + matching_number(t.core)
    right = split and ms.num_meeting_boundary == 0
    return left, right


def odd_cycle_matching_equivalence(g: Graph) -> tuple[bool, bool]:
    """Same as the even-cycle version, for odd cycles.

    Left: equal matching numbers of the contraction tree and its core.
    Right: the matching number of the graph splits as cycle part plus
    off-cycle part. Returns ``(left, right)``.
    """
    cyc = unique_cycle(g)
    if len(cyc) % 2 == 0:
        raise StructureError("expected an odd cycle")
    t = contract_cycles(g)
    left = matching_number(t.tree) == matching_number(t.core)
    right = matching_number(g) == len(cyc) // 2 + matching_number(t.core)
    return left, right
