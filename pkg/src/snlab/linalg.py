"""Exact integer linear algebra for signed adjacency matrices.

Rank (hence nullity) comes from fraction-free Gaussian elimination; the
characteristic polynomial from the Faddeev-LeVerrier recurrence, whose
divisions are exact over the integers by Newton's identities. No floats
anywhere, so eigenvalue-multiplicity questions never hit rounding.

The module also enumerates basic subgraphs (disjoint unions of single edges
and cycles) and evaluates the signed coefficient sum over them, giving a
second, combinatorial route to the characteristic polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graphs import Cycle, Edge, Graph, SignedGraph

IntMatrix = tuple[tuple[int, ...], ...]

CHAR_POLY_VERTEX_CAP = 16
SACHS_VERTEX_CAP = 12


def signed_adjacency(sg: SignedGraph) -> IntMatrix:
    """Symmetric matrix with the edge sign in position (u, v), else 0."""
    n = sg.n
    rows = [[0] * n for _ in range(n)]
    for u, v, s in sg.signed_edges:
        rows[u][v] = s
        rows[v][u] = s
    return tuple(tuple(r) for r in rows)


def rank_exact(m: IntMatrix) -> int:
    """Rank over the rationals, by Bareiss fraction-free elimination.

    All intermediate values stay integers; the division in the update rule
    is exact (Sylvester's identity).
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def nullity(sg: SignedGraph) -> int:
    """Multiplicity of the eigenvalue zero of the signed adjacency matrix."""
    return sg.n - rank_exact(signed_adjacency(sg))


def char_poly_exact(m: IntMatrix, cap: int = CHAR_POLY_VERTEX_CAP) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - M), coefficients leading-first.

    Faddeev-LeVerrier over the integers: M_k = M M_{k-1} + c_{k-1} I and
    c_k = -tr(M M_k) / k, an exact division.
    """
    n = len(m)
    if n > cap:
        raise CapacityError(
            f"characteristic polynomial is capped at {cap} vertices, got {n}")
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    coeffs = [1]
    aux = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # aux <- M @ aux + c_{k-1} I
        nxt = [[sum(m[i][t] * aux[t][j] for t in range(n)) for j in range(n)]
               for i in range(n)]
        for i in range(n):
            nxt[i][i] += coeffs[k - 1]
        aux = nxt
        trace = sum(sum(m[i][t] * aux[t][i] for t in range(n)) for i in range(n))
        q, r = divmod(-trace, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs.append(q)
    return tuple(coeffs)


def zero_root_multiplicity(poly: tuple[int, ...]) -> int:
    """Multiplicity of the root 0, i.e. trailing zero coefficients."""
    k = 0
    for c in reversed(poly):
        if c != 0:
            break
        k += 1
    return k


# ---------------------------------------------------------------------------
# basic subgraphs and the coefficient formula

@dataclass(frozen=True)
class BasicSubgraph:
    """A spanning structure of single edges and vertex-disjoint cycles.

    ``components`` counts all components, ``num_cycles`` the cycle
    components, ``negative_cycle_edges`` the negative edges lying on cycle
    components (summed over all of them).
    """

    edges: frozenset[Edge]
    components: int
    num_cycles: int
    negative_cycle_edges: int


def enumerate_basic_subgraphs(sg: SignedGraph, i: int) -> list[BasicSubgraph]:
    """All basic subgraphs on exactly ``i`` vertices, deterministic order.

    A basic subgraph is a subgraph whose components are single edges or
    cycles. Recursion on the smallest unused vertex: either it is skipped,
    or covered by an edge, or it is the minimum vertex of a cycle.
    """
    g = sg.graph
    n = g.n
    if i < 0 or i > n:
        raise ValueError(f"vertex count {i} out of range for n={n}")
    adj = g._adj
    out: list[BasicSubgraph] = []

    def cycles_from(u: int, banned: frozenset[int]):
        """Simple cycles whose minimum vertex is ``u``, avoiding ``banned``."""
        # path search; only vertices > u may appear after u, and each cycle
        # is emitted in one direction only (second vertex < last vertex)
        def extend(path: tuple[int, ...], visited: frozenset[int]):
            v = path[-1]
            for w in adj[v]:
                if w == u and len(path) >= 3 and path[1] < path[-1]:
                    yield path
                elif w > u and w not in visited and w not in banned:
                    yield from extend(path + (w,), visited | {w})

        yield from extend((u,), frozenset([u]))

    def rec(min_free: int, used: frozenset[int], covered: int,
            acc_edges: frozenset[Edge], comps: int, cycs: int, negs: int):
        if covered == i:
            out.append(BasicSubgraph(acc_edges, comps, cycs, negs))
            return
        u = min_free
        while u < n and u in used:
            u += 1
        if u == n or n - u < i - covered:
            return
        # skip u entirely
        rec(u + 1, used | {u}, covered, acc_edges, comps, cycs, negs)
        if covered + 2 <= i:
            # cover u by a single edge
            for w in adj[u]:
                if w > u and w not in used:
                    rec(u + 1, used | {u, w}, covered + 2,
                        acc_edges | {(u, w)}, comps + 1, cycs, negs)
        # cover u by a cycle through it as minimum vertex
        for path in cycles_from(u, used):
            if covered + len(path) > i:
                continue
            ce = Cycle(path).edge_list()
            neg = sum(1 for a, b in ce if sg.sign(a, b) == -1)
            rec(u + 1, used | set(path), covered + len(path),
                acc_edges | set(ce), comps + 1, cycs + 1, negs + neg)

    rec(0, frozenset(), 0, frozenset(), 0, 0, 0)
    out.sort(key=lambda b: sorted(b.edges))
    return out


def sachs_coefficient(sg: SignedGraph, i: int) -> int:
    """Coefficient of x^(n-i) in the characteristic polynomial, computed
    combinatorially.

    Each basic subgraph on ``i`` vertices contributes
    (-1)**(components + negative cycle edges) * 2**(cycles).
    """
    if i == 0:
        return 1
    total = 0
    for b in enumerate_basic_subgraphs(sg, i):
        term = 2 ** b.num_cycles
        if (b.components + b.negative_cycle_edges) % 2:
            term = -term
        total += term
    return total


def sachs_coefficients(sg: SignedGraph) -> tuple[int, ...]:
    """All coefficients a_0 .. a_n, leading-first (a_0 = 1)."""
    return tuple(sachs_coefficient(sg, i) for i in range(sg.n + 1))
