"""Exhaustive, deterministic enumeration of graphs and signatures.

Connected graphs are generated up to isomorphism by vertex augmentation:
every connected graph on k >= 2 vertices has a non-cut vertex, so it arises
from a connected graph on k-1 vertices by attaching a new vertex to a
nonempty neighbor set. Duplicates are removed with a canonical form
(minimum adjacency bitstring over label permutations, restricted to
color-refinement classes). Deleting a non-cut vertex never increases the
cycle-space dimension, so a dimension cap may prune at every level.

Signatures are enumerated one per switching class: fixing a spanning
forest, every class has exactly one representative with all forest edges
positive, so the 2^c sign patterns on the non-forest edges cover all
classes without repetition. Switching preserves the spectrum and all cycle
signs, so per-class enumeration is exhaustive for every invariant this
package computes.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Optional

from .balance import cotree_edges
from .errors import CapacityError
from .graphs import Graph, SignedGraph, cycle_space_dim, girth

ENUMERATION_VERTEX_CAP = 8
CAPACITY_OVERRIDE_ENV = "SNLAB_CAPACITY_OVERRIDE"


def effective_vertex_cap() -> int:
    """Enumeration cap; the environment may raise it for larger campaigns."""
    raw = os.environ.get(CAPACITY_OVERRIDE_ENV)
    if raw is None:
        return ENUMERATION_VERTEX_CAP
    try:
        value = int(raw)
    except ValueError:
        raise CapacityError(
            f"{CAPACITY_OVERRIDE_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise CapacityError(f"{CAPACITY_OVERRIDE_ENV} must be positive")
    return value


# ---------------------------------------------------------------------------
# canonical forms

def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighborhood color refinement; canonical color ids."""
    colors = [g.degree(v) for v in range(g.n)]
    # normalize to dense ids ordered by key so ids are label-independent
    while True:
        keys = [(colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
                for v in range(g.n)]
        palette = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [palette[k] for k in keys]
        if new == colors:
            return new
        colors = new


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """Relabeling ``order`` (position -> original vertex) minimizing the
    adjacency bitstring, among permutations preserving refinement classes."""
    colors = _refine_colors(g)
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(colors[v], []).append(v)
    blocks = [tuple(classes[c]) for c in sorted(classes)]

    best_bits: Optional[int] = None
    best_order: Optional[tuple[int, ...]] = None
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    def all_orders(i: int, acc: tuple[int, ...]):
        if i == len(blocks):
            yield acc
            return
        for perm in permutations(blocks[i]):
            yield from all_orders(i + 1, acc + perm)

    for order in all_orders(0, ()):
        bits = 0
        for j in range(1, g.n):
            oj = order[j]
            for i in range(j):
                bits = (bits << 1) | ((masks[order[i]] >> oj) & 1)
        if best_bits is None or bits < best_bits:
            best_bits = bits
            best_order = order
    assert best_order is not None or g.n == 0
    return best_order if best_order is not None else ()


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key ``(n, bits)``; equal iff isomorphic."""
    order = canonical_permutation(g)
    bits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(order[i], order[j]) else 0)
    return g.n, bits


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class."""
    order = canonical_permutation(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.n, frozenset(
        (min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))


# ---------------------------------------------------------------------------
# connected graph catalogs

@lru_cache(maxsize=None)
def _connected_catalog(n: int, max_c: Optional[int]) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices up to isomorphism, with
    cycle-space dimension at most ``max_c`` when given. Canonically labeled,
    sorted by canonical form."""
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1, frozenset()),)
    seen: dict[tuple[int, int], Graph] = {}
    for parent in _connected_catalog(n - 1, max_c):
        pc = cycle_space_dim(parent)
        budget = None if max_c is None else max_c - pc + 1
        for size in range(1, n):
            if budget is not None and size > budget:
                break
            for nbrs in combinations(range(n - 1), size):
                child = Graph(n, frozenset(parent.edges) | {(v, n - 1) for v in nbrs})
                key = canonical_form(child)
                if key not in seen:
                    seen[key] = canonical_graph(child)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_connected(n: int, max_c: Optional[int] = None,
                        unicyclic_only: bool = False,
                        min_girth: Optional[int] = None,
                        cap: Optional[int] = None) -> Iterator[Graph]:
    """Connected graphs on exactly ``n`` vertices, one per isomorphism
    class, in a fixed deterministic order.

    ``max_c`` bounds the cycle-space dimension, ``unicyclic_only`` keeps
    dimension exactly 1, ``min_girth`` drops graphs with shorter cycles.
    ``n`` beyond the cap raises :class:`CapacityError`.
    """
    if cap is None:
        cap = effective_vertex_cap()
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if n > cap:
        raise CapacityError(
            f"enumeration is capped at {cap} vertices, got {n} "
            f"(set {CAPACITY_OVERRIDE_ENV} to override)")
    eff_max_c = 1 if unicyclic_only else max_c
    for g in _connected_catalog(n, eff_max_c):
        if unicyclic_only and cycle_space_dim(g) != 1:
            continue
        if min_girth is not None:
            gi = girth(g)
            if gi is not None and gi < min_girth:
                continue
        yield g


def enumerate_signatures(g: Graph) -> Iterator[SignedGraph]:
    """One signature per switching class, all-positive first.

    Forest edges are pinned positive; the ``i``-th non-forest edge (sorted)
    is negative exactly when bit ``i`` of the pattern index is set.
    """
    free = cotree_edges(g)
    for pattern in range(1 << len(free)):
        neg = {free[i] for i in range(len(free)) if (pattern >> i) & 1}
        yield SignedGraph.with_negatives(g, neg)


def count_switching_classes(g: Graph) -> int:
    return 1 << cycle_space_dim(g)
