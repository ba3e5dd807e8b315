"""Executable forms of the verified statements about signed-graph nullity.

For a signed graph on n vertices with matching number m and cycle-space
dimension c, the nullity eta satisfies

    n - 2m - c  <=  eta  <=  n - 2m + 2c

and the slack s = (n - 2m + 2c) - eta is never exactly 1. This module
computes invariant records, decides when the upper bound is attained,
classifies unbalanced unicyclic graphs into the three nullity cases, runs
exhaustive verification campaigns over enumerated graphs, and constructs
the block family realizing every admissible slack value.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .balance import cycle_sign, is_balanced
from .errors import CapacityError, TheoremViolation
from .formats import graph6_encode, sgl_dumps
from .generation import (CAPACITY_OVERRIDE_ENV, effective_vertex_cap,
                         enumerate_connected, enumerate_signatures)
from .graphs import (Cycle, Edge, Graph, PendantType, SignedGraph, contract_cycles,
                     cycle_space_dim, cycles_pairwise_vertex_disjoint, delete_vertices,
                     is_connected, vertices_on_cycles)
from .linalg import nullity
from .matching import matching_number


@dataclass(frozen=True)
class InvariantRecord:
    """The spectral and structural invariants of one signed graph.

    ``lower``/``upper`` are the nullity bounds n-2m-c and n-2m+2c;
    ``s`` is the slack upper - eta.
    """

    n: int
    m: int
    c: int
    eta: int
    balanced: bool
    lower: int
    upper: int
    s: int

    def to_json_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "c": self.c, "eta": self.eta,
                "balanced": self.balanced, "lower": self.lower,
                "upper": self.upper, "s": self.s}


def _violation(kind: str, sg: SignedGraph, rec: InvariantRecord) -> TheoremViolation:
    return TheoremViolation(kind, rec.to_json_dict(), sgl_dumps([sg]))


def invariant_record(sg: SignedGraph, check: bool = True) -> InvariantRecord:
    """Compute all invariants; with ``check`` the bound and gap statements
    are asserted and a violation raises :class:`TheoremViolation` carrying
    the counterexample."""
    n = sg.n
    m = matching_number(sg.graph)
    c = cycle_space_dim(sg.graph)
    eta = nullity(sg)
    rec = InvariantRecord(
        n=n, m=m, c=c, eta=eta,
        balanced=is_balanced(sg).balanced,
        lower=n - 2 * m - c, upper=n - 2 * m + 2 * c,
        s=(n - 2 * m + 2 * c) - eta)
    if check:
        if not rec.lower <= eta <= rec.upper:
            raise _violation("nullity bounds", sg, rec)
        if rec.s == 1:
            raise _violation("slack-one gap", sg, rec)
    return rec


def attains_upper(sg: SignedGraph) -> bool:
    """Structural predicate equivalent to eta = n - 2m + 2c.

    True iff (1) the cycles are pairwise vertex-disjoint, (2) every cycle
    has length 0 mod 4 with positive sign or length 2 mod 4 with negative
    sign, and (3) the cycle-contraction tree and that tree minus its cyclic
    vertices have equal matching numbers. The caller compares against the
    independently computed nullity; this function never looks at it.
    """
    if not is_connected(sg.graph):
        raise ValueError("the upper-bound predicate needs a connected graph")
    ok, cycles = cycles_pairwise_vertex_disjoint(sg.graph)
    if not ok:
        return False
    assert cycles is not None
    for cyc in cycles:
        q = len(cyc)
        sign = cycle_sign(sg, cyc)
        if not ((q % 4 == 0 and sign == 1) or (q % 4 == 2 and sign == -1)):
            return False
    t = contract_cycles(sg.graph)
    return matching_number(t.tree) == matching_number(t.core)


def classify_unicyclic(sg: SignedGraph) -> int:
    """Predicted nullity offset relative to n - 2m for an unbalanced
    unicyclic signed graph: -1, +2, or 0.

    -1 when the cycle length is odd and the contraction tree keeps its
    matching number after deleting the cyclic vertex; +2 when the length is
    2 mod 4 under the same matching condition; 0 otherwise.
    """
    g = sg.graph
    if not is_connected(g) or cycle_space_dim(g) != 1:
        raise ValueError("expected a connected unicyclic graph")
    bal = is_balanced(sg)
    if bal.balanced:
        raise ValueError("expected an unbalanced signature")
    t = contract_cycles(g)
    (cyc,) = [o for o in t.origin if isinstance(o, Cycle)]
    q = len(cyc)
    matched = matching_number(t.tree) == matching_number(t.core)
    if q % 2 == 1 and matched:
        return -1
    if q % 4 == 2 and matched:
        return 2
    return 0


def unicyclic_case(offset: int) -> int:
    """Case number 1/2/3 for offsets -1/+2/0."""
    return {-1: 1, 2: 2, 0: 3}[offset]


# ---------------------------------------------------------------------------
# pendant reduction

@dataclass(frozen=True)
class ReductionStep:
    """One removal of a pendant vertex and its neighbor, original labels.

    ``kind`` is None when the graph had no cycle at that step (so the
    Type I / Type II split does not apply).
    """

    pendant: int
    neighbor: int
    kind: Optional[PendantType]


@dataclass(frozen=True)
class ReductionResult:
    """Pendant-free remainder plus the trace of removals.

    ``vertex_origin[i]`` is the original label of the reduced graph's
    vertex ``i``. Removing a pendant vertex together with its neighbor
    never changes the nullity, so eta(reduced) = eta(input).
    """

    reduced: SignedGraph
    steps: tuple[ReductionStep, ...]
    vertex_origin: tuple[int, ...]


def pendant_reduction(sg: SignedGraph) -> ReductionResult:
    """Strip pendant vertices pairwise with their neighbors.

    Pendants whose neighbor is off every cycle go first (their removal also
    preserves the slack); ties break on the lowest current label.
    """
    current = sg
    to_orig = list(range(sg.n))
    steps: list[ReductionStep] = []
    while True:
        g = current.graph
        pendants = [v for v in range(g.n) if g.degree(v) == 1]
        if not pendants:
            break
        cyclic = vertices_on_cycles(g)

        def kind_of(u: int) -> Optional[PendantType]:
            if not cyclic:
                return None
            (w,) = g.neighbors(u)
            return PendantType.TYPE_II if w in cyclic else PendantType.TYPE_I

        u = next((p for p in pendants if kind_of(p) is not PendantType.TYPE_II),
                 pendants[0])
        (v,) = g.neighbors(u)
        steps.append(ReductionStep(to_orig[u], to_orig[v], kind_of(u)))
        current, relabel = delete_vertices(current, [u, v])
        to_orig = [to_orig[old] for old in sorted(relabel)]
    return ReductionResult(current, tuple(steps), tuple(to_orig))


# ---------------------------------------------------------------------------
# the extremal family

@dataclass(frozen=True)
class FamilyParams:
    """Block counts for the slack-realizing family.

    ``triangles``: balanced 3-cycles; ``hexagons``: unbalanced 6-cycles;
    ``tailed_squares``: balanced 4-cycles carrying a pendant edge, attached
    through the pendant end. At least one block is required.
    """

    triangles: int
    hexagons: int
    tailed_squares: int

    def __post_init__(self):
        if min(self.triangles, self.hexagons, self.tailed_squares) < 0:
            raise ValueError("block counts must be nonnegative")
        if self.triangles + self.hexagons + self.tailed_squares < 1:
            raise ValueError("at least one block is required")


@dataclass(frozen=True)
class FamilyPrediction:
    """Closed-form invariants of the generated family member."""

    n: int
    m: int
    c: int
    eta: int
    s: int


def family_prediction(p: FamilyParams) -> FamilyPrediction:
    l1, l2, l3 = p.triangles, p.hexagons, p.tailed_squares
    n = 3 * l1 + 6 * l2 + 5 * l3 + 2
    m = l1 + 3 * l2 + 2 * l3 + 1
    c = l1 + l2 + l3
    eta = 2 * l2 + l3
    return FamilyPrediction(n=n, m=m, c=c, eta=eta,
                            s=(n - 2 * m + 2 * c) - eta)


def generate_family(p: FamilyParams) -> tuple[SignedGraph, FamilyPrediction]:
    """Build the family member: a star center x with one bare pendant y0
    and one block hanging off each remaining star edge.

    Blocks attach through one of their vertices: a triangle or hexagon
    vertex directly, a tailed square through its pendant-edge endpoint.
    All edges are positive except one edge per hexagon.
    """
    signs: dict[Edge, int] = {}
    nxt = 2
    signs[(0, 1)] = 1  # x = 0, y0 = 1

    def ring(labels: Sequence[int], negative_first: bool) -> None:
        k = len(labels)
        for i in range(k):
            a, b = labels[i], labels[(i + 1) % k]
            e = (a, b) if a < b else (b, a)
            signs[e] = -1 if (negative_first and i == 0) else 1

    for _ in range(p.triangles):
        a = nxt
        nxt += 3
        signs[(0, a)] = 1
        ring((a, a + 1, a + 2), negative_first=False)
    for _ in range(p.hexagons):
        a = nxt
        nxt += 6
        signs[(0, a)] = 1
        ring(tuple(range(a, a + 6)), negative_first=True)
    for _ in range(p.tailed_squares):
        w = nxt
        nxt += 5
        signs[(0, w)] = 1
        signs[(w, w + 1)] = 1
        ring(tuple(range(w + 1, w + 5)), negative_first=False)

    pred = family_prediction(p)
    assert nxt == pred.n
    g = Graph(pred.n, frozenset(signs))
    return SignedGraph.with_signs(g, signs), pred


def slack_coverage(c: int) -> dict[int, FamilyParams]:
    """For every admissible slack s in [0, 3c] except 1, a parameter triple
    with exactly ``c`` blocks realizing it.

    Realized slack is 3*triangles + 2*tailed_squares; hexagons fill the
    remaining block count. The first (lexicographically smallest) witness
    per slack value is kept.
    """
    if c < 1:
        raise ValueError(f"cycle dimension must be at least 1, got {c}")
    out: dict[int, FamilyParams] = {}
    for l1 in range(c + 1):
        for l3 in range(c - l1 + 1):
            s = 3 * l1 + 2 * l3
            if s not in out:
                out[s] = FamilyParams(l1, c - l1 - l3, l3)
    expected = set(range(3 * c + 1)) - {1}
    assert set(out) == expected
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# verification campaigns

@dataclass
class CampaignReport:
    """Aggregated result of a verification sweep.

    ``histogram`` counts slack values keyed by (n, c). ``violations`` holds
    one dict per record breaking the bounds or hitting slack 1 (expected
    empty: their existence would falsify the verified statements, so they
    are first-class data rather than exceptions). ``upper_check`` compares
    the structural upper-bound predicate against eta = upper on every
    connected graph. ``records`` is populated only when the caller asks for
    per-signature output.
    """

    config: dict
    totals: dict
    histogram: dict[tuple[int, int], dict[int, int]]
    violations: list[dict]
    upper_check: dict
    records: Optional[list[dict]]

    def to_json_dict(self) -> dict:
        hist = {f"{n},{c}": {str(s): cnt for s, cnt in sorted(by_s.items())}
                for (n, c), by_s in sorted(self.histogram.items())}
        return {"config": self.config, "totals": self.totals,
                "histogram": hist, "violations": self.violations,
                "upper_check": self.upper_check}

    @property
    def clean(self) -> bool:
        return not self.violations and not self.upper_check["disagreements"]


def _record_dict(g6: str, sg: SignedGraph, rec: InvariantRecord) -> dict:
    out = {"graph6": g6,
           "negatives": [list(e) for e in sg.negative_edges()]}
    out.update(rec.to_json_dict())
    return out


def _scan_graph(g: Graph, emit_all: bool) -> dict:
    """Scan all signature representatives of one underlying graph."""
    n = g.n
    m = matching_number(g)
    c = cycle_space_dim(g)
    lower = n - 2 * m - c
    upper = n - 2 * m + 2 * c
    g6 = graph6_encode(g)
    connected = is_connected(g)
    disjoint, cycles = cycles_pairwise_vertex_disjoint(g)
    tree_matched = False
    if disjoint:
        t = contract_cycles(g)
        tree_matched = matching_number(t.tree) == matching_number(t.core)

    by_s: dict[int, int] = {}
    violations: list[dict] = []
    disagreements: list[dict] = []
    records: list[dict] = []
    predicate_true = 0
    agreements = 0
    sigs = 0
    for sg in enumerate_signatures(g):
        sigs += 1
        eta = nullity(sg)
        s = upper - eta
        rec = InvariantRecord(n=n, m=m, c=c, eta=eta,
                              balanced=is_balanced(sg).balanced,
                              lower=lower, upper=upper, s=s)
        by_s[s] = by_s.get(s, 0) + 1
        if not lower <= eta <= upper:
            violations.append({"kind": "nullity bounds",
                               **_record_dict(g6, sg, rec)})
        if s == 1:
            violations.append({"kind": "slack-one gap",
                               **_record_dict(g6, sg, rec)})
        if connected:
            predicate = True
            if not disjoint or not tree_matched:
                predicate = False
            else:
                assert cycles is not None
                for cyc in cycles:
                    q = len(cyc)
                    sign = cycle_sign(sg, cyc)
                    if not ((q % 4 == 0 and sign == 1)
                            or (q % 4 == 2 and sign == -1)):
                        predicate = False
                        break
            if predicate:
                predicate_true += 1
            if predicate == (eta == upper):
                agreements += 1
            else:
                disagreements.append({"predicate": predicate,
                                      **_record_dict(g6, sg, rec)})
        if emit_all:
            records.append(_record_dict(g6, sg, rec))
    return {"graphs": 1, "signatures": sigs, "hist": {(n, c): by_s},
            "violations": violations, "records": records,
            "upper": {"tested": sigs if connected else 0,
                      "predicate_true": predicate_true,
                      "agreements": agreements,
                      "disagreements": disagreements,
                      "skipped_disconnected": 0 if connected else sigs}}


def _scan_chunk(args: tuple[tuple[Graph, ...], bool]) -> dict:
    graphs, emit_all = args
    merged = {"graphs": 0, "signatures": 0, "hist": {}, "violations": [],
              "records": [], "upper": {"tested": 0, "predicate_true": 0,
                                       "agreements": 0, "disagreements": [],
                                       "skipped_disconnected": 0}}
    for g in graphs:
        part = _scan_graph(g, emit_all)
        _merge_partial(merged, part)
    return merged


def _merge_partial(acc: dict, part: dict) -> None:
    acc["graphs"] += part["graphs"]
    acc["signatures"] += part["signatures"]
    for key, by_s in part["hist"].items():
        slot = acc["hist"].setdefault(key, {})
        for s, cnt in by_s.items():
            slot[s] = slot.get(s, 0) + cnt
    acc["violations"].extend(part["violations"])
    acc["records"].extend(part["records"])
    for k in ("tested", "predicate_true", "agreements", "skipped_disconnected"):
        acc["upper"][k] += part["upper"][k]
    acc["upper"]["disagreements"].extend(part["upper"]["disagreements"])


def gap_scan(n_max: int, c_max: Optional[int] = None,
             source: Optional[Iterable[Graph]] = None,
             source_label: str = "internal", workers: int = 1,
             emit_all: bool = False, cap: Optional[int] = None) -> CampaignReport:
    """Sweep every (graph, signature) pair and test all statements at once.

    With no ``source``, all connected graphs with 1..n_max vertices are
    enumerated internally (one per isomorphism class); an explicit source
    supplies underlying graphs instead, filtered by n_max/c_max. Workers
    split the graph list into chunks; results merge in chunk order, so the
    report is identical for every worker count.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    graphs: list[Graph] = []
    skipped = 0
    if source is None:
        # check the whole range before enumerating anything, so exceeding
        # the cap fails immediately instead of after the affordable part
        limit = cap if cap is not None else effective_vertex_cap()
        if n_max > limit:
            raise CapacityError(
                f"campaign is capped at {limit} vertices, got n_max={n_max} "
                f"(set {CAPACITY_OVERRIDE_ENV} to override)")
        for n in range(1, n_max + 1):
            graphs.extend(enumerate_connected(n, max_c=c_max, cap=cap))
    else:
        for g in source:
            if g.n > n_max or (c_max is not None and cycle_space_dim(g) > c_max):
                skipped += 1
                continue
            graphs.append(g)

    merged = _scan_chunk(((), emit_all))
    if workers == 1 or len(graphs) <= 1:
        _merge_partial(merged, _scan_chunk((tuple(graphs), emit_all)))
    else:
        chunk_size = max(1, (len(graphs) + workers * 4 - 1) // (workers * 4))
        chunks = [tuple(graphs[i:i + chunk_size])
                  for i in range(0, len(graphs), chunk_size)]
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            for part in pool.map(_scan_chunk,
                                 [(ch, emit_all) for ch in chunks]):
                _merge_partial(merged, part)

    config = {"n_max": n_max, "c_max": c_max, "source": source_label,
              "emit_all": emit_all}
    totals = {"graphs": merged["graphs"], "signatures": merged["signatures"],
              "source_skipped": skipped}
    return CampaignReport(config=config, totals=totals,
                          histogram=merged["hist"],
                          violations=merged["violations"],
                          upper_check=merged["upper"],
                          records=merged["records"] if emit_all else None)
