"""File formats: graph6 for unsigned graphs, a line format for signed ones.

graph6 is the usual 6-bit printable encoding (one graph per line, optional
``>>graph6<<`` header): the vertex count, then the upper triangle of the
adjacency matrix read column by column, packed big-endian into bytes 63..126.

The signed format (.sgl) is textual: a record starts with a line holding
the vertex count, followed by one ``u v s`` line per edge with ``u < v``
and ``s`` either ``+`` or ``-``. Records are separated by blank lines;
``#`` starts a comment. Writers emit edges sorted, so write/read/write is
the identity on bytes.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ParseError
from .graphs import Graph, SignedGraph

_G6_HEADER = ">>graph6<<"


def _g6_size_bytes(n: int) -> str:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 size {n} not supported")


def graph6_encode(g: Graph) -> str:
    """One-line graph6 encoding (no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return _g6_size_bytes(g.n) + "".join(chunks)


def graph6_decode(line: str, lineno: int | None = None) -> Graph:
    """Decode a single graph6 line."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 record", lineno)
    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ParseError("graph6 sizes above 258047 not supported", lineno)
        if len(s) < 4:
            raise ParseError("truncated graph6 size", lineno)
        n = 0
        for ch in s[1:4]:
            v = ord(ch) - 63
            if not 0 <= v <= 63:
                raise ParseError(f"bad graph6 byte {ch!r}", lineno)
            n = (n << 6) | v
        pos = 4
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise ParseError(f"bad graph6 size byte {s[0]!r}", lineno)
        pos = 1
    need = n * (n - 1) // 2
    bits = []
    for ch in s[pos:]:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ParseError(f"bad graph6 byte {ch!r}", lineno)
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    if len(bits) < need or len(bits) >= need + 6:
        raise ParseError(
            f"graph6 record has {len(bits)} data bits, expected {need}", lineno)
    if any(bits[need:]):
        raise ParseError("nonzero padding bits in graph6 record", lineno)
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.add((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def read_graph6(path: str) -> Iterator[Graph]:
    """Graphs from a graph6 file, one per non-blank line, lazily."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            s = raw.strip()
            if not s or s == _G6_HEADER:
                continue
            yield graph6_decode(s, lineno)


def write_graph6(graphs: Iterable[Graph], path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")


# ---------------------------------------------------------------------------
# signed graph lines

def sgl_dumps(sgs: Iterable[SignedGraph]) -> str:
    """Serialize records, blank-line separated, trailing newline."""
    out = []
    for sg in sgs:
        lines = [str(sg.n)]
        for u, v, s in sg.signed_edges:
            lines.append(f"{u} {v} {'+' if s == 1 else '-'}")
        out.append("\n".join(lines))
    return "\n\n".join(out) + ("\n" if out else "")


def sgl_loads(text: str) -> list[SignedGraph]:
    """Parse records; raises :class:`ParseError` with a line number."""
    records: list[SignedGraph] = []
    n: int | None = None
    triples: list[tuple[int, int, int]] = []
    start_line = 0

    def flush():
        nonlocal n, triples
        if n is None:
            return
        try:
            g = Graph(n, frozenset((u, v) for u, v, _ in triples))
            records.append(SignedGraph(g, tuple(triples)))
        except ValueError as exc:
            raise ParseError(str(exc), start_line) from exc
        n = None
        triples = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush()
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise ParseError(f"expected a vertex count, got {raw.strip()!r}",
                                 lineno)
            n = int(parts[0])
            start_line = lineno
            continue
        if len(parts) != 3:
            raise ParseError(f"expected 'u v sign', got {raw.strip()!r}", lineno)
        su, sv, ss = parts
        if not (su.isdigit() and sv.isdigit()):
            raise ParseError(f"bad endpoints {su!r} {sv!r}", lineno)
        u, v = int(su), int(sv)
        if u >= v:
            raise ParseError(f"edge must satisfy u < v, got {u} {v}", lineno)
        if ss not in ("+", "-"):
            raise ParseError(f"sign must be '+' or '-', got {ss!r}", lineno)
        triples.append((u, v, 1 if ss == "+" else -1))
    flush()
    return records


def read_sgl(path: str) -> list[SignedGraph]:
    with open(path, "r", encoding="ascii") as fh:
        return sgl_loads(fh.read())


def write_sgl(sgs: Iterable[SignedGraph], path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(sgl_dumps(sgs))
