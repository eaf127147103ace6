"""Simple undirected graphs over GF(2), bit-packed one word per row.

The adjacency matrix is stored as a tuple of integers; bit ``j`` of
``rows[i]`` is the entry for the vertex pair ``(i+1, j+1)``.  With at most
``N_MAX`` = 32 vertices every row fits a single machine word, so neighbour
sets, row XORs and popcounts are O(1).

Vertices are numbered 1..n on every public surface; bit positions are the
zero-based internal labels.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, GraphIdError, LoopEdgeError

N_MAX = 32


class SldType(Enum):
    """Dichotomy of stabilizer-state sector length distributions.

    TYPE_II: every vertex has odd degree; all odd sectors vanish.
    TYPE_I: everything else; odd and even sector sums are equal.
    """

    TYPE_I = "I"
    TYPE_II = "II"


class VertexParity(Enum):
    EVEN_DEGREE = "even"
    ODD_DEGREE = "odd"


class GraphKind(Enum):
    """Generator kinds for :func:`generate`."""

    EDGELESS = "edgeless"
    COMPLETE = "complete"
    RING = "ring"
    PATH = "path"
    STAR = "star"
    RANDOM = "random"


@dataclass(frozen=True)
class GraphProperties:
    vertex_count: int
    edge_count: int
    component_count: int
    isolated_vertex_count: int
    degree_sequence: tuple[int, ...]
    sld_type: SldType
    connected: bool

    def to_json(self) -> dict:
        return {
            "vertexCount": self.vertex_count,
            "edgeCount": self.edge_count,
            "componentCount": self.component_count,
            "isolatedVertexCount": self.isolated_vertex_count,
            "degreeSequence": list(self.degree_sequence),
            "sldType": self.sld_type.value,
            "connected": self.connected,
        }


def _check_vertex(n: int, i: int) -> int:
    """Map a 1-based vertex label to its bit position."""
    if not isinstance(i, int) or isinstance(i, bool):
        raise DomainError(f"vertex label must be an integer, got {i!r}")
    if not 1 <= i <= n:
        raise DomainError(f"vertex {i} out of range 1..{n}")
    return i - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; every edit returns a new value."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= N_MAX:
            raise DomainError(f"vertex count {self.n} out of range 1..{N_MAX}")
        if len(self.rows) != self.n:
            raise DomainError(f"expected {self.n} rows, got {len(self.rows)}")
        mask = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise DomainError(f"row {i + 1} has bits beyond vertex {self.n}")
            if row >> i & 1:
                raise DomainError(f"loop at vertex {i + 1}: diagonal must be zero")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise DomainError(f"adjacency not symmetric at ({i + 1},{j + 1})")

    # -- basic queries ----------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        bi, bj = _check_vertex(self.n, i), _check_vertex(self.n, j)
        return bool(self.rows[bi] >> bj & 1)

    def degree(self, i: int) -> int:
        return self.rows[_check_vertex(self.n, i)].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def neighbors(self, i: int) -> list[int]:
        row = self.rows[_check_vertex(self.n, i)]
        return [j + 1 for j in range(self.n) if row >> j & 1]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with 1-based i < j, sorted lexicographically."""
        out = []
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i + 1, j + 1))
                row >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    # -- edits ------------------------------------------------------------

    def toggle_edge(self, i: int, j: int) -> "Graph":
        bi, bj = _check_vertex(self.n, i), _check_vertex(self.n, j)
        if bi == bj:
            raise LoopEdgeError(f"cannot toggle edge ({i},{j}): simple graphs have no loops")
        rows = list(self.rows)
        rows[bi] ^= 1 << bj
        rows[bj] ^= 1 << bi
        return Graph(self.n, tuple(rows))

    def add_vertex(self) -> "Graph":
        if self.n >= N_MAX:
            raise DomainError(f"cannot exceed {N_MAX} vertices")
        return Graph(self.n + 1, self.rows + (0,))

    def delete_vertex(self, i: int) -> "Graph":
        """Remove vertex i; vertices above i shift down by one."""
        if self.n < 2:
            raise DomainError("cannot delete the last vertex")
        bi = _check_vertex(self.n, i)
        low = (1 << bi) - 1
        rows = []
        for k, row in enumerate(self.rows):
            if k == bi:
                continue
            rows.append((row & low) | ((row >> (bi + 1)) << bi))
        return Graph(self.n - 1, tuple(rows))

    def local_complement(self, i: int) -> "Graph":
        """Invert the subgraph induced by the neighborhood of vertex i."""
        bi = _check_vertex(self.n, i)
        nb = self.rows[bi]
        rows = list(self.rows)
        rest = nb
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            rows[j] ^= nb & ~(1 << j)
        return Graph(self.n, tuple(rows))

    # -- decomposition & properties ---------------------------------------

    def components(self) -> list[tuple[list[int], "Graph"]]:
        """Maximal connected vertex subsets with their induced subgraphs.

        Each subset is listed in ascending vertex order and the induced
        graph relabels those vertices to 1..|subset| in the same order.
        """
        seen = 0
        out = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                grown = comp
                rest = frontier
                while rest:
                    v = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    grown |= self.rows[v]
                frontier = grown & ~comp
                comp = grown
            seen |= comp
            members = [v for v in range(self.n) if comp >> v & 1]
            index = {v: k for k, v in enumerate(members)}
            sub = []
            for v in members:
                row = 0
                rest = self.rows[v] & comp
                while rest:
                    w = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    row |= 1 << index[w]
                sub.append(row)
            out.append(([v + 1 for v in members], Graph(len(members), tuple(sub))))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def properties(self) -> GraphProperties:
        degs = self.degrees()
        comps = self.components()
        all_odd = all(d % 2 == 1 for d in degs)
        return GraphProperties(
            vertex_count=self.n,
            edge_count=sum(degs) // 2,
            component_count=len(comps),
            isolated_vertex_count=sum(1 for d in degs if d == 0),
            degree_sequence=degs,
            sld_type=SldType.TYPE_II if all_odd else SldType.TYPE_I,
            connected=len(comps) == 1,
        )

    def parity_coloring(self) -> tuple[VertexParity, ...]:
        return tuple(
            VertexParity.ODD_DEGREE if d % 2 else VertexParity.EVEN_DEGREE
            for d in self.degrees()
        )

    def distillation_pair(self) -> tuple[int, int] | None:
        """Edge {i,j} maximizing deg(i)+deg(j); lexicographic tie-break.

        Returns None for an edgeless graph.
        """
        degs = self.degrees()
        best = None
        best_sum = -1
        for i, j in self.edges():
            s = degs[i - 1] + degs[j - 1]
            if s > best_sum:
                best, best_sum = (i, j), s
        return best

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i, j] for i, j in self.edges()]}


# -- construction ----------------------------------------------------------


def new_graph(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= N_MAX:
        raise DomainError(f"vertex count must be an integer in 1..{N_MAX}, got {n!r}")
    return Graph(n, (0,) * n)


def from_edges(n: int, edges) -> Graph:
    g = new_graph(n)
    rows = list(g.rows)
    for i, j in edges:
        bi, bj = _check_vertex(n, i), _check_vertex(n, j)
        if bi == bj:
            raise LoopEdgeError(f"edge ({i},{j}) is a loop")
        rows[bi] |= 1 << bj
        rows[bj] |= 1 << bi
    return Graph(n, tuple(rows))


def graph_from_json(doc: dict) -> Graph:
    try:
        n = doc["n"]
        edges = doc["edges"]
    except (TypeError, KeyError) as exc:
        raise DomainError(f"graph JSON needs 'n' and 'edges': {doc!r}") from exc
    return from_edges(n, edges)


def generate(
    kind: GraphKind | str,
    n: int,
    p: float | None = None,
    seed: int | None = None,
) -> Graph:
    """Deterministic graph generator.

    RANDOM draws each of the n(n-1)/2 vertex pairs independently with
    probability p, in row-major pair order (1,2), (1,3), ..., (n-1,n),
    consuming one float per pair from ``random.Random(seed)`` (the
    Mersenne Twister, stable across platforms and Python versions).
    """
    if isinstance(kind, str):
        try:
            kind = GraphKind(kind.lower())
        except ValueError:
            raise DomainError(f"unknown graph kind {kind!r}") from None
    g = new_graph(n)
    if kind is GraphKind.EDGELESS:
        return g
    if kind is GraphKind.COMPLETE:
        return from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    if kind is GraphKind.PATH:
        return from_edges(n, [(i, i + 1) for i in range(1, n)])
    if kind is GraphKind.RING:
        edges = [(i, i + 1) for i in range(1, n)]
        if n >= 3:
            edges.append((1, n))
        return from_edges(n, edges)
    if kind is GraphKind.STAR:
        return from_edges(n, [(1, i) for i in range(2, n + 1)])
    if kind is GraphKind.RANDOM:
        if p is None or not 0.0 <= p <= 1.0:
            raise DomainError(f"random graphs need an edge probability in [0,1], got {p!r}")
        if seed is None:
            raise DomainError("random graphs need a seed for reproducibility")
        rng = random.Random(seed)
        edges = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if rng.random() < p:
                    edges.append((i, j))
        return from_edges(n, edges)
    raise DomainError(f"unknown graph kind {kind!r}")


# -- graph-ID codec ---------------------------------------------------------
#
# Layout: the n(n-1)/2 upper-triangle bits in row-major order
# (1,2) (1,3) ... (1,n) (2,3) ... (n-1,n), packed MSB-first into nibbles,
# zero-padded at the tail, rendered as lowercase hex after "<n>:".


def _triangle_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def hex_length(n: int) -> int:
    """Number of hex characters in the ID of an n-vertex graph."""
    return math.ceil(_triangle_bit_count(n) / 4)


def encode_graph_id(g: Graph) -> str:
    bits = 0
    count = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            bits = bits << 1 | (g.rows[i] >> j & 1)
            count += 1
    pad = -count % 4
    bits <<= pad
    digits = hex_length(g.n)
    body = format(bits, f"0{digits}x") if digits else ""
    return f"{g.n}:{body}"


def decode_graph_id(text: str) -> Graph:
    if not isinstance(text, str) or ":" not in text:
        raise GraphIdError(f"malformed graph ID {text!r}: expected '<n>:<hex>'")
    head, _, body = text.partition(":")
    if not head or any(c not in "0123456789" for c in head):
        raise GraphIdError(f"malformed graph ID {text!r}: vertex count is not a decimal integer")
    if head[0] == "0":
        raise GraphIdError(f"malformed graph ID {text!r}: leading zero in vertex count")
    n = int(head)
    if not 1 <= n <= N_MAX:
        raise GraphIdError(f"graph ID vertex count {n} out of range 1..{N_MAX}")
    digits = hex_length(n)
    if len(body) != digits:
        raise GraphIdError(
            f"graph ID {text!r}: expected {digits} hex characters for n={n}, got {len(body)}"
        )
    if any(c not in "0123456789abcdefABCDEF" for c in body):
        raise GraphIdError(f"graph ID {text!r}: invalid hex characters")
    bits = int(body, 16) if body else 0
    nbits = _triangle_bit_count(n)
    pad = -nbits % 4
    if bits & ((1 << pad) - 1):
        raise GraphIdError(f"graph ID {text!r}: nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
