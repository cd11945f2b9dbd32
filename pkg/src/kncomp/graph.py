"""Simple undirected graphs on vertex set {1..k}: parsing, queries, complements.

The edge-list text format is a header line "k m" followed by m lines "u v"
with 1-indexed endpoints. The serializer writes edges in lexicographic
order, so parse/serialize round-trips are exact.
"""

from dataclasses import dataclass

__all__ = [
    "Graph",
    "Problem",
    "EdgeListParseError",
    "parse_edge_list",
    "serialize_edge_list",
    "is_connected",
    "is_tree",
    "complement_in_host",
]


class EdgeListParseError(ValueError):
    """Malformed edge-list text; `line_no` is 1-based."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """Immutable simple undirected graph with vertices 1..vertex_count.

    Neighbor lists are kept sorted, so every iteration order downstream
    (peeling levels, labels) is deterministic.
    """

    __slots__ = ("vertex_count", "edge_count", "_adj")

    def __init__(self, vertex_count: int, edges=()):
        if vertex_count < 0:
            raise ValueError(f"negative vertex count {vertex_count}")
        adj = [[] for _ in range(vertex_count + 1)]
        seen = set()
        for u, v in edges:
            if not (1 <= u <= vertex_count) or not (1 <= v <= vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{vertex_count}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.vertex_count = vertex_count
        self.edge_count = len(seen)
        self._adj = tuple(tuple(sorted(ns)) for ns in adj)

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in self.vertices() for v in self._adj[u] if u < v]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._adj == other._adj

    def __hash__(self):
        return hash((self.vertex_count, self._adj))

    def __repr__(self):
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"


def parse_edge_list(text: str) -> Graph:
    """Parse "k m" header plus m "u v" lines into a validated Graph.

    Every malformed input raises EdgeListParseError carrying the offending
    line number: bad header, k < 1, non-integer tokens, loops, duplicate
    edges, out-of-range endpoints, or an edge count that contradicts the
    header. Blank lines are ignored.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListParseError(1, "missing 'k m' header")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(1, f"expected 'k m' header, got {lines[0]!r}")
    try:
        k, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(1, f"non-integer header fields {lines[0]!r}") from None
    if k < 1:
        raise EdgeListParseError(1, f"vertex count must be at least 1, got {k}")
    if m < 0:
        raise EdgeListParseError(1, f"negative edge count {m}")

    edges = []
    seen = set()
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer endpoint in {line!r}") from None
        if u == v:
            raise EdgeListParseError(line_no, f"loop at vertex {u}")
        if not (1 <= u <= k) or not (1 <= v <= k):
            raise EdgeListParseError(line_no, f"endpoint out of range 1..{k} in ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(line_no, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise EdgeListParseError(
            len(lines), f"header promised {m} edges, found {len(edges)}"
        )
    return Graph(k, edges)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; edges emitted in lexicographic order."""
    out = [f"{g.vertex_count} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def is_connected(g: Graph) -> bool:
    """BFS connectivity; a single vertex is connected."""
    if g.vertex_count <= 1:
        return True
    seen = [False] * (g.vertex_count + 1)
    seen[1] = True
    stack = [1]
    reached = 1
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if not seen[u]:
                seen[u] = True
                reached += 1
                stack.append(u)
    return reached == g.vertex_count


def is_tree(g: Graph) -> bool:
    """Connected with exactly k-1 edges."""
    return (
        g.vertex_count >= 1
        and g.edge_count == g.vertex_count - 1
        and is_connected(g)
    )


@dataclass(frozen=True)
class Problem:
    """The pair (n, h): count spanning trees of K_n minus the subtrahend h."""

    n: int
    h: Graph

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"host size must be at least 1, got {self.n}")
        if self.h.vertex_count > self.n:
            raise ValueError(
                f"subtrahend has {self.h.vertex_count} vertices "
                f"but the host has only {self.n}"
            )


def complement_in_host(problem: Problem) -> Graph:
    """Explicit K_n minus h on all n host vertices.

    Oracle use only: the counting engines never materialize the complement.
    """
    n, h = problem.n, problem.h
    removed = set(h.edges())
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if (u, v) not in removed
    ]
    return Graph(n, edges)
