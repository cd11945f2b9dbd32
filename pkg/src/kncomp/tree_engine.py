"""Spanning trees of K_n minus a tree, in O(k) field operations.

Peeling a tree T layer by layer (removing all current leaves at once) and
numbering the vertices level by level produces a labeling in which every
vertex has at most one neighbor with a larger label. Writing b = 1/n,
a_i = 1 - d_i*b (d_i = degree of vertex i in T) and ch(i) for the neighbors
of i with smaller labels, the recursion

    L(i) = a_i - b^2 * sum(1 / L(j) for j in ch(i))

evaluated in ascending label order is exactly the sequence of pivots of the
complement's determinant system under blockwise elimination, so

    tau(K_n - T) = n^(n-2) * L(1) * ... * L(k).

A zero L(j) is legal as a final value (it makes tau zero) but cannot appear
in a denominator; that case raises ZeroPivotError and callers fall back to
a determinant oracle.
"""

from dataclasses import dataclass

from .arith import ExactField, ZeroPivotError, product_to_integer
from .graph import Graph, Problem, is_tree

__all__ = [
    "NotATreeError",
    "StDecomposition",
    "st_decompose",
    "st_function",
    "count_kn_minus_tree",
]


class NotATreeError(ValueError):
    """Input graph is not a tree (connected with k-1 edges)."""


@dataclass
class StDecomposition:
    """Leaf-peeling structure of a tree; lists are indexed 1..k, entry 0 unused.

    levels  -- vertex ids removed at each peel, ascending within a level
    labels  -- labels[v] is the peel-order label of vertex v
    order   -- order[t] is the vertex holding label t
    ch      -- ch[v] lists the neighbors of v with smaller labels
    deg     -- degree of v in the tree
    """

    levels: list
    labels: list
    order: list
    ch: list
    deg: list

    @property
    def vertex_count(self) -> int:
        return len(self.labels) - 1


def st_decompose(t: Graph) -> StDecomposition:
    """Peel leaves level by level and label vertices in peel order.

    Within a level vertices keep ascending original-id order; any fixed
    within-level order yields the same count, this one makes runs
    reproducible. The final level is the tree's center (1 or 2 vertices).
    """
    if not is_tree(t):
        raise NotATreeError(
            f"graph with {t.vertex_count} vertices and {t.edge_count} edges is not a tree"
        )
    k = t.vertex_count
    deg = [0] * (k + 1)
    for v in t.vertices():
        deg[v] = t.degree(v)

    remaining = deg.copy()
    removed = [False] * (k + 1)
    levels = []
    current = [v for v in t.vertices() if remaining[v] <= 1]
    while current:
        levels.append(current)
        for v in current:
            removed[v] = True
        nxt = []
        for v in current:
            for u in t.neighbors(v):
                if not removed[u]:
                    remaining[u] -= 1
                    if remaining[u] == 1:
                        nxt.append(u)
        current = sorted(nxt)

    labels = [0] * (k + 1)
    order = [0] * (k + 1)
    t_label = 0
    for level in levels:
        for v in level:
            t_label += 1
            labels[v] = t_label
            order[t_label] = v

    ch = [()] * (k + 1)
    for v in t.vertices():
        ch[v] = tuple(u for u in t.neighbors(v) if labels[u] < labels[v])
    return StDecomposition(levels, labels, order, ch, deg)


def st_function(dec: StDecomposition, n: int, field=None) -> list:
    """Evaluate the pivot recursion in label order.

    Returns the values indexed by label (entry 0 unused), as elements of
    `field` (exact rationals by default). Raises ZeroPivotError carrying
    the offending label when some L(j) = 0 is hit in a denominator.
    """
    k = dec.vertex_count
    if n < k:
        raise ValueError(f"host size {n} smaller than tree size {k}")
    f = field if field is not None else ExactField()
    one = f.from_int(1)
    b = f.div(one, f.from_int(n))
    b2 = f.mul(b, b)
    labels = dec.labels
    values = [None] * (k + 1)
    for t in range(1, k + 1):
        v = dec.order[t]
        val = f.sub(one, f.mul(f.from_int(dec.deg[v]), b))
        for u in dec.ch[v]:
            lu = values[labels[u]]
            if f.is_zero(lu):
                raise ZeroPivotError(labels[u])
            val = f.sub(val, f.div(b2, lu))
        values[t] = val
    return values


def count_kn_minus_tree(problem: Problem) -> int:
    """Exact tau(K_n - T) for a tree subtrahend T.

    Raises NotATreeError for non-tree input and propagates ZeroPivotError
    (the CLI's auto mode redirects those to the Kirchhoff oracle).
    """
    dec = st_decompose(problem.h)
    values = st_function(dec, problem.n)
    n = problem.n
    scale = n ** (n - 2) if n >= 2 else 1
    return product_to_integer(values[1:], scale)
