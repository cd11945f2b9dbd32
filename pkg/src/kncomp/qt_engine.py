"""Spanning trees of K_n minus a quasi-threshold graph.

A connected graph Q with no induced 4-vertex path or 4-cycle peels into a
rooted node tree: the root node collects the universal vertices of Q, and
each remaining connected piece recursively contributes a child subtree.
Members of one node share identical closed neighborhoods; two vertices are
adjacent in Q exactly when their nodes coincide or sit on one root-to-leaf
chain. This decomposition exists (and the peeling succeeds) precisely for
quasi-threshold graphs, so the builder doubles as the recognizer.

Numbering the k nodes so that children always precede parents (leaf-peel
levels of the node tree), write b = 1/n and, for node i with multiplicity
p_i and member degree d_i,

    a_i     = 1 - d_i * b
    sigma_i = (a_i + (p_i - 1) * b) / p_i.

Eliminating the within-node blocks and the couplings to non-parent
ancestors leaves a tree-structured system with diagonal a'_i and
parent-child coupling b'_i:

    a'_i = sigma_i                                 if node i is a leaf
    a'_i = sigma_i + sum(sigma_j - 2b
                         for internal children j)  otherwise
    b'_i = b        for leaves,   b - sigma_i      otherwise

    phi_i = a'_i - sum(b'_j ** 2 / phi_j for children j)

and the count assembles as

    tau(K_n - Q) = n^(n+k-p-2) * prod(p_i * (n - d_i - 1)^(p_i - 1) * phi_i).

A complete split graph (clique of size |K| joined to an independent set of
size |S|) is the special case whose node tree is a root with |S| singleton
leaf children; there the product collapses to the closed form

    tau = n^(n-p-1) * (n - |K|)^(|S|-1) * (n - p)^|K|,      p = |K| + |S|.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .arith import ExactField, Fraction, ZeroPivotError, product_to_integer
from .graph import Graph, Problem, is_connected

__all__ = [
    "NotQuasiThresholdError",
    "CentNode",
    "CentTree",
    "recognize_and_build_cent_tree",
    "CentFunctionValues",
    "cent_function",
    "count_kn_minus_qt",
    "count_kn_minus_csplit",
    "complete_split_sizes",
    "cent_tree_to_graph",
    "validate_cent_tree",
]


class NotQuasiThresholdError(ValueError):
    """Some connected piece has no universal vertex (an induced P4 or C4 exists).

    `witness` holds the vertex set of the offending piece.
    """

    def __init__(self, witness):
        self.witness = tuple(sorted(witness))
        super().__init__(f"component {self.witness} has no universal vertex")


@dataclass
class CentNode:
    """One node of the decomposition; `degree` is the degree in Q shared by
    every member vertex."""

    members: tuple
    parent: int  # parent node id, 0 for the root
    children: tuple
    degree: int

    @property
    def multiplicity(self) -> int:
        return len(self.members)


@dataclass
class CentTree:
    """Universal-vertex decomposition of a connected quasi-threshold graph.

    Node ids follow discovery order (root is node 1, then breadth-first
    with sibling pieces ordered by smallest member vertex). Labels follow
    leaf-peel levels of the node tree, so children always carry smaller
    labels than their parent and the root carries label k.
    """

    vertex_count: int
    nodes: list  # nodes[0] unused; node id i -> nodes[i]
    levels: list  # node ids grouped by height, ascending creation order within
    labels: list  # labels[node_id] -> 1..k  ([0] unused)
    order: list  # order[label] -> node_id  ([0] unused)

    @property
    def node_count(self) -> int:
        return len(self.nodes) - 1


def recognize_and_build_cent_tree(q: Graph) -> CentTree:
    """Build the decomposition of q, or prove q is not quasi-threshold.

    q must be connected; for disconnected subtrahends use the determinant
    oracles component-free instead. Raises NotQuasiThresholdError with a
    witness piece when the peeling stalls.
    """
    p = q.vertex_count
    if p < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(q):
        raise ValueError(
            "graph is disconnected; this decomposition needs a connected input "
            "(count disconnected subtrahends with a determinant oracle)"
        )

    # Degree of each vertex inside its current piece. Removing a universal
    # set C from a piece lowers every survivor's inner degree by |C|.
    inner_deg = [0] * (p + 1)
    for v in q.vertices():
        inner_deg[v] = q.degree(v)

    members_by_node = [()]
    parents = [0]
    queue = deque()
    queue.append((tuple(q.vertices()), 0))
    while queue:
        piece, parent = queue.popleft()
        size = len(piece)
        cent = tuple(v for v in piece if inner_deg[v] == size - 1)
        if not cent:
            raise NotQuasiThresholdError(piece)
        members_by_node.append(cent)
        parents.append(parent)
        node_id = len(members_by_node) - 1
        if len(cent) == size:
            continue
        rest = set(piece).difference(cent)
        for v in rest:
            inner_deg[v] -= len(cent)
        for part in _components_within(q, rest):
            queue.append((part, node_id))

    k = len(members_by_node) - 1
    children = [[] for _ in range(k + 1)]
    for i in range(2, k + 1):
        children[parents[i]].append(i)

    nodes = [None]
    for i in range(1, k + 1):
        mem = members_by_node[i]
        nodes.append(
            CentNode(
                members=mem,
                parent=parents[i],
                children=tuple(children[i]),
                degree=q.degree(mem[0]),
            )
        )

    # Leaf-peel levels of the node tree = grouping by height; children are
    # always created after their parent, so one reverse sweep suffices.
    height = [0] * (k + 1)
    for i in range(k, 0, -1):
        if children[i]:
            height[i] = 1 + max(height[c] for c in children[i])
    levels = [[] for _ in range(max(height[1:]) + 1)]
    for i in range(1, k + 1):
        levels[height[i]].append(i)
    labels = [0] * (k + 1)
    order = [0] * (k + 1)
    label = 0
    for level in levels:
        for i in level:
            label += 1
            labels[i] = label
            order[label] = i

    ct = CentTree(p, nodes, levels, labels, order)
    _check_construction(ct, q)
    return ct


def _components_within(q: Graph, active: set):
    """Connected components of the subgraph induced by `active`, each as a
    sorted tuple, ordered by smallest member."""
    pending = set(active)
    parts = []
    while pending:
        start = min(pending)
        pending.discard(start)
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for u in q.neighbors(v):
                if u in pending:
                    pending.discard(u)
                    comp.append(u)
                    stack.append(u)
        parts.append(tuple(sorted(comp)))
    parts.sort(key=lambda part: part[0])
    return parts


def _check_construction(ct: CentTree, q: Graph):
    """Cheap structural sanity checks on a freshly built decomposition."""
    seen = 0
    subtree = [0] * (ct.node_count + 1)
    above = [0] * (ct.node_count + 1)
    for i in range(ct.node_count, 0, -1):
        node = ct.nodes[i]
        subtree[i] += node.multiplicity
        if node.parent:
            subtree[node.parent] += subtree[i]
    for i in range(1, ct.node_count + 1):
        node = ct.nodes[i]
        seen += node.multiplicity
        if node.parent:
            par = ct.nodes[node.parent]
            above[i] = above[node.parent] + par.multiplicity
        assert not node.children or len(node.children) >= 2, (
            f"internal node {i} has a single child"
        )
        assert all(q.degree(v) == node.degree for v in node.members), (
            f"members of node {i} disagree on degree"
        )
        expected = (node.multiplicity - 1) + above[i] + (subtree[i] - node.multiplicity)
        assert node.degree == expected, (
            f"node {i}: degree {node.degree} != structural degree {expected}"
        )
    assert seen == ct.vertex_count, "node members do not partition the vertex set"


@dataclass
class CentFunctionValues:
    """Per-node recursion values, indexed by node label (entry 0 unused)."""

    sigma: list
    a_adj: list
    b_adj: list
    phi: list


def cent_function(ct: CentTree, n: int, field=None) -> CentFunctionValues:
    """Evaluate sigma, a', b', phi in ascending node-label order.

    Raises ZeroPivotError carrying the child label when some phi_j = 0 is
    hit in a denominator; raises ValueError when n < p.
    """
    if n < ct.vertex_count:
        raise ValueError(f"host size {n} smaller than graph size {ct.vertex_count}")
    f = field if field is not None else ExactField()
    one = f.from_int(1)
    b = f.div(one, f.from_int(n))
    two_b = f.add(b, b)
    k = ct.node_count
    sigma = [None] * (k + 1)
    a_adj = [None] * (k + 1)
    b_adj = [None] * (k + 1)
    phi = [None] * (k + 1)
    for t in range(1, k + 1):
        node = ct.nodes[ct.order[t]]
        p_i = node.multiplicity
        a = f.sub(one, f.mul(f.from_int(node.degree), b))
        if p_i == 1:
            s = a
        else:
            s = f.div(f.add(a, f.mul(f.from_int(p_i - 1), b)), f.from_int(p_i))
        sigma[t] = s
        if not node.children:
            a_adj[t] = s
            b_adj[t] = b
            phi[t] = s
            continue
        aa = s
        for c in node.children:
            if ct.nodes[c].children:
                aa = f.add(aa, f.sub(sigma[ct.labels[c]], two_b))
        a_adj[t] = aa
        b_adj[t] = f.sub(b, s)
        ph = aa
        for c in node.children:
            tc = ct.labels[c]
            if f.is_zero(phi[tc]):
                raise ZeroPivotError(tc)
            bj = b_adj[tc]
            ph = f.sub(ph, f.div(f.mul(bj, bj), phi[tc]))
        phi[t] = ph
    return CentFunctionValues(sigma, a_adj, b_adj, phi)


def count_kn_minus_qt(problem: Problem) -> int:
    """Exact tau(K_n - Q) for a connected quasi-threshold subtrahend Q.

    Raises NotQuasiThresholdError when Q is not quasi-threshold and
    propagates ZeroPivotError (auto mode falls back to an oracle).
    """
    ct = recognize_and_build_cent_tree(problem.h)
    values = cent_function(ct, problem.n)
    n = problem.n
    coeff = 1
    for node in ct.nodes[1:]:
        coeff *= node.multiplicity * (n - node.degree - 1) ** (node.multiplicity - 1)
    exp = n + ct.node_count - ct.vertex_count - 2
    factors = list(values.phi[1:])
    if exp >= 0:
        scale = coeff * n**exp
    else:
        # Only Q = K_n reaches exp = -1; fold the 1/n into the product.
        scale = coeff
        factors.append(Fraction(1, n**-exp))
    return product_to_integer(factors, scale)


def count_kn_minus_csplit(n: int, size_k: int, size_s: int) -> int:
    """Closed-form tau(K_n - H) for the complete split graph with clique
    part of size_k vertices and independent part of size_s vertices."""
    if size_k < 1:
        raise ValueError("clique part needs at least one vertex")
    if size_s < 0:
        raise ValueError(f"negative independent-part size {size_s}")
    p = size_k + size_s
    if p > n:
        raise ValueError(f"subtrahend has {p} vertices but the host has only {n}")
    if size_s == 0:
        # Empty independent part: H is the complete graph K_p.
        factors = [Fraction(n) ** (n - p - 1), Fraction(n - p) ** (p - 1)]
    else:
        factors = [
            Fraction(n) ** (n - p - 1),
            Fraction(n - size_k) ** (size_s - 1),
            Fraction(n - p) ** size_k,
        ]
    return product_to_integer(factors)


def complete_split_sizes(g: Graph):
    """(clique size, independent size) if g is a complete split graph with a
    nonempty clique part, else None."""
    p = g.vertex_count
    if p < 1:
        return None
    clique = [v for v in g.vertices() if g.degree(v) == p - 1]
    if not clique:
        return None
    size_k = len(clique)
    # Non-universal vertices must be pairwise non-adjacent, i.e. adjacent to
    # exactly the universal set.
    for v in g.vertices():
        if g.degree(v) != p - 1 and g.degree(v) != size_k:
            return None
    return size_k, p - size_k


def cent_tree_to_graph(ct: CentTree) -> Graph:
    """Rebuild the unique graph whose decomposition is `ct`."""
    edges = []
    for i in range(1, ct.node_count + 1):
        mem = ct.nodes[i].members
        edges.extend(combinations(mem, 2))
        j = ct.nodes[i].parent
        while j:
            for x in ct.nodes[j].members:
                for y in mem:
                    edges.append((x, y))
            j = ct.nodes[j].parent
    return Graph(ct.vertex_count, edges)


def validate_cent_tree(ct: CentTree, q: Graph):
    """Assert the full set of structural invariants against the source graph."""
    all_members = [v for i in range(1, ct.node_count + 1) for v in ct.nodes[i].members]
    assert sorted(all_members) == list(q.vertices()), "members must partition V(Q)"

    root = ct.nodes[1]
    assert root.parent == 0
    assert all(q.degree(v) == q.vertex_count - 1 for v in root.members), (
        "root must consist of the universal vertices"
    )
    for i in range(1, ct.node_count + 1):
        node = ct.nodes[i]
        assert not node.children or len(node.children) >= 2
        closed = [frozenset(q.neighbors(v)) | {v} for v in node.members]
        assert all(c == closed[0] for c in closed), (
            f"members of node {i} have differing closed neighborhoods"
        )
    assert ct.labels[1] == ct.node_count, "root must carry the last label"
    for i in range(2, ct.node_count + 1):
        assert ct.labels[i] < ct.labels[ct.nodes[i].parent], (
            "children must precede their parent in label order"
        )
    assert cent_tree_to_graph(ct) == q, "reconstruction must reproduce the input"
