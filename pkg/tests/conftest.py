import random

from kncomp.graph import Graph


def relabel(g: Graph, perm: dict) -> Graph:
    """Apply a vertex permutation (old id -> new id) to g."""
    return Graph(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges()])


def random_permutation(k: int, rng: random.Random) -> dict:
    targets = list(range(1, k + 1))
    rng.shuffle(targets)
    return {old: targets[old - 1] for old in range(1, k + 1)}
