"""Exhaustive enumeration of degree-bounded Gallai trees and the extremal chain families."""

from typing import Iterator

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, are_isomorphic

# Enumeration is exponential in n_max; past 10 vertices the dedup buckets blow up.
_ENUM_VERTEX_CAP = 10


def _attach(base: Graph, v: int, kind: str, size: int) -> Graph:
    """Glue a new block (clique or cycle on `size` vertices) onto `base` at vertex v."""
    n = base.n + size - 1
    ring = [v] + list(range(base.n, n))
    if kind == "clique":
        extra = [(ring[i], ring[j]) for i in range(size) for j in range(i + 1, size)]
    else:
        extra = [(ring[i], ring[(i + 1) % size]) for i in range(size)]
    return Graph(n, list(base.edges()) + extra)


def enumerate_gallai_trees(k: int, n_max: int) -> Iterator[Graph]:
    """Yield every connected graph on <= n_max vertices whose blocks are all
    cliques or odd cycles, with maximum degree <= k-1, excluding K_k itself.
    One representative per isomorphism class, in nondecreasing vertex count.
    """
    if k < 4:
        raise PreconditionError("k must be at least 4", witness=k)
    if n_max > _ENUM_VERTEX_CAP:
        raise BudgetExceeded(
            "enumeration capped at %d vertices, got n_max=%d" % (_ENUM_VERTEX_CAP, n_max)
        )
    if n_max < 1:
        return

    # Every member arises from a smaller one by gluing a leaf block at a cut
    # vertex: cliques K_2..K_{k-1} or odd cycles (C_3 is K_3).  K_k never
    # appears because clique blocks stop at k-1.
    catalog = [("clique", t) for t in range(2, k)]
    catalog += [("cycle", t) for t in range(5, n_max + 1, 2)]

    seen: dict[int, dict[tuple, list[Graph]]] = {n: {} for n in range(1, n_max + 1)}
    order: dict[int, list[Graph]] = {n: [] for n in range(1, n_max + 1)}

    def register(g: Graph) -> bool:
        key = (g.m, tuple(sorted(g.degrees())))
        bucket = seen[g.n].setdefault(key, [])
        for h in bucket:
            if are_isomorphic(g, h):
                return False
        bucket.append(g)
        order[g.n].append(g)
        return True

    register(Graph(1))
    for n in range(1, n_max + 1):
        for g in order[n]:
            yield g
            for kind, size in catalog:
                if n + size - 1 > n_max:
                    continue
                gain = size - 1 if kind == "clique" else 2
                for v in range(n):
                    if g.degree(v) + gain <= k - 1:
                        register(_attach(g, v, kind, size))


def extremal_chain(k: int, m: int) -> Graph:
    """Chain of m copies of X, where X is a K_{k-1} with k-3 pendant K_{k-2}s,
    consecutive copies joined by a single edge between free K_{k-1} vertices.

    Deterministic layout per copy: the K_{k-1} occupies the first k-1 labels,
    pendant blocks follow consecutively; pendant i hangs from clique vertex i
    (i = 0..k-4), leaving clique vertices k-3 and k-2 free for link edges.
    """
    if k < 5:
        raise PreconditionError("k must be at least 5", witness=k)
    if m < 1:
        raise PreconditionError("m must be at least 1", witness=m)
    copy_size = (k - 1) + (k - 3) * (k - 2)
    edges = []
    free: list[list[int]] = []
    for j in range(m):
        off = j * copy_size
        clique = list(range(off, off + k - 1))
        edges += [(clique[a], clique[b]) for a in range(k - 1) for b in range(a + 1, k - 1)]
        for i in range(k - 3):
            start = off + (k - 1) + i * (k - 2)
            block = list(range(start, start + k - 2))
            edges += [(block[a], block[b]) for a in range(k - 2) for b in range(a + 1, k - 2)]
            edges.append((clique[i], block[0]))
        free.append([clique[k - 3], clique[k - 2]])
    for j in range(m - 1):
        edges.append((free[j].pop(0), free[j + 1].pop(0)))
    return Graph(m * copy_size, edges)


def clique_path(k: int, m: int) -> Graph:
    """Path of m copies of K_{k-1}, consecutive copies joined by a single edge
    between their lowest-numbered free vertices.
    """
    if k < 4:
        raise PreconditionError("k must be at least 4", witness=k)
    if m < 1:
        raise PreconditionError("m must be at least 1", witness=m)
    edges = []
    for j in range(m):
        off = j * (k - 1)
        edges += [(off + a, off + b) for a in range(k - 1) for b in range(a + 1, k - 1)]
    for j in range(m - 1):
        # copy 0 links at local 0; later copies already used local 0 for the
        # incoming edge, so the outgoing one sits at local 1
        a = j * (k - 1) + (0 if j == 0 else 1)
        edges.append((a, (j + 1) * (k - 1)))
    return Graph(m * (k - 1), edges)


# Hand-transcribed embeddings of the k=5 chains with 2 and 3 copies.  Kept as
# independent fixtures so extremal_chain can be isomorphism-tested against a
# drawing that was labeled by hand rather than by the layout rule above.

_CHAIN_5_2_EDGES = (
    (1, 0), (1, 2), (1, 3), (2, 0), (2, 4), (3, 0), (3, 2), (4, 5), (4, 6),
    (5, 6), (7, 8), (7, 9), (8, 9), (9, 3), (11, 10), (11, 12), (11, 13),
    (12, 1), (12, 10), (13, 10), (13, 12), (14, 15), (14, 16), (15, 16),
    (16, 11), (17, 18), (17, 19), (18, 19), (19, 10),
)

_CHAIN_5_3_EDGES = (
    (0, 5), (1, 0), (1, 2), (1, 3), (1, 19), (2, 0), (3, 0), (3, 2), (5, 4),
    (5, 6), (5, 7), (6, 4), (6, 8), (7, 4), (7, 6), (8, 9), (8, 10), (9, 10),
    (11, 12), (11, 13), (12, 13), (13, 7), (14, 15), (14, 16), (15, 16),
    (16, 2), (18, 17), (18, 19), (18, 20), (19, 17), (20, 17), (20, 19),
    (21, 22), (21, 23), (22, 23), (24, 25), (24, 26), (25, 26), (26, 17),
    (23, 18), (27, 28), (27, 29), (28, 29), (28, 3),
)


def reference_chain_5_2() -> Graph:
    return Graph(20, _CHAIN_5_2_EDGES)


def reference_chain_5_3() -> Graph:
    return Graph(30, _CHAIN_5_3_EDGES)
