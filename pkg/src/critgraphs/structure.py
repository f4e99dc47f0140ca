"""Block structure, Gallai-tree predicates, and the auxiliary bipartite graph.

A Gallai tree is a connected graph whose blocks are all complete graphs or
odd cycles. For a parameter k, the family of interest is the Gallai trees
with maximum degree <= k-1, excluding K_k itself; these are exactly the
connected graphs that are not degree-choosable (and not degree-paintable),
which is what the coloring engines verify empirically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .errors import PreconditionError
from .graph import Graph, clique_vertices, induced_subgraph


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as vertex sets), cut vertices, and the block-cut tree."""

    blocks: tuple[frozenset, ...]
    cut_vertices: frozenset
    block_tree: tuple[tuple[int, int], ...]  # (block index, cut vertex)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components of a connected graph.

    Raises PreconditionError on disconnected input; callers should split into
    components first.
    """
    if g.n == 0:
        return BlockDecomposition((), frozenset(), ())
    comps = g.components()
    if len(comps) > 1:
        raise PreconditionError(
            f"graph is disconnected ({len(comps)} components); decompose per component",
            witness=tuple(sorted(min(c) for c in comps)),
        )
    if g.n == 1:
        return BlockDecomposition((), frozenset(), ())

    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset] = []
    cuts: set[int] = set()
    timer = 0

    def pop_block(u: int, v: int) -> None:
        verts = set()
        while True:
            e = edge_stack.pop()
            verts.update(e)
            if e == (u, v):
                break
        blocks.append(frozenset(verts))

    # explicit stack DFS from 0, neighbors ascending
    stack: list[tuple[int, iter]] = []
    disc[0] = low[0] = timer
    timer += 1
    stack.append((0, iter(g.neighbors(0))))
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                parent[w] = v
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(g.neighbors(w))))
                if v == 0:
                    root_children += 1
                advanced = True
                break
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != 0:
                        cuts.add(u)
                    pop_block(u, v)
    if root_children >= 2:
        cuts.add(0)

    order = sorted(range(len(blocks)), key=lambda i: sorted(blocks[i]))
    blocks_sorted = tuple(blocks[i] for i in order)
    tree = tuple(
        (bi, c)
        for bi, blk in enumerate(blocks_sorted)
        for c in sorted(blk & cuts)
    )
    return BlockDecomposition(blocks_sorted, frozenset(cuts), tree)


def _is_complete_block(g: Graph, block: frozenset) -> bool:
    b = len(block)
    e = sum(1 for u, v in g.edges() if u in block and v in block)
    return e == b * (b - 1) // 2


def _is_odd_cycle_block(g: Graph, block: frozenset) -> bool:
    b = len(block)
    if b < 3 or b % 2 == 0:
        return False
    e = 0
    for v in block:
        d = sum(1 for u in g.neighbors(v) if u in block)
        if d != 2:
            return False
        e += d
    return e // 2 == b


def is_gallai_tree(g: Graph) -> bool:
    """Connected, and every block is a clique or an odd cycle. K_1 counts."""
    if g.n == 0 or not g.is_connected():
        return False
    dec = block_decomposition(g)
    return all(
        _is_complete_block(g, blk) or _is_odd_cycle_block(g, blk)
        for blk in dec.blocks
    )


def in_t_k(g: Graph, k: int) -> bool:
    """Member of the k-bounded Gallai-tree family: Gallai tree, max degree
    <= k-1, and not K_k itself."""
    if g.n == 0:
        return False
    if any(g.degree(v) > k - 1 for v in range(g.n)):
        return False
    if g.n == k and g.m == k * (k - 1) // 2:
        return False
    return is_gallai_tree(g)


def w_k(g: Graph, k: int) -> frozenset:
    """Vertices lying in at least one K_{k-1} of g."""
    return clique_vertices(g, k - 1)


def q_value(g: Graph, k: int) -> int:
    """Number of non-cut vertices among those in some K_{k-1}."""
    dec = block_decomposition(g)
    return len(w_k(g, k) - dec.cut_vertices)


@dataclass(frozen=True)
class LowHighSplit:
    """Degree split: components of the degree-(k-1) subgraph, degree-k
    vertices, and higher-degree vertices."""

    k: int
    l_components: tuple[frozenset, ...]
    h_vertices: frozenset
    higher_vertices: frozenset
    sub_vertices: frozenset  # degree < k-1; nonempty means preconditions fail downstream

    @property
    def warn(self) -> bool:
        return bool(self.sub_vertices)


def low_high_split(g: Graph, k: int) -> LowHighSplit:
    low = [v for v in range(g.n) if g.degree(v) == k - 1]
    sub, relabel = induced_subgraph(g, low)
    inv = {i: v for v, i in relabel.items()}
    comps = sorted(
        (frozenset(inv[i] for i in comp) for comp in sub.components()),
        key=min,
    )
    return LowHighSplit(
        k=k,
        l_components=tuple(comps),
        h_vertices=frozenset(v for v in range(g.n) if g.degree(v) == k),
        higher_vertices=frozenset(v for v in range(g.n) if g.degree(v) >= k + 1),
        sub_vertices=frozenset(v for v in range(g.n) if g.degree(v) < k - 1),
    )


@dataclass(frozen=True)
class AuxiliaryBipartite:
    """Bipartite structure between selected vertices y and components T of the
    remaining side, with an edge when y sees a K_{k-1} vertex of T."""

    k: int
    tree_components: tuple[frozenset, ...]
    w_sets: tuple[frozenset, ...]
    y_vertices: tuple[int, ...]
    edges: frozenset  # of (y, component index)

    def tree_degree(self, i: int) -> int:
        return sum(1 for y, j in self.edges if j == i)

    def y_degree(self, y: int) -> int:
        return sum(1 for z, _ in self.edges if z == y)

    def component_w(self, i: int) -> frozenset:
        return self.w_sets[i]


def _component_w_set(g: Graph, comp: frozenset, k: int) -> frozenset:
    sub, relabel = induced_subgraph(g, comp)
    inv = {i: v for v, i in relabel.items()}
    return frozenset(inv[i] for i in w_k(sub, k))


def build_aux_partition(
    g: Graph, y_vertices, k: int, tree_vertices=None
) -> AuxiliaryBipartite:
    """General form: components are taken from tree_vertices (default: the
    complement of y_vertices)."""
    ys = sorted(set(y_vertices))
    if tree_vertices is None:
        tree_pool = [v for v in range(g.n) if v not in set(ys)]
    else:
        tree_pool = sorted(set(tree_vertices))
    sub, relabel = induced_subgraph(g, tree_pool)
    inv = {i: v for v, i in relabel.items()}
    comps = sorted(
        (frozenset(inv[i] for i in comp) for comp in sub.components()),
        key=min,
    )
    w_sets = tuple(_component_w_set(g, comp, k) for comp in comps)
    edges = set()
    for y in ys:
        nbrs = set(g.neighbors(y))
        for i, wset in enumerate(w_sets):
            if nbrs & wset:
                edges.add((y, i))
    return AuxiliaryBipartite(
        k=k,
        tree_components=tuple(comps),
        w_sets=w_sets,
        y_vertices=tuple(ys),
        edges=frozenset(edges),
    )


def build_auxiliary(g: Graph, k: int) -> AuxiliaryBipartite:
    """Degree-based form: y side is the degree-k vertices, tree side the
    degree-(k-1) vertices."""
    split = low_high_split(g, k)
    tree_pool = sorted(v for comp in split.l_components for v in comp)
    return build_aux_partition(g, sorted(split.h_vertices), k, tree_pool)


@dataclass(frozen=True)
class EliminationResult:
    order: tuple  # of ("tree", comp index) / ("high", vertex)
    residual_trees: Optional[tuple[int, ...]] = None
    residual_highs: Optional[tuple[int, ...]] = None
    residual_edges: Optional[frozenset] = None

    @property
    def succeeded(self) -> bool:
        return self.residual_trees is None


_THRESHOLDS = {"symmetric": (2, 2), "lopsided": (1, 3)}


def eliminate(aux: AuxiliaryBipartite, mode: Literal["symmetric", "lopsided"]) -> EliminationResult:
    """Peel the auxiliary graph: tree nodes at or below the tree threshold
    first (ascending component id), then y nodes at or below theirs
    (ascending vertex id), repeated to a fixpoint."""
    tree_max, high_max = _THRESHOLDS[mode]
    trees = set(range(len(aux.tree_components)))
    highs = set(aux.y_vertices)
    edges = set(aux.edges)
    order: list[tuple[str, int]] = []

    def tdeg(i):
        return sum(1 for y, j in edges if j == i)

    def hdeg(y):
        return sum(1 for z, _ in edges if z == y)

    while trees or highs:
        removed = False
        for i in sorted(trees):
            if tdeg(i) <= tree_max:
                trees.discard(i)
                edges = {(y, j) for y, j in edges if j != i}
                order.append(("tree", i))
                removed = True
        for y in sorted(highs):
            if hdeg(y) <= high_max:
                highs.discard(y)
                edges = {(z, j) for z, j in edges if z != y}
                order.append(("high", y))
                removed = True
        if not removed:
            return EliminationResult(
                tuple(order),
                residual_trees=tuple(sorted(trees)),
                residual_highs=tuple(sorted(highs)),
                residual_edges=frozenset(edges),
            )
    return EliminationResult(tuple(order))
