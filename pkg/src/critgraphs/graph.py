"""Small simple undirected graphs with dense 0-based labels.

Adjacency is kept as one integer bitmask per vertex, which keeps the exact
set operations cheap (intersection with a candidate set is a single `&`).
graph6 I/O implements the short form only, so parsing never yields more than
62 vertices; graphs built programmatically may be larger.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import GraphFormatError

VertexSet = frozenset  # frozenset[int]


def _mask_bits(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not adj[u] >> v & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        self.n = n
        self._adj = tuple(adj)
        self._m = m

    @property
    def m(self) -> int:
        """Edge count."""
        return self._m

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self._adj)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_mask_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            rest = self._adj[v] >> (v + 1)
            u = v + 1
            while rest:
                if rest & 1:
                    yield (v, u)
                rest >>= 1
                u += 1

    def vertices(self) -> range:
        return range(self.n)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u},{v})")
        return Graph(self.n, (e for e in self.edges() if e != (min(u, v), max(u, v))))

    def remove_vertex(self, v: int) -> "Graph":
        keep = [x for x in range(self.n) if x != v]
        g, _ = induced_subgraph(self, keep)
        return g

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges()) + list(extra))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _mask_bits(frontier):
                nxt |= self._adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def components(self) -> list[frozenset]:
        out = []
        unseen = (1 << self.n) - 1
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                for v in _mask_bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            out.append(frozenset(_mask_bits(comp)))
            unseen &= ~comp
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # small constructors used throughout tests and fixtures
    @staticmethod
    def complete(n: int) -> "Graph":
        return Graph(n, combinations(range(n), 2))

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs >= 3 vertices")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def wheel(rim: int) -> "Graph":
        """Hub vertex `rim` joined to a cycle on 0..rim-1."""
        edges = [(i, (i + 1) % rim) for i in range(rim)]
        edges += [(i, rim) for i in range(rim)]
        return Graph(rim + 1, edges)


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)

_G6_MAX_N = 62


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 record.

    Raises GraphFormatError naming the byte offset of the first problem.
    """
    record = text.rstrip("\n")
    if not record:
        raise GraphFormatError("empty graph6 record")
    data = record.encode("ascii", errors="replace")
    first = data[0]
    if first == 126:
        raise GraphFormatError("long-form graph6 (leading '~') unsupported at byte offset 0")
    if not (63 <= first <= 63 + _G6_MAX_N):
        raise GraphFormatError(f"malformed graph6 header byte {first} at byte offset 0")
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated graph6 record: need {nbytes} body bytes, got {len(body)} "
            f"(ends at byte offset {len(data)})"
        )
    if len(body) > nbytes:
        raise GraphFormatError(f"trailing garbage at byte offset {1 + nbytes}")
    bits = []
    for i, b in enumerate(body):
        if not (63 <= b <= 126):
            raise GraphFormatError(f"invalid graph6 body byte {b} at byte offset {1 + i}")
        x = b - 63
        bits.extend((x >> shift) & 1 for shift in range(5, -1, -1))
    for j in range(nbits, len(bits)):
        if bits[j]:
            raise GraphFormatError(
                f"nonzero padding bit at byte offset {1 + j // 6}"
            )
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode to short-form graph6; rejects n > 62."""
    if g.n > _G6_MAX_N:
        raise GraphFormatError(f"graph6 short form supports n <= {_G6_MAX_N}, got n = {g.n}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        out.append(chr(63 + x))
    return "".join(out)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    rows = [(no, ln) for no, ln in rows if ln]
    if not rows:
        raise GraphFormatError("line 1: expected header 'n m'")
    no, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise GraphFormatError(f"line {no}: expected header 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {no}: negative count in header")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"line {body[m][0] if len(body) > m else no}: header promises {m} edges, "
            f"found {len(body)}"
        )
    edges = []
    seen = set()
    for no, ln in body:
        parts = ln.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphFormatError(f"line {no}: expected edge 'u v', got {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(f"line {no}: loop {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {no}: vertex out of range 0..{n-1}: {ln!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {no}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# basic operations


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph plus the old->new label map (new labels follow sorted order)."""
    verts = sorted(set(vertices))
    for v in verts:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in combinations(verts, 2)
        if g.has_edge(u, v)
    ]
    return Graph(len(verts), edges), relabel


def maximal_cliques(g: Graph) -> Iterator[frozenset]:
    """Bron-Kerbosch with pivoting; yields maximal cliques as frozensets."""
    adj = g._adj

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            yield frozenset(_mask_bits(r))
            return
        # pivot: vertex of p|x maximizing |p & adj|
        pool = p | x
        pivot = max(_mask_bits(pool), key=lambda u: (p & adj[u]).bit_count())
        cand = p & ~adj[pivot]
        for v in _mask_bits(cand):
            bit = 1 << v
            yield from expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n == 0:
        return
    yield from expand(0, (1 << g.n) - 1, 0)


def contains_clique(g: Graph, t: int) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Does g contain K_t? Returns (answer, witness vertex tuple or None)."""
    if t <= 0:
        return True, ()
    if t == 1:
        return (g.n >= 1, (0,) if g.n else None)
    best: Optional[tuple[int, ...]] = None

    def grow(r: list[int], p: int):
        nonlocal best
        if best is not None:
            return
        if len(r) == t:
            best = tuple(r)
            return
        if len(r) + p.bit_count() < t:
            return
        for v in _mask_bits(p):
            grow(r + [v], p & g._adj[v])
            if best is not None:
                return
            p &= ~(1 << v)

    grow([], (1 << g.n) - 1)
    return (best is not None), best


def clique_vertices(g: Graph, t: int) -> frozenset:
    """Vertices lying in at least one K_t of g."""
    out = set()
    for clq in maximal_cliques(g):
        if len(clq) >= t:
            out |= clq
    return frozenset(out)


# ---------------------------------------------------------------------------
# isomorphism (exact backtracking; desk scale)


def _refine_colors(g: Graph) -> list[int]:
    colors = list(g.degrees())
    for _ in range(g.n):
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        canon = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [canon[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    ca, cb = _refine_colors(a), _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return False
    n = a.n
    # order a's vertices: rarest color class first, then prefer attachment to mapped part
    freq: dict[int, int] = {}
    for c in ca:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    placed = set()
    while len(order) < n:
        cands = [v for v in range(n) if v not in placed]
        cands.sort(
            key=lambda v: (
                -sum(1 for u in a.neighbors(v) if u in placed),
                freq[ca[v]],
                ca[v],
                v,
            )
        )
        order.append(cands[0])
        placed.add(cands[0])

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(cb[v], []).append(v)

    mapping = [-1] * n
    used = [False] * n

    def match(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in by_color.get(ca[v], ()):
            if used[w]:
                continue
            ok = True
            for u in a.neighbors(v):
                mu = mapping[u]
                if mu >= 0 and not b.has_edge(mu, w):
                    ok = False
                    break
            if ok:
                # non-edges must also map to non-edges
                for u in range(n):
                    mu = mapping[u]
                    if mu >= 0 and not a.has_edge(u, v) and b.has_edge(mu, w):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if match(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return match(0)
