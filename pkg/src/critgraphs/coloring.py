"""Exact deciders for coloring, list coloring, the paint game, and Alon-Tarsi orientations.

Everything here is desk-scale and exhaustive.  Each decider takes an explicit
budget and raises BudgetExceeded instead of silently truncating the search.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, _mask_bits

FVector = Sequence[int]


def _check_f(g: Graph, f: FVector) -> tuple[int, ...]:
    f = tuple(f)
    if len(f) != g.n:
        raise PreconditionError(
            "f has %d entries for a graph on %d vertices" % (len(f), g.n)
        )
    if any(x < 0 for x in f):
        raise PreconditionError("f entries must be nonnegative", witness=f)
    return f


# ---------------------------------------------------------------------------
# chromatic number


def _colorable(g: Graph, k: int) -> bool:
    if k >= g.n:
        return True
    n = g.n
    color = [-1] * n
    adj = [g.adj_mask(v) for v in range(n)]

    def pick() -> int:
        # max saturation, then max degree among uncolored
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if color[v] >= 0:
                continue
            seen = set()
            for u in _mask_bits(adj[v]):
                if color[u] >= 0:
                    seen.add(color[u])
            key = (len(seen), g.degree(v))
            if key > best_key:
                best, best_key = v, key
        return best

    def bt(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        forbidden = set()
        for u in _mask_bits(adj[v]):
            if color[u] >= 0:
                forbidden.add(color[u])
        # trying more than one brand-new color is a symmetric repeat
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[v] = c
            if bt(done + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return bt(0, 0)


def chromatic_number(g: Graph, max_vertices: int = 16) -> int:
    if g.n > max_vertices:
        raise BudgetExceeded("chromatic_number limited to %d vertices" % max_vertices)
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    # greedy clique gives the lower bound, greedy coloring the upper
    order = sorted(range(g.n), key=g.degree, reverse=True)
    clique = []
    cmask = 0
    for v in order:
        if cmask & ~g.adj_mask(v) == 0:
            clique.append(v)
            cmask |= 1 << v
    colors: dict[int, int] = {}
    for v in order:
        taken = {colors[u] for u in g.neighbors(v) if u in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    hi = max(colors.values()) + 1
    for k in range(len(clique), hi):
        if _colorable(g, k):
            return k
    return hi


# ---------------------------------------------------------------------------
# choosability

# A graph fails f-choosability iff some assignment with |L(v)| = f(v) admits no
# proper coloring.  The search below enumerates assignments as multisets of
# color classes (class = set of vertices whose list holds that color), using
# two reductions that lose no witnesses: classes may be assumed connected
# (split a disconnected class into fresh colors), and classes of size 1 may be
# assumed away (a color private to v is usable at v iff the rest of the graph
# colors at all, so such a witness restricts to one on G - v).


def _independent_subsets(g: Graph, cmask: int):
    subs = [0]
    verts = list(_mask_bits(cmask))
    for v in verts:
        bit = 1 << v
        avoid = g.adj_mask(v)
        subs += [s | bit for s in subs if s & avoid == 0]
    return subs


def _eliminable(g: Graph, umask: int, r: Sequence[int]) -> bool:
    # repeatedly discard a vertex whose remaining demand beats its degree in U;
    # if U empties, any completion of the partial assignment is colorable
    changed = True
    while umask and changed:
        changed = False
        for v in _mask_bits(umask):
            if r[v] >= bin(g.adj_mask(v) & umask).count("1") + 1:
                umask &= ~(1 << v)
                changed = True
    return umask == 0


def _connected_supersets(g: Graph, pivot: int, allowed: int):
    """All connected vertex sets containing pivot inside the allowed mask."""
    out = []

    def grow(cur: int, frontier: int, forbidden: int):
        out.append(cur)
        ext = frontier & allowed & ~cur & ~forbidden
        seen = 0
        for v in _mask_bits(ext):
            bit = 1 << v
            grow(cur | bit, frontier | g.adj_mask(v), forbidden | seen)
            seen |= bit
        return

    grow(1 << pivot, g.adj_mask(pivot), 0)
    return out


def _search_classes(g: Graph, mask: int, f: tuple[int, ...]):
    """Find a multiset of connected color classes of size >= 2, with each
    vertex v in exactly f(v) of them, admitting no proper coloring.  Returns
    the class list or None."""
    r = [f[v] if mask >> v & 1 else 0 for v in range(g.n)]

    def dfs(reached: frozenset, classes: list, prev: tuple):
        demand = mask
        pivot = -1
        for v in _mask_bits(mask):
            if r[v] > 0:
                pivot = v
                break
        if pivot < 0:
            if mask in reached:
                return None
            return list(classes)
        if any(_eliminable(g, mask & ~m, r) for m in reached):
            return None
        active = 0
        for v in _mask_bits(mask):
            if r[v] > 0:
                active |= 1 << v
        cands = [c for c in _connected_supersets(g, pivot, active)
                 if bin(c).count("1") >= 2]
        cands.sort(key=lambda c: (-bin(c).count("1"), c))
        for c in cands:
            if prev[0] == pivot and c < prev[1]:
                continue
            for v in _mask_bits(c):
                r[v] -= 1
            grown = reached.union(m | s for m in reached
                                  for s in _independent_subsets(g, c))
            res = dfs(grown, classes + [c], (pivot, c))
            if res is not None:
                return res
            for v in _mask_bits(c):
                r[v] += 1
        return None

    return dfs(frozenset([0]), [], (-1, 0))


def _fresh_pad(witness: dict, v: int, count: int) -> dict:
    top = max((c for lst in witness.values() for c in lst), default=-1) + 1
    out = dict(witness)
    out[v] = tuple(range(top, top + count))
    return out


def _not_choosable(g: Graph, f: tuple[int, ...], mask: int, memo: dict):
    if mask == 0:
        return None
    if mask in memo:
        return memo[mask]
    result = None
    for v in _mask_bits(mask):
        if f[v] == 0:
            result = {v: ()}
            for u in _mask_bits(mask & ~(1 << v)):
                result = _fresh_pad(result, u, f[u])
            memo[mask] = result
            return result

    comps = []
    todo = mask
    while todo:
        v = (todo & -todo).bit_length() - 1
        comp, frontier = 0, 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            for u in _mask_bits(frontier):
                nxt |= g.adj_mask(u) & mask & ~comp
            frontier = nxt
        comps.append(comp)
        todo &= ~comp
    if len(comps) > 1:
        for comp in comps:
            sub = _not_choosable(g, f, comp, memo)
            if sub is not None:
                result = dict(sub)
                for u in _mask_bits(mask & ~comp):
                    result = _fresh_pad(result, u, f[u])
                memo[mask] = result
                return result
        memo[mask] = None
        return None

    if all(f[v] >= bin(g.adj_mask(v) & mask).count("1") + 1 for v in _mask_bits(mask)):
        memo[mask] = None
        return None

    classes = _search_classes(g, mask, f)
    if classes is not None:
        result = {}
        for v in _mask_bits(mask):
            result[v] = tuple(i for i, c in enumerate(classes) if c >> v & 1)
        memo[mask] = result
        return result

    for v in _mask_bits(mask):
        sub = _not_choosable(g, f, mask & ~(1 << v), memo)
        if sub is not None:
            result = _fresh_pad(dict(sub), v, f[v])
            memo[mask] = result
            return result
    memo[mask] = None
    return None


def is_f_choosable(
    g: Graph, f: FVector, max_vertices: int = 10
) -> tuple[bool, Optional[dict[int, tuple[int, ...]]]]:
    """Decide whether every assignment of color lists of sizes f admits a
    proper coloring.  On failure the second item is a bad assignment, mapping
    each vertex to its list (colors are arbitrary integer labels)."""
    f = _check_f(g, f)
    if g.n > max_vertices:
        raise BudgetExceeded("is_f_choosable limited to %d vertices" % max_vertices)
    witness = _not_choosable(g, f, (1 << g.n) - 1, {})
    if witness is None:
        return True, None
    return False, witness


# ---------------------------------------------------------------------------
# paintability


def is_f_paintable(g: Graph, f: FVector, max_vertices: int = 8) -> bool:
    """Decide the paint game: Lister picks S, Painter keeps an independent
    I subseteq S, everyone else in S burns a token.  Painter wins when the
    graph empties before any vertex runs dry."""
    f = _check_f(g, f)
    if g.n > max_vertices:
        raise BudgetExceeded("is_f_paintable limited to %d vertices" % max_vertices)
    adj = [g.adj_mask(v) for v in range(g.n)]
    memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def comps_of(mask: int) -> list[int]:
        out, todo = [], mask
        while todo:
            v = (todo & -todo).bit_length() - 1
            comp, frontier = 0, 1 << v
            while frontier:
                comp |= frontier
                nxt = 0
                for u in _mask_bits(frontier):
                    nxt |= adj[u] & mask & ~comp
                frontier = nxt
            out.append(comp)
            todo &= ~comp
        return out

    def independent_in(smask: int) -> list[int]:
        subs = [0]
        for v in _mask_bits(smask):
            bit = 1 << v
            subs += [s | bit for s in subs if s & adj[v] == 0]
        return subs

    def win(mask: int, tok: tuple[int, ...]) -> bool:
        if mask == 0:
            return True
        for v in _mask_bits(mask):
            if tok[v] <= 0:
                return False
        if all(tok[v] >= bin(adj[v] & mask).count("1") + 1 for v in _mask_bits(mask)):
            return True
        key = (mask, tok)
        if key in memo:
            return memo[key]
        comps = comps_of(mask)
        if len(comps) > 1:
            res = all(win(c, tok) for c in comps)
            memo[key] = res
            return res
        sets = [s for s in range(1, 1 << g.n) if s & mask == s and s]
        sets.sort(key=lambda s: -bin(s).count("1"))
        res = True
        for s in sets:
            answered = False
            for i in sorted(independent_in(s), key=lambda x: -bin(x).count("1")):
                ntok = list(tok)
                for v in _mask_bits(s & ~i):
                    ntok[v] -= 1
                if win(mask & ~i, tuple(ntok)):
                    answered = True
                    break
            if not answered:
                res = False
                break
        memo[key] = res
        return res

    return win((1 << g.n) - 1, f)


# ---------------------------------------------------------------------------
# orientations and Alon-Tarsi


@dataclass(frozen=True)
class Orientation:
    base: Graph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((int(u), int(v)) for u, v in self.arcs))
        covered = set()
        for u, v in self.arcs:
            e = frozenset((u, v))
            if not self.base.has_edge(u, v):
                raise PreconditionError("arc (%d,%d) is not an edge of the base" % (u, v))
            if e in covered:
                raise PreconditionError("edge {%d,%d} oriented twice" % (u, v))
            covered.add(e)
        if len(covered) != self.base.m:
            raise PreconditionError(
                "orientation covers %d of %d edges" % (len(covered), self.base.m)
            )

    def out_degrees(self) -> tuple[int, ...]:
        d = [0] * self.base.n
        for u, _ in self.arcs:
            d[u] += 1
        return tuple(d)


def ee_eo(d: Orientation, max_arcs: int = 22) -> tuple[int, int]:
    """Count spanning eulerian subdigraphs (in-degree = out-degree everywhere),
    split by parity of arc count.  The empty subdigraph always counts as even."""
    arcs = d.arcs
    m = len(arcs)
    if m > max_arcs:
        raise BudgetExceeded("ee_eo limited to %d arcs" % max_arcs)
    last = {}
    for i, (u, v) in enumerate(arcs):
        last[u] = i
        last[v] = i
    # frontier DP over arcs; key = imbalances of vertices with arcs still ahead
    states: dict[tuple[tuple[int, int], ...], tuple[int, int]] = {(): (1, 0)}
    for i, (u, v) in enumerate(arcs):
        nxt: dict[tuple, tuple[int, int]] = {}
        for key, (e, o) in states.items():
            imb = dict(key)
            for take in (False, True):
                cur = dict(imb)
                ce, co = (e, o) if not take else (o, e)
                if take:
                    cur[u] = cur.get(u, 0) + 1
                    cur[v] = cur.get(v, 0) - 1
                ok = True
                for w in (u, v):
                    if last[w] == i:
                        if cur.pop(w, 0) != 0:
                            ok = False
                            break
                if not ok:
                    continue
                nk = tuple(sorted(cur.items()))
                pe, po = nxt.get(nk, (0, 0))
                nxt[nk] = (pe + ce, po + co)
        states = nxt
    return states.get((), (0, 0))


def ee_eo_poly(d: Orientation, max_arcs: int = 22) -> int:
    """EE - EO computed independently: it is, up to the sign of the number of
    descending arcs, the coefficient of prod x_v^outdeg(v) in
    prod over edges u<v of (x_u - x_v)."""
    if len(d.arcs) > max_arcs:
        raise BudgetExceeded("ee_eo_poly limited to %d arcs" % max_arcs)
    target = d.out_degrees()
    sign = (-1) ** sum(1 for u, v in d.arcs if u > v)
    poly: dict[tuple[int, ...], int] = {tuple([0] * d.base.n): 1}
    for u, v in sorted((min(a, b), max(a, b)) for a, b in d.arcs):
        nxt: dict[tuple[int, ...], int] = {}
        for expo, coef in poly.items():
            for w, s in ((u, coef), (v, -coef)):
                if expo[w] + 1 > target[w]:
                    continue
                ne = list(expo)
                ne[w] += 1
                ne = tuple(ne)
                nxt[ne] = nxt.get(ne, 0) + s
        poly = {e: c for e, c in nxt.items() if c}
    return sign * poly.get(target, 0)


@dataclass(frozen=True)
class ATCertificate:
    orientation: Orientation
    ee: int
    eo: int


def is_f_AT(g: Graph, f: FVector, max_edges: int = 20) -> Optional[ATCertificate]:
    """Search for an orientation with d+(v) <= f(v)-1 and EE != EO.  Edges are
    branched in lexicographic order, so the returned certificate is the first
    such orientation in that order; None means a completed exhaustive search."""
    f = _check_f(g, f)
    if g.m > max_edges:
        raise BudgetExceeded("is_f_AT limited to %d edges" % max_edges)
    caps = [f[v] - 1 for v in range(g.n)]
    if any(c < 0 for c in caps):
        return None
    edges = list(g.edges())
    m = len(edges)
    if sum(caps) < m:
        return None
    out = [0] * g.n
    arcs: list[tuple[int, int]] = []

    def dfs(i: int, slack: int) -> Optional[ATCertificate]:
        # slack = total unused out-capacity; every remaining edge spends 1
        if slack < m - i:
            return None
        if i == m:
            o = Orientation(g, tuple(arcs))
            ee, eo = ee_eo(o)
            if ee != eo:
                return ATCertificate(o, ee, eo)
            return None
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if out[a] < caps[a]:
                out[a] += 1
                arcs.append((a, b))
                res = dfs(i + 1, slack - 1)
                arcs.pop()
                out[a] -= 1
                if res is not None:
                    return res
        return None

    return dfs(0, sum(caps))


def at_number(g: Graph, max_edges: int = 20) -> int:
    """Least k such that the constant vector f = k is f-AT.  Bounded above by
    max degree + 1, where an acyclic orientation always certifies."""
    if g.m > max_edges:
        raise BudgetExceeded("at_number limited to %d edges" % max_edges)
    hi = (max(g.degrees()) if g.n else 0) + 1
    for k in range(1, hi + 1):
        if is_f_AT(g, [k] * g.n, max_edges) is not None:
            return k
    raise AssertionError("no orientation certified below max degree + 2")


@dataclass(frozen=True)
class ChainReport:
    f_at: bool
    f_paintable: bool
    f_choosable: bool

    @property
    def consistent(self) -> bool:
        return (not self.f_at or self.f_paintable) and (
            not self.f_paintable or self.f_choosable
        )


def implication_chain(
    g: Graph,
    f: FVector,
    max_vertices: int = 8,
    max_edges: int = 20,
) -> ChainReport:
    """Evaluate all three deciders on the same input.  AT implies paintable
    implies choosable; a report with consistent == False is a correctness bug
    in one of the engines, never a property of the graph."""
    at = is_f_AT(g, f, max_edges) is not None
    paint = is_f_paintable(g, f, max_vertices)
    choose = is_f_choosable(g, f, max_vertices)[0]
    return ChainReport(at, paint, choose)


# ---------------------------------------------------------------------------
# criticality

# All three parameters are monotone under subgraphs, so "every proper subgraph"
# reduces to single edge deletions, plus the isolated-vertex case which no
# edge deletion covers.


def _no_isolated(g: Graph) -> bool:
    return g.n == 1 or all(g.degree(v) > 0 for v in range(g.n))


def is_k_critical(g: Graph, k: int, max_vertices: int = 16) -> bool:
    if g.n == 0:
        return False
    if chromatic_number(g, max_vertices) != k:
        return False
    if not _no_isolated(g):
        return False
    return all(
        chromatic_number(g.remove_edge(u, v), max_vertices) < k for u, v in g.edges()
    )


def is_k_list_critical(g: Graph, k: int, max_vertices: int = 10) -> bool:
    if g.n == 0:
        return False
    lists = [k - 1] * g.n
    if k < 1 or is_f_choosable(g, lists, max_vertices)[0]:
        return False
    if not _no_isolated(g):
        return False
    return all(
        is_f_choosable(g.remove_edge(u, v), lists, max_vertices)[0]
        for u, v in g.edges()
    )


def is_k_AT_critical(g: Graph, k: int, max_edges: int = 20) -> bool:
    if g.n == 0:
        return False
    if at_number(g, max_edges) != k:
        return False
    if not _no_isolated(g):
        return False
    return all(at_number(g.remove_edge(u, v), max_edges) < k for u, v in g.edges())
