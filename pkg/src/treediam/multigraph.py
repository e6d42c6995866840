"""Finite multigraphs with explicit edge identities, plus the graph-side
primitives: components, induced subgraphs, exact longest simple path, and
Menger-style vertex-disjoint paths with a separator certificate.

Graphs are immutable after construction and safe to share between threads;
every operation in this module is a pure function.
"""

from collections import deque
from dataclasses import dataclass

from .util import check_id, idkey, sorted_ids

_BIG = 1 << 20


class Multigraph:
    """An undirected multigraph.  Loops and parallel edges are allowed,
    every edge carries its own id, and edges may carry labels.

    vertices: iterable of vertex ids (int or str)
    edges:    mapping edge id -> (u, v) endpoint pair, or an iterable of
              (edge id, (u, v)) items
    labels:   optional mapping edge id -> label
    """

    __slots__ = ("_vertices", "_ends", "_labels", "_cache")

    def __init__(self, vertices, edges=(), labels=None):
        vs = frozenset(check_id(v) for v in vertices)
        items = edges.items() if hasattr(edges, "items") else edges
        ends = {}
        for eid, pair in items:
            check_id(eid)
            u, v = pair
            if u not in vs or v not in vs:
                raise ValueError(f"edge {eid!r} has undeclared endpoint")
            if eid in ends:
                raise ValueError(f"duplicate edge id {eid!r}")
            ends[eid] = (u, v) if idkey(u) <= idkey(v) else (v, u)
        labels = dict(labels) if labels else {}
        for eid in labels:
            if eid not in ends:
                raise ValueError(f"label for unknown edge {eid!r}")
        self._vertices = vs
        self._ends = ends
        self._labels = labels
        self._cache = {}

    @property
    def vertices(self):
        return self._vertices

    @property
    def n(self):
        return len(self._vertices)

    def edge_ids(self):
        return sorted_ids(self._ends)

    def edge_count(self):
        return len(self._ends)

    def ends(self, eid):
        return self._ends[eid]

    def has_edge_id(self, eid):
        return eid in self._ends

    def label(self, eid):
        if eid not in self._ends:
            raise KeyError(eid)
        return self._labels.get(eid)

    def labels(self):
        return dict(self._labels)

    def edges(self):
        """(edge id, (u, v)) pairs in canonical id order."""
        return [(e, self._ends[e]) for e in self.edge_ids()]

    def is_loop(self, eid):
        u, v = self._ends[eid]
        return u == v

    def multiplicity(self, u, v):
        """Number of edges whose endpoint pair is {u, v} (u == v counts
        loops at u)."""
        if u not in self._vertices or v not in self._vertices:
            raise ValueError("multiplicity of undeclared vertex")
        key = (u, v) if idkey(u) <= idkey(v) else (v, u)
        return sum(1 for pair in self._ends.values() if pair == key)

    def loops_at(self, v):
        return self.multiplicity(v, v)

    def neighbors(self, v):
        """Distinct neighbors of v through non-loop edges."""
        return set(self._adj()[v])

    def degree(self, v):
        """Incident edge ends at v: loops count twice."""
        d = 0
        for u, w in self._ends.values():
            if u == v:
                d += 1
            if w == v:
                d += 1
        return d

    def simple_pairs(self):
        """The underlying simple adjacency: frozenset pairs {u, v}, u != v."""
        return {frozenset(p) for p in self._ends.values() if p[0] != p[1]}

    def pair_edges(self, u, v):
        """Edge ids between u and v (loops at u when u == v), sorted."""
        key = (u, v) if idkey(u) <= idkey(v) else (v, u)
        return sorted_ids(e for e, p in self._ends.items() if p == key)

    # -- derived structures, built once ---------------------------------

    def _adj(self):
        adj = self._cache.get("adj")
        if adj is None:
            adj = {v: set() for v in self._vertices}
            for u, v in self._ends.values():
                if u != v:
                    adj[u].add(v)
                    adj[v].add(u)
            self._cache["adj"] = adj
        return adj

    def _index(self):
        idx = self._cache.get("index")
        if idx is None:
            vlist = sorted_ids(self._vertices)
            idx = (vlist, {v: i for i, v in enumerate(vlist)})
            self._cache["index"] = idx
        return idx

    def _adj_masks(self):
        masks = self._cache.get("adj_masks")
        if masks is None:
            vlist, vidx = self._index()
            masks = [0] * len(vlist)
            for u, v in self._ends.values():
                if u != v:
                    masks[vidx[u]] |= 1 << vidx[v]
                    masks[vidx[v]] |= 1 << vidx[u]
            self._cache["adj_masks"] = masks
        return masks

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._ends == other._ends
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash(
            (
                self._vertices,
                frozenset(self._ends.items()),
                frozenset(self._labels.items()),
            )
        )

    def __repr__(self):
        return f"Multigraph({self.n} vertices, {len(self._ends)} edges)"


@dataclass(frozen=True)
class PathWitness:
    """A simple path: distinct vertices v_0..v_m and edges e_1..e_m with
    e_i joining v_{i-1} and v_i.  Loops never occur on a path."""

    vertices: tuple
    edges: tuple

    @property
    def length(self):
        return len(self.edges)

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a path with m edges has m + 1 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be pairwise distinct")


def check_path_witness(g, witness):
    """Raise ValueError unless witness is a simple path of g."""
    vs = witness.vertices
    if any(v not in g.vertices for v in vs):
        raise ValueError("path visits an undeclared vertex")
    if len(set(witness.edges)) != len(witness.edges):
        raise ValueError("path repeats an edge")
    for i, e in enumerate(witness.edges):
        if not g.has_edge_id(e):
            raise ValueError(f"unknown edge {e!r}")
        if set(g.ends(e)) != {vs[i], vs[i + 1]}:
            raise ValueError(f"edge {e!r} does not join {vs[i]!r},{vs[i+1]!r}")
    return witness


def _search_longest(g, stop_at=None):
    """Exact longest simple path by DFS with a reachability bound.
    Returns (length, vertex index tuple).  Stops early once a path of
    stop_at edges is found."""
    vlist, _ = g._index()
    n = len(vlist)
    masks = g._adj_masks()
    best_len = 0
    best_path = (0,) if n else ()

    def reach_count(v, allowed):
        seen = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= masks[b.bit_length() - 1] & allowed & ~seen
            seen |= nxt
            frontier = nxt
        return bin(seen).count("1")

    order = sorted(range(n), key=lambda i: -bin(masks[i]).count("1"))
    for start in order:
        if stop_at is not None and best_len >= stop_at:
            break
        stack = [(start, 1 << start, (start,))]
        while stack:
            v, used, path = stack.pop()
            plen = len(path) - 1
            if plen > best_len:
                best_len = plen
                best_path = path
                if stop_at is not None and best_len >= stop_at:
                    break
            # bound: even absorbing every reachable free vertex cannot beat best
            if plen + reach_count(v, ~used) - 1 <= best_len:
                continue
            rest = masks[v] & ~used
            while rest:
                b = rest & -rest
                rest ^= b
                w = b.bit_length() - 1
                stack.append((w, used | (1 << w), path + (w,)))
    return best_len, best_path


def _witness_from_indices(g, idx_path):
    vlist, _ = g._index()
    verts = tuple(vlist[i] for i in idx_path)
    eids = tuple(
        g.pair_edges(verts[i], verts[i + 1])[0] for i in range(len(verts) - 1)
    )
    return PathWitness(verts, eids)


def longest_path_length(g):
    """Edge count of a longest simple path of g.  The null graph has no
    paths at all and raises ValueError."""
    if g.n == 0:
        raise ValueError("null graph has no path length")
    length, _ = _search_longest(g)
    return length


def longest_path_witness(g):
    """A PathWitness attaining longest_path_length(g)."""
    if g.n == 0:
        raise ValueError("null graph has no path length")
    _, idx_path = _search_longest(g)
    return check_path_witness(g, _witness_from_indices(g, idx_path))


def contains_path(g, m):
    """True iff g has a simple path with m edges (m = 0 for any nonnull g)."""
    if g.n == 0:
        raise ValueError("null graph has no paths")
    if m < 0:
        raise ValueError("path length must be nonnegative")
    if m == 0:
        return True
    if m >= g.n:
        return False
    length, _ = _search_longest(g, stop_at=m)
    return length >= m


def connected_components(g):
    """Partition of the vertices into components (loops connect nothing)."""
    adj = g._adj()
    seen = set()
    parts = []
    for v in sorted_ids(g.vertices):
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return tuple(parts)


def induced_subgraph(g, s):
    """The subgraph induced by vertex set s: exactly the edges of g with
    both endpoints in s, labels preserved."""
    s = frozenset(s)
    if not s <= g.vertices:
        raise ValueError("induced set contains undeclared vertices")
    ends = {
        e: p for e, p in g._ends.items() if p[0] in s and p[1] in s
    }
    labels = {e: g._labels[e] for e in ends if e in g._labels}
    return Multigraph(s, ends, labels)


# -- vertex-disjoint paths (Menger certificates) -------------------------


@dataclass(frozen=True)
class MengerCertificate:
    """Either k pairwise vertex-disjoint U-V paths, or a separator W with
    |W| < k that meets every U-V path.  Exactly one field is set."""

    paths: tuple = None
    separator: frozenset = None

    @property
    def kind(self):
        return "paths" if self.paths is not None else "separator"


def _flow_template(g):
    """Static arc arrays for the unit-vertex-capacity flow network:
    vertex i splits into in-node i and out-node n+i; source 2n, sink 2n+1.
    Per-call capacities start from a copy of the template."""
    tpl = g._cache.get("flow_template")
    if tpl is not None:
        return tpl
    vlist, _ = g._index()
    n = len(vlist)
    masks = g._adj_masks()
    to = []
    cap = []
    head = [[] for _ in range(2 * n + 2)]

    def arc(a, b, c):
        head[a].append(len(to))
        to.append(b)
        cap.append(c)
        head[b].append(len(to))
        to.append(a)
        cap.append(0)

    for i in range(n):
        arc(i, n + i, 1)
    for i in range(n):
        m = masks[i]
        while m:
            b = m & -m
            m ^= b
            j = b.bit_length() - 1
            arc(n + i, j, _BIG)
    src_arcs = []
    for i in range(n):
        src_arcs.append(len(to))
        arc(2 * n, i, 0)
    snk_arcs = []
    for i in range(n):
        snk_arcs.append(len(to))
        arc(n + i, 2 * n + 1, 0)
    tpl = (to, cap, head, src_arcs, snk_arcs)
    g._cache["flow_template"] = tpl
    return tpl


def _run_flow(g, umask, vmask, stop_at=None):
    """Edmonds-Karp on the split network.  Returns (value, caps, caps0)
    where caps0 holds this call's initial capacities."""
    to, cap_tpl, head, src_arcs, snk_arcs = _flow_template(g)
    vlist, _ = g._index()
    n = len(vlist)
    caps = list(cap_tpl)
    m = umask
    while m:
        b = m & -m
        m ^= b
        caps[src_arcs[b.bit_length() - 1]] = _BIG
    m = vmask
    while m:
        b = m & -m
        m ^= b
        caps[snk_arcs[b.bit_length() - 1]] = _BIG
    caps0 = list(caps)
    S, T = 2 * n, 2 * n + 1
    flow = 0
    while stop_at is None or flow < stop_at:
        parent = [-1] * (2 * n + 2)
        parent[S] = S
        queue = [S]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            x = queue[qi]
            qi += 1
            for a in head[x]:
                if caps[a] > 0:
                    y = to[a]
                    if parent[y] < 0:
                        parent[y] = a
                        if y == T:
                            found = True
                            break
                        queue.append(y)
        if not found:
            break
        y = T
        while y != S:
            a = parent[y]
            caps[a] -= 1
            caps[a ^ 1] += 1
            y = to[a ^ 1]
        flow += 1
    return flow, caps, caps0


def menger_value(g, U, V):
    """Maximum number of pairwise vertex-disjoint U-V paths.  Cached per
    graph; used heavily by linkedness checks."""
    _, vidx = g._index()
    umask = 0
    for u in U:
        umask |= 1 << vidx[u]
    vmask = 0
    for v in V:
        vmask |= 1 << vidx[v]
    cache = g._cache.setdefault("menger", {})
    key = (umask, vmask)
    val = cache.get(key)
    if val is None:
        val, _, _ = _run_flow(g, umask, vmask)
        cache[key] = val
    return val


def _extract_paths(g, caps, caps0, umask):
    to, _, head, src_arcs, _ = _flow_template(g)
    vlist, _ = g._index()
    n = len(vlist)
    T = 2 * n + 1
    paths = []
    m = umask
    while m:
        b = m & -m
        m ^= b
        i = b.bit_length() - 1
        if caps0[src_arcs[i]] - caps[src_arcs[i]] <= 0:
            continue
        seq = [i]
        cur = i
        while True:
            out = n + cur
            nxt = None
            for a in head[out]:
                if caps0[a] - caps[a] > 0:
                    nxt = to[a]
                    break
            if nxt is None or nxt == T:
                break
            seq.append(nxt)
            cur = nxt
        paths.append(seq)
    paths.sort(key=lambda s: [idkey(vlist[i]) for i in s])
    out = []
    for seq in paths:
        verts = tuple(vlist[i] for i in seq)
        eids = tuple(
            g.pair_edges(verts[i], verts[i + 1])[0]
            for i in range(len(verts) - 1)
        )
        out.append(PathWitness(verts, eids))
    return tuple(out)


def _extract_separator(g, caps):
    to, _, head, _, _ = _flow_template(g)
    vlist, _ = g._index()
    n = len(vlist)
    S = 2 * n
    reach = [False] * (2 * n + 2)
    reach[S] = True
    queue = [S]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for a in head[x]:
            if caps[a] > 0 and not reach[to[a]]:
                reach[to[a]] = True
                queue.append(to[a])
    return frozenset(vlist[i] for i in range(n) if reach[i] and not reach[n + i])


def _single_path(g, U, V):
    """k = 1 shortcut: one BFS.  When U cannot reach V the empty set
    already meets every U-V path (there are none)."""
    adj = g._adj()
    parent = {}
    queue = []
    for u in sorted_ids(U):
        parent[u] = None
        queue.append(u)
    qi = 0
    hit = None
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x in V:
            hit = x
            break
        for w in sorted_ids(adj[x]):
            if w not in parent:
                parent[w] = x
                queue.append(w)
    if hit is None:
        return MengerCertificate(separator=frozenset())
    verts = [hit]
    while parent[verts[-1]] is not None:
        verts.append(parent[verts[-1]])
    verts.reverse()
    eids = tuple(
        g.pair_edges(verts[i], verts[i + 1])[0] for i in range(len(verts) - 1)
    )
    return MengerCertificate(paths=(PathWitness(tuple(verts), eids),))


def disjoint_paths(g, U, V, k):
    """Menger certificate: k vertex-disjoint U-V paths, or a separator of
    size < k meeting every U-V path.  A vertex of U & V is a length-0
    path.  Disjoint means fully vertex-disjoint, endpoints included."""
    U = frozenset(U)
    V = frozenset(V)
    if not (U <= g.vertices and V <= g.vertices):
        raise ValueError("terminal sets must be vertices of the graph")
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > len(U) or k > len(V):
        raise ValueError("insufficient terminals")
    if k == 1:
        return _single_path(g, U, V)
    _, vidx = g._index()
    umask = 0
    for u in U:
        umask |= 1 << vidx[u]
    vmask = 0
    for v in V:
        vmask |= 1 << vidx[v]
    flow, caps, caps0 = _run_flow(g, umask, vmask, stop_at=k)
    if flow >= k:
        return MengerCertificate(paths=_extract_paths(g, caps, caps0, umask))
    return MengerCertificate(separator=_extract_separator(g, caps))
