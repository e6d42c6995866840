"""Embeddings between multigraphs: subgraph and induced-subgraph modes,
optionally respecting designated roots, vertex colors, and edge-label
dominance under a quasi-order.  Includes multiset dominance and the
good-pair scanner over graph sequences.

An embedding is an injective vertex map plus an injective edge map that
preserves incidence.  Induced mode requires the edge map to hit every
host edge between image vertices (per-pair multiplicities must agree).
"""

from dataclasses import dataclass

from .multigraph import Multigraph
from .util import idkey, sorted_ids


class QuasiOrder:
    """A reflexive transitive comparison on edge labels.

    universe may be None (any label admitted) or a finite set; labels
    outside a finite universe are rejected when the order is used."""

    def __init__(self, leq, universe=None, name="custom"):
        self.leq = leq
        self.universe = None if universe is None else frozenset(universe)
        self.name = name

    @classmethod
    def trivial(cls):
        """The one-element order: every label is identified."""
        return cls(lambda a, b: True, name="trivial")

    @classmethod
    def natural(cls):
        """Numbers and strings under their usual comparison."""
        return cls(lambda a, b: a <= b, name="natural")

    @classmethod
    def discrete(cls):
        """Labels comparable only to themselves."""
        return cls(lambda a, b: a == b, name="discrete")

    def admits(self, label):
        return self.universe is None or label in self.universe

    def spot_check(self, labels):
        """Raise unless reflexivity and transitivity hold on the sample."""
        labels = list(labels)
        for a in labels:
            if not self.leq(a, a):
                raise ValueError(f"quasi-order is not reflexive at {a!r}")
        for a in labels:
            for b in labels:
                for c in labels:
                    if self.leq(a, b) and self.leq(b, c) and not self.leq(a, c):
                        raise ValueError(
                            f"quasi-order is not transitive at {(a, b, c)!r}"
                        )

    def __repr__(self):
        return f"QuasiOrder({self.name})"


@dataclass(frozen=True)
class LabeledRootedGraph:
    """A multigraph with a designated (possibly empty) root vertex set
    and an optional vertex coloring."""

    graph: Multigraph
    roots: frozenset = frozenset()
    colors: tuple = ()  # stored as sorted (vertex, color) items

    def __init__(self, graph, roots=(), colors=None):
        roots = frozenset(roots)
        if not roots <= graph.vertices:
            raise ValueError("roots must be vertices of the graph")
        colors = dict(colors) if colors else {}
        if not set(colors) <= graph.vertices:
            raise ValueError("colored vertices must belong to the graph")
        items = tuple(sorted(colors.items(), key=lambda kv: idkey(kv[0])))
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "colors", items)

    def color(self, v):
        for w, c in self.colors:
            if w == v:
                return c
        return None


def as_rooted(x):
    return x if isinstance(x, LabeledRootedGraph) else LabeledRootedGraph(x)


@dataclass(frozen=True)
class Embedding:
    """vertex_map and edge_map are injective and incidence-preserving."""

    vertex_map: tuple
    edge_map: tuple

    @classmethod
    def of(cls, vmap, emap):
        return cls(
            tuple(sorted(vmap.items(), key=lambda kv: idkey(kv[0]))),
            tuple(sorted(emap.items(), key=lambda kv: idkey(kv[0]))),
        )

    def vertex(self, v):
        return dict(self.vertex_map)[v]

    def edge(self, e):
        return dict(self.edge_map)[e]


def _dominance_match(items_a, items_b, leq):
    """Injective assignment of every item of items_a to a dominating item
    of items_b (bipartite augmenting paths); None when impossible."""
    match_b = [None] * len(items_b)

    def extend(i, visited):
        for j, b in enumerate(items_b):
            if j in visited or not leq(items_a[i], b):
                continue
            visited.add(j)
            if match_b[j] is None or extend(match_b[j], visited):
                match_b[j] = i
                return True
        return False

    for i in range(len(items_a)):
        if not extend(i, set()):
            return None
    out = [None] * len(items_a)
    for j, i in enumerate(match_b):
        if i is not None:
            out[i] = j
    return out


def multiset_dominates(a, b, q=None):
    """True iff there is an injection of multiset a into multiset b that
    is pointwise dominating under the quasi-order q."""
    a = list(a)
    b = list(b)
    if q is None:
        q = QuasiOrder.trivial()
    if len(a) > len(b):
        return False
    return _dominance_match(a, b, q.leq) is not None


def _view(g):
    """Dense per-pair data for the backtracking search, cached on g."""
    view = g._cache.get("embed_view")
    if view is None:
        vlist = sorted_ids(g.vertices)
        vidx = {v: i for i, v in enumerate(vlist)}
        n = len(vlist)
        mult = [[0] * n for _ in range(n)]
        pair_ids = {}
        for e in g.edge_ids():
            u, w = g.ends(e)
            i, j = sorted((vidx[u], vidx[w]))
            mult[i][j] += 1
            mult[j][i] = mult[i][j]
            pair_ids.setdefault((i, j), []).append(e)
        deg = [sum(mult[i]) + mult[i][i] for i in range(n)]
        view = (vlist, vidx, mult, pair_ids, deg)
        g._cache["embed_view"] = view
    return view


def _pair_ok(cnt_x, labels_x, cnt_y, labels_y, induced, use_labels, leq):
    if induced:
        if cnt_x != cnt_y:
            return False
    elif cnt_x > cnt_y:
        return False
    if use_labels and cnt_x:
        return _dominance_match(labels_x, labels_y, leq) is not None
    return True


def find_embedding(x, y, mode="subgraph", respect=(), order=None):
    """Search for an embedding of x into y.

    mode is "subgraph" or "induced"; respect is any subset of
    {"roots", "colors", "labels"}; order is the QuasiOrder used for label
    dominance (default: the trivial one-element order).  Returns an
    Embedding witness or None; the search is exhaustive."""
    if mode not in ("subgraph", "induced"):
        raise ValueError(f"unknown mode {mode!r}")
    respect = frozenset(respect)
    if not respect <= {"roots", "colors", "labels"}:
        raise ValueError(f"unknown respect flags {sorted(respect)!r}")
    x = as_rooted(x)
    y = as_rooted(y)
    induced = mode == "induced"
    use_roots = "roots" in respect
    use_colors = "colors" in respect
    use_labels = "labels" in respect
    if order is None:
        order = QuasiOrder.trivial()
    gx, gy = x.graph, y.graph
    if use_labels and order.universe is not None:
        for g in (gx, gy):
            for e in g.edge_ids():
                if not order.admits(g.label(e)):
                    raise ValueError(f"label {g.label(e)!r} not in quasi-order")
    if gx.n > gy.n:
        return None
    if use_roots and len(x.roots) != len(y.roots):
        return None
    vx, xidx, mx, pair_x, degx = _view(gx)
    vy, yidx, my, pair_y, degy = _view(gy)
    leq = order.leq

    def pair_labels(g, pair_ids, i, j):
        key = (i, j) if i <= j else (j, i)
        return [g.label(e) for e in pair_ids.get(key, ())]

    x_root_idx = {xidx[v] for v in x.roots}
    y_root_idx = {yidx[v] for v in y.roots}
    x_order = sorted(range(gx.n), key=lambda i: (-degx[i], idkey(vx[i])))
    y_cands = sorted(range(gy.n), key=lambda j: (degy[j], idkey(vy[j])))
    assigned = {}

    def feasible(i, j):
        if use_roots and (i in x_root_idx) != (j in y_root_idx):
            return False
        if use_colors and x.color(vx[i]) != y.color(vy[j]):
            return False
        if not induced and degx[i] > degy[j]:
            return False
        if not _pair_ok(
            mx[i][i],
            pair_labels(gx, pair_x, i, i),
            my[j][j],
            pair_labels(gy, pair_y, j, j),
            induced,
            use_labels,
            leq,
        ):
            return False
        for i2, j2 in assigned.items():
            if not _pair_ok(
                mx[i][i2],
                pair_labels(gx, pair_x, i, i2),
                my[j][j2],
                pair_labels(gy, pair_y, j, j2),
                induced,
                use_labels,
                leq,
            ):
                return False
        return True

    def search(pos):
        if pos == len(x_order):
            return True
        i = x_order[pos]
        for j in y_cands:
            if j in assigned.values():
                continue
            if feasible(i, j):
                assigned[i] = j
                if search(pos + 1):
                    return True
                del assigned[i]
        return False

    if not search(0):
        return None
    vmap = {vx[i]: vy[j] for i, j in assigned.items()}
    emap = {}
    for (i, i2), ids_x in pair_x.items():
        j, j2 = assigned[i], assigned[i2]
        key = (j, j2) if j <= j2 else (j2, j)
        ids_y = pair_y[key]
        if use_labels:
            match = _dominance_match(
                [gx.label(e) for e in ids_x], [gy.label(e) for e in ids_y], leq
            )
            for a, b in enumerate(match):
                emap[ids_x[a]] = ids_y[b]
        else:
            for a, e in enumerate(ids_x):
                emap[e] = ids_y[a]
    return Embedding.of(vmap, emap)


def check_embedding(x, y, emb, mode="subgraph", respect=(), order=None):
    """Verify every embedding invariant directly; returns True or raises."""
    x = as_rooted(x)
    y = as_rooted(y)
    respect = frozenset(respect)
    if order is None:
        order = QuasiOrder.trivial()
    gx, gy = x.graph, y.graph
    vmap = dict(emb.vertex_map)
    emap = dict(emb.edge_map)
    if set(vmap) != gx.vertices or not set(vmap.values()) <= gy.vertices:
        raise AssertionError("vertex map domain or range is wrong")
    if len(set(vmap.values())) != len(vmap):
        raise AssertionError("vertex map is not injective")
    if set(emap) != set(gx.edge_ids()):
        raise AssertionError("edge map must cover exactly the edges of x")
    if len(set(emap.values())) != len(emap):
        raise AssertionError("edge map is not injective")
    for e, f in emap.items():
        u, v = gx.ends(e)
        if {vmap[u], vmap[v]} != set(gy.ends(f)):
            raise AssertionError(f"edge {e!r} does not preserve incidence")
        if "labels" in respect and not order.leq(gx.label(e), gy.label(f)):
            raise AssertionError(f"label of {e!r} is not dominated")
    if mode == "induced":
        for u in gx.vertices:
            for v in gx.vertices:
                if gx.multiplicity(u, v) != gy.multiplicity(vmap[u], vmap[v]):
                    raise AssertionError("induced multiplicity mismatch")
    if "roots" in respect:
        if {vmap[v] for v in x.roots} != set(y.roots):
            raise AssertionError("roots are not mapped onto roots")
    if "colors" in respect:
        for v in gx.vertices:
            if x.color(v) != y.color(vmap[v]):
                raise AssertionError("colors are not preserved")
    return True


def good_pair_scan(seq, mode="subgraph", respect=(), order=None):
    """First (i, j), 1-based, with i < j and seq[i] embedding into
    seq[j]; pairs are scanned in increasing j then increasing i.  None
    when the sequence is an antichain."""
    seq = list(seq)
    for j in range(1, len(seq)):
        for i in range(j):
            if find_embedding(seq[i], seq[j], mode, respect, order) is not None:
                return (i + 1, j + 1)
    return None
