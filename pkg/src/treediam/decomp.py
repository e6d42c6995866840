"""Tree-decompositions of multigraphs: validation, width and diameter,
adhesions, minimal separator families along tree paths, linkedness,
shortness, and combination of per-component decompositions.

Decompositions are immutable values; every operation is pure.
"""

from dataclasses import dataclass
from itertools import combinations

from . import trees
from .multigraph import Multigraph, menger_value
from .util import check_id, idkey, sorted_ids


class TreeDecomposition:
    """A finite tree plus one bag of host vertices per tree node.

    The constructor checks well-formedness only (ids, references); the
    semantic conditions (tree-ness, coverage, path intersection) are the
    business of validate(), so broken decompositions can be built and
    reported on.
    """

    __slots__ = ("host", "nodes", "tree_edges", "bags", "_cache")

    def __init__(self, host, nodes, tree_edges, bags):
        if not isinstance(host, Multigraph):
            raise TypeError("host must be a Multigraph")
        nodes = frozenset(check_id(v) for v in nodes)
        if not nodes:
            raise ValueError("a decomposition needs at least one tree node")
        edges = set()
        for e in tree_edges:
            e = frozenset(e)
            if len(e) != 2 or not e <= nodes:
                raise ValueError(f"bad tree edge {set(e)!r}")
            edges.add(e)
        bags = {v: frozenset(bags[v]) for v in bags}
        if set(bags) != set(nodes):
            raise ValueError("bags must be keyed by exactly the tree nodes")
        for v, bag in bags.items():
            if not bag <= host.vertices:
                raise ValueError(f"bag of node {v!r} leaves the host graph")
        self.host = host
        self.nodes = nodes
        self.tree_edges = frozenset(edges)
        self.bags = bags
        self._cache = {}

    def bag(self, v):
        return self.bags[v]

    def adjacency(self):
        adj = self._cache.get("adj")
        if adj is None:
            adj = trees.adjacency(self.nodes, self.tree_edges)
            self._cache["adj"] = adj
        return adj

    def tree_path(self, u, v):
        return trees.tree_path(self.adjacency(), u, v)

    def replace_tree(self, tree_edges):
        """Same host and bags on a rewired tree over the same node set."""
        return TreeDecomposition(self.host, self.nodes, tree_edges, self.bags)

    def __eq__(self, other):
        if not isinstance(other, TreeDecomposition):
            return NotImplemented
        return (
            self.host == other.host
            and self.nodes == other.nodes
            and self.tree_edges == other.tree_edges
            and self.bags == other.bags
        )

    def __hash__(self):
        return hash((self.nodes, self.tree_edges, frozenset(self.bags.items())))

    def __repr__(self):
        return (
            f"TreeDecomposition({len(self.nodes)} nodes, "
            f"width {width(self)})"
        )


@dataclass(frozen=True)
class Adhesion:
    """A tree edge together with the intersection of its endpoint bags."""

    edge: frozenset
    set: frozenset


@dataclass(frozen=True)
class SeparatorFamily:
    """The inclusion-minimal sets among the bags and adhesions along the
    tree path from u to v (repeats identified)."""

    u: object
    v: object
    sets: frozenset

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, s):
        return frozenset(s) in self.sets

    def min_size(self):
        return min(len(s) for s in self.sets)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    condition: str = None
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class LinkedCheck:
    ok: bool
    witness: tuple = None  # (u, v, U, V) when not linked

    def __bool__(self):
        return self.ok


def validate(d):
    """Check the four decomposition invariants in order and report the
    first violation: tree-ness, vertex coverage, edge coverage, and the
    path intersection condition (witnessed by a (v0, vi, vm) triple)."""
    if not trees.is_tree(d.nodes, d.tree_edges):
        return ValidationReport(False, "not_a_tree", None)
    covered = frozenset().union(*d.bags.values()) if d.bags else frozenset()
    for x in sorted_ids(d.host.vertices):
        if x not in covered:
            return ValidationReport(False, "vertex_uncovered", x)
    bag_list = list(d.bags.values())
    for eid in d.host.edge_ids():
        u, v = d.host.ends(eid)
        if not any(u in b and v in b for b in bag_list):
            return ValidationReport(False, "edge_uncovered", eid)
    adj = d.adjacency()
    for x in sorted_ids(d.host.vertices):
        holders = {n for n in d.nodes if x in d.bags[n]}
        start = min(holders, key=idkey)
        seen = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for w in adj[n]:
                if w in holders and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != holders:
            v0 = start
            vm = min(holders - seen, key=idkey)
            path = trees.tree_path(adj, v0, vm)
            vi = next(n for n in path if x not in d.bags[n])
            return ValidationReport(False, "path_intersection", (v0, vi, vm))
    return ValidationReport(True)


def width(d):
    """Largest bag size minus one."""
    return max(len(b) for b in d.bags.values()) - 1


def diameter(d):
    """Diameter of the decomposition tree, in edges."""
    return trees.diameter(d.adjacency())


def adhesion(d, edge):
    u, v = tuple(edge)
    return d.bags[u] & d.bags[v]


def adhesions(d):
    """Map from tree edge to its adhesion."""
    return {e: adhesion(d, e) for e in d.tree_edges}


def _minimal_sets(sets):
    distinct = set(sets)
    return frozenset(
        s for s in distinct if not any(t < s for t in distinct)
    )


def separator_family(d, u, v):
    """V_T(u, v): minimal sets among the bags of the u-v path nodes and
    the adhesions of its edges.  u == v yields just {bag(u)}."""
    if u not in d.nodes or v not in d.nodes:
        raise ValueError("separator_family endpoints must be tree nodes")
    path = d.tree_path(u, v)
    sets = [d.bags[n] for n in path]
    sets += [d.bags[path[i]] & d.bags[path[i + 1]] for i in range(len(path) - 1)]
    return SeparatorFamily(u, v, _minimal_sets(sets))


def _path_min_cut(d, path):
    """Smallest member size of the separator family along a node path."""
    best = min(len(d.bags[n]) for n in path)
    for i in range(len(path) - 1):
        best = min(best, len(d.bags[path[i]] & d.bags[path[i + 1]]))
    return best


def is_linked(d):
    """Linkedness: for all tree nodes u, v, all equal-size subsets U of
    bag(u) and V of bag(v), the host has |U| disjoint U-V paths or the
    separator family of the pair has a member smaller than |U|.

    Returns a LinkedCheck; the witness, when present, is the canonically
    least failing tuple (u, v, U, V)."""
    ns = sorted_ids(d.nodes)
    adj = d.adjacency()
    for i, u in enumerate(ns):
        for v in ns[i:]:
            path = trees.tree_path(adj, u, v)
            cut = _path_min_cut(d, path)
            bu = sorted_ids(d.bags[u])
            bv = sorted_ids(d.bags[v])
            for k in range(1, min(cut, len(bu), len(bv)) + 1):
                for U in combinations(bu, k):
                    for V in combinations(bv, k):
                        if U == V:
                            continue
                        if menger_value(d.host, U, V) < k:
                            return LinkedCheck(
                                False, (u, v, frozenset(U), frozenset(V))
                            )
    return LinkedCheck(True)


def is_short(d):
    """Shortness: tree edges with equal adhesions are pairwise incident."""
    groups = {}
    for e, a in adhesions(d).items():
        groups.setdefault(a, []).append(e)
    for group in groups.values():
        for e, f in combinations(group, 2):
            if not (e & f):
                return False
    return True


def adhesion_equality_check(d, path, U):
    """Evaluate both sides of the adhesion-equality biconditional on a
    tree path [v_0 .. v_m]:

      lhs: U equals the first and the last adhesion of the path;
      rhs: U equals bag(v_i) & bag(v_0) and bag(v_i) & bag(v_m) for every
           interior node v_i.

    A single-edge path has no interior nodes and both statements collapse
    to "U is the adhesion".  On valid decompositions the two sides are
    asserted to agree."""
    path = list(path)
    if len(path) < 2 or len(set(path)) != len(path):
        raise ValueError("not a tree path")
    adj = d.adjacency()
    for a, b in zip(path, path[1:]):
        if b not in adj.get(a, ()):
            raise ValueError("not a tree path")
    U = frozenset(U)
    m = len(path) - 1
    first = d.bags[path[0]] & d.bags[path[1]]
    last = d.bags[path[m - 1]] & d.bags[path[m]]
    lhs = U == first == last
    if m == 1:
        rhs = lhs
    else:
        rhs = all(
            U == d.bags[path[i]] & d.bags[path[0]]
            and U == d.bags[path[i]] & d.bags[path[m]]
            for i in range(1, m)
        )
    if lhs != rhs and validate(d).ok:
        raise AssertionError(
            "adhesion equality biconditional failed on a valid decomposition"
        )
    return lhs, rhs


def combine_components(decomps):
    """Combine decompositions of pairwise disjoint hosts into one of the
    disjoint union: a center of the first tree is joined to a center of
    every other tree.  Tree nodes are renumbered 0.. per component (a
    single input is returned unchanged)."""
    decomps = list(decomps)
    if not decomps:
        raise ValueError("combine_components needs at least one input")
    if len(decomps) == 1:
        return decomps[0]
    all_vertices = []
    all_edge_ids = []
    for d in decomps:
        all_vertices.extend(d.host.vertices)
        all_edge_ids.extend(d.host.edge_ids())
    if len(set(all_vertices)) != len(all_vertices):
        raise ValueError("host graphs must be pairwise vertex-disjoint")
    if len(set(all_edge_ids)) != len(all_edge_ids):
        raise ValueError("host edge ids collide across components")
    ends = {}
    labels = {}
    for d in decomps:
        for e, pair in d.host.edges():
            ends[e] = pair
        labels.update(d.host.labels())
    host = Multigraph(set(all_vertices), ends, labels)
    nodes = set()
    edges = set()
    bags = {}
    centers = []
    offset = 0
    for d in decomps:
        order = sorted_ids(d.nodes)
        ren = {n: offset + i for i, n in enumerate(order)}
        offset += len(order)
        nodes.update(ren.values())
        edges.update(frozenset((ren[a], ren[b])) for a, b in map(tuple, d.tree_edges))
        for n, b in d.bags.items():
            bags[ren[n]] = b
        centers.append(ren[trees.center(d.adjacency())])
    for c in centers[1:]:
        edges.add(frozenset((centers[0], c)))
    return TreeDecomposition(host, nodes, edges, bags)
