"""Diameter reduction for tree-decompositions: the single-set rewiring
operation, the full shortening pass, duplicate-bag contraction, and
rotundity analysis of tree paths.

All transformations build new decompositions; inputs are never mutated.
"""

from dataclasses import dataclass

from . import trees
from .decomp import TreeDecomposition, adhesion, adhesions, is_short, validate, width
from .util import idkey, setkey, sorted_ids


@dataclass(frozen=True)
class RewirePlan:
    """How one adhesion value U rewires a decomposition tree.

    Edges whose adhesion is exactly U and which avoid the chosen center u
    of their spanning subtree are deleted; each deleted edge {v, w} with v
    on u's side is replaced by {w, u}.  additions pairs every new edge
    with the edge it replaces."""

    target: frozenset
    e_u: frozenset
    subtree_nodes: frozenset
    center: object
    deletions: tuple
    additions: tuple


def plan_for_set(d, U):
    """Compute the RewirePlan of U against d's current tree.  A plan with
    no deletions means the tree is left alone (E_U empty, or its spanning
    subtree already has diameter at most 2)."""
    U = frozenset(U)
    adj = d.adjacency()
    e_u = frozenset(e for e in d.tree_edges if adhesion(d, e) == U)
    if not e_u:
        return RewirePlan(U, e_u, frozenset(), None, (), ())
    sub_nodes, sub_edges = trees.minimal_subtree(adj, e_u)
    sub_adj = {v: {w for w in adj[v] if frozenset((v, w)) in sub_edges} for v in sub_nodes}
    u = trees.center(sub_adj)
    dist = trees.bfs_distances(adj, u)
    deletions = []
    additions = []
    for e in sorted(e_u, key=setkey):
        a, b = tuple(e)
        if u in e:
            continue
        v, w = (a, b) if dist[a] < dist[b] else (b, a)
        deletions.append(e)
        additions.append((frozenset((w, u)), e))
    return RewirePlan(U, e_u, frozenset(sub_nodes), u, tuple(deletions), tuple(additions))


def _apply_plan(d, plan):
    if not plan.deletions:
        return d
    edges = set(d.tree_edges)
    edges.difference_update(plan.deletions)
    edges.update(e for e, _ in plan.additions)
    out = d.replace_tree(edges)
    for e, _ in plan.additions:
        if adhesion(out, e) != plan.target:
            raise AssertionError(
                "rewired edge does not carry the target adhesion"
            )
    return out


def reduce_for_set(d, U):
    """Apply the rewiring operation for one vertex set U: same bags, new
    tree.  Validity, width, and every separator family are preserved; the
    tree is unchanged when E_U is empty or its subtree is already a star."""
    if not validate(d).ok:
        raise ValueError("reduce_for_set needs a valid decomposition")
    return _apply_plan(d, plan_for_set(d, U))


def shorten_pass(d):
    """Apply reduce_for_set to every adhesion value of the tree, in
    canonical order, recomputing adhesions after each application.  The
    result is a short decomposition with the same bags, the same width,
    no larger diameter, the same separator families, and the same
    linkedness as the input."""
    if not validate(d).ok:
        raise ValueError("shorten_pass needs a valid decomposition")
    for _ in range(len(d.tree_edges) + 1):
        for U in sorted(set(adhesions(d).values()), key=setkey):
            d = _apply_plan(d, plan_for_set(d, U))
        if is_short(d):
            return d
    raise AssertionError("shortening did not converge")


def dedupe_bags(d):
    """Contract away duplicate bags: while two nodes carry equal bags,
    drop one of them by contracting its tree edge towards the kept node.
    Width is unchanged and the diameter never grows."""
    if not validate(d).ok:
        raise ValueError("dedupe_bags needs a valid decomposition")
    while True:
        groups = {}
        for n in sorted_ids(d.nodes):
            groups.setdefault(d.bags[n], []).append(n)
        dupes = [ns for ns in groups.values() if len(ns) > 1]
        if not dupes:
            return d
        ns = min(dupes, key=lambda ns: idkey(ns[0]))
        keep, drop = ns[0], ns[1]
        # contract towards the kept duplicate: any other neighbor choice
        # can break the path intersection condition
        w = d.tree_path(drop, keep)[1]
        edges = {e for e in d.tree_edges if drop not in e}
        for x in d.adjacency()[drop]:
            if x != w:
                edges.add(frozenset((x, w)))
        bags = {n: b for n, b in d.bags.items() if n != drop}
        d = TreeDecomposition(d.host, d.nodes - {drop}, edges, bags)


@dataclass(frozen=True)
class RotundCertificate:
    """A maximal rotundity witness for a tree path: t pairwise distinct
    adhesions of common size k at 1-based edge positions `indices`, with
    no smaller adhesion strictly between the first and last of them.  A
    path whose adhesions are all empty is 0-rotund (k = 0, no indices)."""

    path: tuple
    t: int
    k: int
    indices: tuple


def rotund_max(d, path):
    """The rotundity certificate of a tree path with maximum t; ties are
    broken by smaller k, then lexicographically least index tuple."""
    path = list(path)
    if len(path) < 2 or len(set(path)) != len(path):
        raise ValueError("rotund_max needs a tree path with at least one edge")
    adj = d.adjacency()
    for a, b in zip(path, path[1:]):
        if b not in adj.get(a, ()):
            raise ValueError("not a tree path")
    adhs = [d.bags[a] & d.bags[b] for a, b in zip(path, path[1:])]
    sizes = [len(a) for a in adhs]
    best = (0, 0, ())
    p = width(d) + 1
    for k in range(1, p + 1):
        i = 0
        s = len(adhs)
        while i < s:
            if sizes[i] < k:
                i += 1
                continue
            j = i
            seen = []
            seen_sets = set()
            while j < s and sizes[j] >= k:
                if sizes[j] == k and adhs[j] not in seen_sets:
                    seen_sets.add(adhs[j])
                    seen.append(j + 1)  # positions are 1-based
                j += 1
            t = len(seen)
            if t > best[0]:
                best = (t, k, tuple(seen))
            i = j
    return RotundCertificate(tuple(path), best[0], best[1], best[2])


def diameter_bound(m, connected):
    """The proven tree-diameter bound for graphs with no m-edge path:
    2(m^2 - m + 2)^m + 1 in general, 2(m^2 - m + 2)^m - 2 when the graph
    is connected."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    base = 2 * (m * m - m + 2) ** m
    return base - 2 if connected else base + 1
