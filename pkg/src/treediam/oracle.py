"""Brute-force ground truth at desk scale: exact tree-width by subset
dynamic programming, exact tree-diameter and short linked witnesses by
exhaustive search over reduced decompositions, and enumeration of small
multigraphs up to isomorphism (optionally path-free).

A decomposition is *reduced* when no bag is contained in an adjacent
bag.  Contracting a subsumed bag keeps validity and width and never
grows the diameter, so searching reduced decompositions with at most
|V| nodes is exhaustive for the quantities computed here; that
contraction is exposed as reduce_decomposition and property-tested.
"""

from itertools import count

from . import canon
from .decomp import TreeDecomposition, adhesion, is_linked
from .multigraph import connected_components, contains_path, induced_subgraph
from .shorten import shorten_pass
from .util import setkey, sorted_ids


class OracleLimitError(ValueError):
    """Raised when an exhaustive computation would exceed its size cap."""


def brute_treewidth(g, limit=8):
    """Exact tree-width of g via elimination orderings of its
    simplification, as a subset DP over eliminated vertex sets."""
    if g.n == 0:
        raise ValueError("null graph has no tree-width")
    if g.n > limit:
        raise OracleLimitError(f"oracle limit: {g.n} vertices > {limit}")
    n = g.n
    adj = g._adj_masks()
    full = (1 << n) - 1
    memo = {0: -1}

    def fill_degree(v, remaining):
        # vertices of `remaining` reachable from v through eliminated ones
        start = 1 << v
        seen = start
        frontier = start
        reach = 0
        eliminated = full & ~remaining
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1] & ~seen
            seen |= nxt
            reach |= nxt & remaining
            frontier = nxt & eliminated
        return bin(reach & ~start).count("1")

    def tw(remaining):
        got = memo.get(remaining)
        if got is not None:
            return got
        best = n
        m = remaining
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            deg = fill_degree(v, remaining)
            if deg < best:
                best = min(best, max(deg, tw(remaining & ~b)))
        memo[remaining] = best
        return best

    return tw(full)


def _bag_candidates(host, max_bag):
    """Nonempty bags up to max_bag vertices with masks over host vertices
    and over the host's simple pairs."""
    vlist = sorted_ids(host.vertices)
    vbit = {v: 1 << i for i, v in enumerate(vlist)}
    pair_list = sorted(host.simple_pairs(), key=setkey)
    pair_bit = {p: 1 << i for i, p in enumerate(pair_list)}
    cands = []
    from itertools import combinations

    for r in range(1, max_bag + 1):
        for sub in combinations(vlist, r):
            bag = frozenset(sub)
            vm = 0
            for v in sub:
                vm |= vbit[v]
            pm = 0
            for p, bit in pair_bit.items():
                if p <= bag:
                    pm |= bit
            cands.append((bag, vm, pm))
    full_v = (1 << len(vlist)) - 1
    full_p = (1 << len(pair_list)) - 1
    return cands, full_v, full_p


def _signature(bags, adj):
    """Canonical form of a bag-labeled tree (AHU encoding rooted at a
    center), used to deduplicate search states up to tree isomorphism."""
    if len(bags) == 1:
        return (setkey(bags[0]),)
    ecc = {}
    for v in adj:
        dist = {v: 0}
        queue = [v]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for w in adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        ecc[v] = max(dist.values())
    r = min(ecc.values())
    roots = [v for v, e in ecc.items() if e == r]

    def enc(v, parent):
        kids = tuple(sorted(enc(w, v) for w in adj[v] if w != parent))
        return (setkey(bags[v]), kids)

    return min(enc(root, None) for root in roots)


def _grow(host, max_bag, max_nodes, max_diam):
    """Depth-first enumeration of valid reduced decompositions of host,
    up to tree isomorphism, by leaf attachment.  Yields complete states;
    branch order prefers bags covering missing pairs and vertices."""
    cands, full_v, full_p = _bag_candidates(host, max_bag)
    seen = set()

    def complete(vm, pm):
        return vm == full_v and pm == full_p

    def state_order(items, vm, pm):
        return sorted(
            items,
            key=lambda it: (
                -bin((it[2] & ~pm)).count("1"),
                -bin((it[1] & ~vm)).count("1"),
                len(it[0]),
                setkey(it[0]),
            ),
        )

    def rec(bags, adj, masks, used, vm, pm, diam, dists):
        sig = _signature(bags, adj)
        if sig in seen:
            return
        seen.add(sig)
        if complete(vm, pm):
            k = len(bags)
            edges = {frozenset((i, j)) for i in adj for j in adj[i]}
            yield TreeDecomposition(host, range(k), edges, dict(enumerate(bags)))
        if len(bags) >= max_nodes:
            return
        for parent in range(len(bags)):
            pmask = masks[parent]
            options = []
            for bag, bvm, bpm in cands:
                if bvm & used & ~pmask:
                    continue  # an old vertex would reappear detached
                if not (bvm & ~pmask) or not (pmask & ~bvm):
                    continue  # subsumed bag: not reduced
                options.append((bag, bvm, bpm))
            for bag, bvm, bpm in state_order(options, vm, pm):
                new_i = len(bags)
                nd = [dists[parent][i] + 1 for i in range(new_i)]
                new_diam = max(diam, max(nd))
                if max_diam is not None and new_diam > max_diam:
                    continue
                adj[parent].add(new_i)
                adj[new_i] = {parent}
                for row, val in zip(dists, nd):
                    row.append(val)
                nd.append(0)
                dists.append(nd)
                yield from rec(
                    bags + [bag],
                    adj,
                    masks + [bvm],
                    used | bvm,
                    vm | bvm,
                    pm | bpm,
                    new_diam,
                    dists,
                )
                adj[parent].discard(new_i)
                del adj[new_i]
                dists.pop()
                for row in dists:
                    row.pop()

    for bag, bvm, bpm in state_order(cands, 0, 0):
        yield from rec([bag], {0: set()}, [bvm], bvm, bvm, bpm, 0, [[0]])


class DecompositionSpace:
    """Iterator over every valid reduced tree-decomposition of the host,
    up to tree isomorphism, with at most max_nodes nodes (default the
    host order) and bags of at most max_bag_size vertices."""

    def __init__(self, host, max_nodes=None, max_bag_size=None, max_diameter=None):
        if host.n == 0:
            raise ValueError("the null graph has no decompositions")
        self.host = host
        self.max_nodes = max_nodes if max_nodes is not None else host.n
        self.max_bag_size = (
            max_bag_size if max_bag_size is not None else host.n
        )
        self.max_diameter = max_diameter

    def __iter__(self):
        return _grow(
            self.host, self.max_bag_size, self.max_nodes, self.max_diameter
        )


def brute_tree_diameter(g, limit=6):
    """Exact tree-diameter: the least tree diameter among width-optimal
    decompositions, by iterative deepening over the diameter."""
    if g.n == 0:
        raise ValueError("null graph has no tree-diameter")
    if g.n > limit:
        raise OracleLimitError(f"oracle limit: {g.n} vertices > {limit}")
    p = brute_treewidth(g, limit=max(limit, g.n)) + 1
    for d in count(0):
        found = next(
            iter(DecompositionSpace(g, max_bag_size=p, max_diameter=d)), None
        )
        if found is not None:
            return d
        if d >= g.n:
            raise AssertionError("no width-optimal decomposition found")


def find_short_linked_minwidth(g, limit=6):
    """A short linked tree-decomposition of width tw(g), found by
    searching reduced decompositions and shortening each candidate.
    Disconnected hosts are decomposed per component and recombined."""
    if g.n == 0:
        raise ValueError("null graph has no decompositions")
    if g.n > limit:
        raise OracleLimitError(f"oracle limit: {g.n} vertices > {limit}")
    comps = connected_components(g)
    if len(comps) > 1:
        from .decomp import combine_components

        parts = [
            find_short_linked_minwidth(induced_subgraph(g, c), limit=limit)
            for c in comps
        ]
        return combine_components(parts)
    p = brute_treewidth(g, limit=max(limit, g.n)) + 1
    for d in DecompositionSpace(g, max_bag_size=p):
        short = shorten_pass(d)
        if is_linked(short):
            return short
    raise RuntimeError(
        "lemma violation: no short linked minimum-width decomposition found"
    )


def reduce_decomposition(d):
    """Contract every tree edge whose adhesion equals one endpoint's bag
    (that endpoint is absorbed into the other).  Keeps validity and
    width; never increases the diameter."""
    while True:
        target = None
        for e in sorted(d.tree_edges, key=lambda e: setkey(tuple(e))):
            u, v = sorted_ids(e)
            a = adhesion(d, e)
            if a == d.bags[u]:
                target = (u, v)
                break
            if a == d.bags[v]:
                target = (v, u)
                break
        if target is None:
            return d
        drop, keep = target
        edges = {e for e in d.tree_edges if drop not in e}
        for x in d.adjacency()[drop]:
            if x != keep:
                edges.add(frozenset((x, keep)))
        bags = {n: b for n, b in d.bags.items() if n != drop}
        d = TreeDecomposition(d.host, d.nodes - {drop}, edges, bags)


def enumerate_multigraphs(n_max, mult_max, max_loops=1, limit_n=6, limit_mult=3):
    """All multigraphs up to isomorphism with 1..n_max vertices, per-pair
    multiplicity at most mult_max, and at most max_loops loops per
    vertex.  Vertices come out as 0..n-1 with deterministic edge ids."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > limit_n or mult_max > limit_mult:
        raise OracleLimitError(
            f"oracle limit: n_max {n_max} > {limit_n} or mult {mult_max} > {limit_mult}"
        )
    for n in range(1, n_max + 1):
        for mask, aut in canon.support_classes(n):
            if mult_max < 1 and mask:
                continue
            for code in canon.decorated_classes(n, mask, aut, mult_max, max_loops):
                yield canon.from_code(code)


def enumerate_pm_free(n_max, mult_max, m, max_loops=1, limit_n=6, limit_mult=3):
    """All multigraphs up to isomorphism within the size caps that have
    no simple path with m edges.  Path-freeness only depends on the
    simple support, so supports are filtered before decoration."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if n_max > limit_n or mult_max > limit_mult:
        raise OracleLimitError(
            f"oracle limit: n_max {n_max} > {limit_n} or mult {mult_max} > {limit_mult}"
        )
    if m == 0:
        return  # every nonnull graph contains the one-vertex path
    for n in range(1, n_max + 1):
        for mask, aut in canon.support_classes(n):
            if mult_max < 1 and mask:
                continue
            if contains_path(canon.support_graph(n, mask), m):
                continue
            for code in canon.decorated_classes(n, mask, aut, mult_max, max_loops):
                yield canon.from_code(code)
