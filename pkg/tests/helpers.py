"""Independent brute-force oracles and generators used by the tests.

Everything here recomputes results from first principles (plain
exhaustive enumeration, no pruning shared with the implementation) so
the package can be checked against it.
"""

import itertools

from treediam import Multigraph, TreeDecomposition, validate
from treediam.util import sorted_ids


def mk(n, pairs=(), loops=(), labels=None):
    """Small multigraph literal: pairs is a list of (u, v), loops a list
    of vertices; edge ids are positional ints, loops offset by 1000."""
    ends = {}
    for i, (u, v) in enumerate(pairs):
        ends[i] = (u, v)
    for j, v in enumerate(loops):
        ends[1000 + j] = (v, v)
    return Multigraph(range(n), ends, labels)


def all_simple_paths(g):
    """Every simple path as a vertex tuple (length >= 0), by plain DFS."""
    adj = {v: sorted_ids(g.neighbors(v)) for v in g.vertices}
    out = []
    for start in sorted_ids(g.vertices):
        stack = [(start, (start,))]
        while stack:
            v, p = stack.pop()
            out.append(p)
            for w in adj[v]:
                if w not in p:
                    stack.append((w, p + (w,)))
    return out


def brute_longest_path(g):
    return max(len(p) - 1 for p in all_simple_paths(g))


def brute_disjoint_path_systems(g, U, V, k):
    """True iff k pairwise vertex-disjoint U-V paths exist, by exhaustive
    DFS over path systems."""
    adj = {v: sorted_ids(g.neighbors(v)) for v in g.vertices}
    U = sorted_ids(U)
    V = set(V)

    def rec(i, used, cnt):
        if cnt == k:
            return True
        for j in range(i, len(U)):
            u = U[j]
            if u in used:
                continue
            stack = [(u, (u,))]
            while stack:
                v, p = stack.pop()
                if v in V and rec(j + 1, used | set(p), cnt + 1):
                    return True
                for w in adj[v]:
                    if w not in used and w not in p:
                        stack.append((w, p + (w,)))
        return False

    return rec(0, set(), 0)


def brute_small_separators(g, U, V, k):
    """All W with |W| < k meeting every U-V path (checked by BFS on
    g - W), as a set of frozensets."""
    adj = {v: g.neighbors(v) for v in g.vertices}
    U = set(U)
    V = set(V)
    out = set()
    verts = sorted_ids(g.vertices)
    for r in range(k):
        for W in itertools.combinations(verts, r):
            Wset = set(W)
            seen = set(U - Wset)
            stack = list(seen)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in Wset and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if not (seen & (V - Wset)):
                out.add(frozenset(W))
    return out


def brute_embedding_exists(x, y, induced):
    """Exhaustive search over injective vertex maps and, per vertex pair,
    injective edge assignments (multiplicity-only, unlabeled)."""
    xs = sorted_ids(x.vertices)
    ys = sorted_ids(y.vertices)
    if len(xs) > len(ys):
        return False

    def pair_count(g, u, v):
        return g.multiplicity(u, v)

    for image in itertools.permutations(ys, len(xs)):
        phi = dict(zip(xs, image))
        ok = True
        for i, u in enumerate(xs):
            for v in xs[i:]:
                cx = pair_count(x, u, v)
                cy = pair_count(y, phi[u], phi[v])
                # enumerate injective assignments of the x parallel class
                # into the y parallel class; induced needs a bijection
                injections = itertools.permutations(range(cy), cx)
                good = any(len(a) == cx for a in injections)
                if induced:
                    good = good and cx == cy
                if not good:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def brute_rotund(d, path):
    """Max-t rotundity by enumerating every (k, index subsequence)."""
    from treediam import width

    adhs = [
        d.bags[a] & d.bags[b] for a, b in zip(path, path[1:])
    ]
    s = len(adhs)
    p = width(d) + 1
    best = (0, 0, ())
    for k in range(1, p + 1):
        positions = list(range(1, s + 1))
        for t in range(1, s + 1):
            for idx in itertools.combinations(positions, t):
                sets = [adhs[i - 1] for i in idx]
                if any(len(a) != k for a in sets):
                    continue
                if len(set(sets)) != t:
                    continue
                if any(
                    len(adhs[j - 1]) < k for j in range(idx[0], idx[-1] + 1)
                ):
                    continue
                # keep max t, then min k, then lexicographically least idx
                if t > best[0] or (
                    t == best[0]
                    and (k < best[1] or (k == best[1] and idx < best[2]))
                ):
                    best = (t, k, idx)
    return best


def elimination_decomposition(g, order):
    """Classic clique-tree construction from an elimination order of the
    simplification; always a valid decomposition."""
    order = list(order)
    pos = {v: i for i, v in enumerate(order)}
    fill = {v: set(g.neighbors(v)) for v in g.vertices}
    bags = {}
    for v in order:
        later = {w for w in fill[v] if pos[w] > pos[v]}
        bags[pos[v]] = frozenset({v} | later)
        for a in later:
            for b in later:
                if a != b:
                    fill[a].add(b)
    edges = []
    for v in order:
        i = pos[v]
        later = sorted((pos[w] for w in bags[i] if w != v), key=int)
        if later:
            edges.append((i, min(later)))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    d = TreeDecomposition(g, range(len(order)), edges, bags)
    assert validate(d).ok
    return d


def random_decomposition(g, rng, mutations=4):
    """A random valid decomposition: elimination order, then a few
    validity-preserving mutations (duplicate bags, subset leaves, edge
    splits) to make repeated adhesions and long trees likely."""
    order = sorted_ids(g.vertices)
    rng.shuffle(order)
    d = elimination_decomposition(g, order)
    nodes = set(d.nodes)
    edges = {tuple(sorted_ids(e)) for e in d.tree_edges}
    bags = dict(d.bags)
    next_id = max(nodes) + 1
    for _ in range(rng.randint(0, mutations)):
        kind = rng.choice(("dup", "subset", "split"))
        if kind in ("dup", "subset"):
            n = rng.choice(sorted(nodes))
            bag = bags[n]
            if kind == "subset":
                size = rng.randint(1, len(bag))
                bag = frozenset(rng.sample(sorted_ids(bag), size))
            bags[next_id] = bag
            edges.add((n, next_id))
            nodes.add(next_id)
            next_id += 1
        elif edges:
            a, b = rng.choice(sorted(edges))
            adh = bags[a] & bags[b]
            pool = sorted_ids((bags[a] | bags[b]) - adh)
            extra = rng.sample(pool, rng.randint(0, len(pool)))
            middle = adh | set(extra)
            if not middle:
                continue
            edges.remove((a, b))
            edges.add((a, next_id))
            edges.add((next_id, b))
            bags[next_id] = frozenset(middle)
            nodes.add(next_id)
            next_id += 1
    d = TreeDecomposition(g, nodes, edges, bags)
    assert validate(d).ok
    return d
