"""Plain-tree helpers shared by the decomposition modules.

A tree is given as (nodes, edges) where nodes is an iterable of ids and
edges an iterable of 2-element frozensets of node ids.  All functions
assume the input really is a tree unless stated otherwise.
"""

from collections import deque

from .util import idkey, sorted_ids


def adjacency(nodes, edges):
    adj = {v: set() for v in nodes}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_tree(nodes, edges):
    """True iff (nodes, edges) is a nonempty connected acyclic graph."""
    nodes = set(nodes)
    if not nodes:
        return False
    edges = set(edges)
    if any(len(e) != 2 for e in edges):
        return False
    if len(edges) != len(nodes) - 1:
        return False
    adj = adjacency(nodes, edges)
    start = next(iter(nodes))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(nodes)


def bfs_distances(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def tree_path(adj, u, v):
    """The unique u-v path as a node list (u == v gives [u])."""
    if u == v:
        return [u]
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in adj[x]:
            if w not in parent:
                parent[w] = x
                queue.append(w)
    if v not in parent:
        raise ValueError(f"nodes {u!r} and {v!r} are not connected")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def eccentricities(adj):
    return {v: max(bfs_distances(adj, v).values()) for v in adj}


def diameter(adj):
    if not adj:
        raise ValueError("diameter of an empty tree is undefined")
    # two BFS passes suffice on a tree
    start = next(iter(adj))
    d0 = bfs_distances(adj, start)
    far = max(d0, key=lambda v: (d0[v], idkey(v)))
    d1 = bfs_distances(adj, far)
    return max(d1.values())


def centers(adj):
    """The one or two middle nodes of the tree, canonically sorted."""
    ecc = eccentricities(adj)
    r = min(ecc.values())
    return sorted_ids(v for v, e in ecc.items() if e == r)


def center(adj):
    """A deterministic center: the candidate with least id."""
    return centers(adj)[0]


def minimal_subtree(adj, edge_set):
    """Node and edge sets of the smallest subtree containing every edge
    in edge_set (the Steiner subtree of their endpoints)."""
    terminals = set()
    for e in edge_set:
        terminals.update(e)
    if not terminals:
        return set(), set()
    root = next(iter(terminals))
    # keep every node that lies on a path between two terminals
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    keep = set(terminals)
    for v in reversed(order):
        if v in keep and parent[v] is not None:
            keep.add(parent[v])
    # prune ancestors that only lead to the root without a second terminal
    # below them: recompute as union of root-paths, then trim degree-1
    # non-terminals repeatedly
    sub_adj = {v: {w for w in adj[v] if w in keep} for v in keep}
    changed = True
    while changed:
        changed = False
        for v in list(sub_adj):
            if v not in terminals and len(sub_adj[v]) <= 1:
                for w in sub_adj[v]:
                    sub_adj[w].discard(v)
                del sub_adj[v]
                changed = True
    nodes = set(sub_adj)
    edges = {frozenset((u, w)) for u in sub_adj for w in sub_adj[u]}
    return nodes, edges
