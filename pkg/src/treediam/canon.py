"""Canonical forms for small multigraphs and batch enumeration up to
isomorphism.

A multigraph on vertices 0..n-1 is encoded as (n, mult vector over the
n(n-1)/2 vertex pairs in lexicographic order, loop vector).  Canonical
form is the minimum encoding over all vertex permutations.  Enumeration
factors through the simple support (which pairs are adjacent): supports
are canonicalized in bulk with numpy, then each support class is
decorated with multiplicities and loops up to its automorphisms.
"""

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .multigraph import Multigraph
from .util import sorted_ids


@lru_cache(maxsize=None)
def _perms(n):
    return tuple(permutations(range(n)))


@lru_cache(maxsize=None)
def _pairs(n):
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_index(n):
    return {p: i for i, p in enumerate(_pairs(n))}


@lru_cache(maxsize=None)
def _pair_perm_tables(n):
    """For each vertex permutation, where each pair position lands."""
    pairs = _pairs(n)
    pidx = _pair_index(n)
    tables = []
    for sigma in _perms(n):
        tables.append(
            tuple(pidx[tuple(sorted((sigma[i], sigma[j])))] for i, j in pairs)
        )
    return tables


def encode(g):
    """(n, mults, loops) encoding of g with its vertices taken in
    canonical sorted order (not yet minimized over permutations)."""
    vlist = sorted_ids(g.vertices)
    vidx = {v: i for i, v in enumerate(vlist)}
    n = len(vlist)
    mults = [0] * len(_pairs(n))
    loops = [0] * n
    pidx = _pair_index(n)
    for u, v in (g.ends(e) for e in g.edge_ids()):
        if u == v:
            loops[vidx[u]] += 1
        else:
            i, j = sorted((vidx[u], vidx[v]))
            mults[pidx[(i, j)]] += 1
    return n, tuple(mults), tuple(loops)


def _apply_perm(code, sigma, table):
    n, mults, loops = code
    new_mults = [0] * len(mults)
    for p, q in enumerate(table):
        new_mults[q] = mults[p]
    new_loops = [0] * n
    for v in range(n):
        new_loops[sigma[v]] = loops[v]
    return n, tuple(new_mults), tuple(new_loops)


def canonical_code(g):
    """Minimum encoding of g over all vertex permutations."""
    code = encode(g)
    n = code[0]
    best = code
    for sigma, table in zip(_perms(n), _pair_perm_tables(n)):
        cand = _apply_perm(code, sigma, table)
        if cand < best:
            best = cand
    return best


def is_isomorphic(g, h):
    return canonical_code(g) == canonical_code(h)


def from_code(code):
    """Build the multigraph of an encoding, vertices 0..n-1 and edge ids
    numbered 0.. in pair order then loop order."""
    n, mults, loops = code
    ends = {}
    eid = 0
    for p, (i, j) in enumerate(_pairs(n)):
        for _ in range(mults[p]):
            ends[eid] = (i, j)
            eid += 1
    for v in range(n):
        for _ in range(loops[v]):
            ends[eid] = (v, v)
            eid += 1
    return Multigraph(range(n), ends)


def support_classes(n):
    """Canonical simple graphs on exactly the labeled vertices 0..n-1:
    a list of (edge bitmask, automorphism list) in increasing mask order.
    Bit p of a mask is pair p of _pairs(n)."""
    pairs = _pairs(n)
    P = len(pairs)
    tables = _pair_perm_tables(n)
    codes = np.arange(1 << P, dtype=np.int64)
    minc = codes.copy()
    for table in tables:
        permuted = np.zeros_like(codes)
        for p, q in enumerate(table):
            permuted |= ((codes >> p) & 1) << q
        np.minimum(minc, permuted, out=minc)
    reps = np.nonzero(minc == codes)[0]
    out = []
    for mask in reps.tolist():
        aut = []
        for si, table in enumerate(tables):
            pm = 0
            for p, q in enumerate(table):
                pm |= ((mask >> p) & 1) << q
            if pm == mask:
                aut.append(si)
        out.append((mask, aut))
    return out


def support_graph(n, mask):
    """The simple graph of a support bitmask."""
    ends = {}
    for p, (i, j) in enumerate(_pairs(n)):
        if (mask >> p) & 1:
            ends[len(ends)] = (i, j)
    return Multigraph(range(n), ends)


def decorated_classes(n, mask, aut_indices, mult_max, max_loops=1):
    """All multigraphs with the given simple support, per-pair
    multiplicity between 1 and mult_max, and up to max_loops loops per
    vertex, canonical up to the support's automorphisms (given as indices
    into _perms(n)).  Yields full (n, mults, loops) encodings in
    increasing representative order."""
    pairs = _pairs(n)
    edge_pos = [p for p in range(len(pairs)) if (mask >> p) & 1]
    E = len(edge_pos)
    if E and mult_max < 1:
        return
    radices = [mult_max] * E + [max_loops + 1] * n
    total = 1
    for r in radices:
        total *= r
    if total > 1 << 26:
        raise ValueError("decoration space too large to enumerate")
    strides = []
    acc = 1
    for r in reversed(radices):
        strides.append(acc)
        acc *= r
    strides.reverse()
    codes = np.arange(total, dtype=np.int64)
    digits = np.empty((total, len(radices)), dtype=np.int64)
    for i, (r, s) in enumerate(zip(radices, strides)):
        digits[:, i] = (codes // s) % r
    minc = codes.copy()
    tables = _pair_perm_tables(n)
    perms = _perms(n)
    pos_of = {p: i for i, p in enumerate(edge_pos)}
    for si in aut_indices:
        sigma = perms[si]
        table = tables[si]
        # edge digit i (pair edge_pos[i]) lands at pos_of[table[edge_pos[i]]]
        col_src = [0] * len(radices)
        for i, p in enumerate(edge_pos):
            col_src[pos_of[table[p]]] = i
        for v in range(n):
            col_src[E + sigma[v]] = E + v
        permuted = np.zeros(total, dtype=np.int64)
        for dst, src in enumerate(col_src):
            permuted += digits[:, src] * strides[dst]
        np.minimum(minc, permuted, out=minc)
    reps = np.nonzero(minc == codes)[0]
    pidx_count = len(pairs)
    for code in reps.tolist():
        mults = [0] * pidx_count
        loops = [0] * n
        rem = code
        for i, (r, s) in enumerate(zip(radices, strides)):
            digit = (rem // s) % r
            if i < E:
                mults[edge_pos[i]] = digit + 1
            else:
                loops[i - E] = digit
        yield (n, tuple(mults), tuple(loops))
