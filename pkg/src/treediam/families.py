"""Deterministic generators for the witness families (paths, cycles,
stars, dipoles, Robertson chains, disjoint unions) and seeded random
path-free instances.  Vertex ids are 0-based ints and edge ids are
consecutive ints, so equal specs serialize identically."""

import random
from dataclasses import dataclass

from .decomp import TreeDecomposition
from .multigraph import Multigraph, contains_path
from .util import sorted_ids


def path_graph(m):
    """The path with m edges on vertices 0..m."""
    if m < 0:
        raise ValueError("path length must be nonnegative")
    return Multigraph(range(m + 1), {i: (i, i + 1) for i in range(m)})


def cycle_graph(k):
    """The cycle with k edges; cycle(1) is a loop, cycle(2) a dipole."""
    if k < 1:
        raise ValueError("cycle length must be at least 1")
    return Multigraph(range(k), {i: (i, (i + 1) % k) for i in range(k)})


def star_graph(m):
    """The star with center 0 and leaves 1..m."""
    if m < 1:
        raise ValueError("a star needs at least one leaf")
    return Multigraph(range(m + 1), {i - 1: (0, i) for i in range(1, m + 1)})


def dipole(t):
    """Two vertices joined by t parallel edges."""
    if t < 1:
        raise ValueError("a dipole needs at least one edge")
    return Multigraph(range(2), {i: (0, 1) for i in range(t)})


def robertson_chain(m):
    """The path with m edges, every edge duplicated."""
    if m < 0:
        raise ValueError("chain length must be nonnegative")
    ends = {}
    for i in range(m):
        ends[2 * i] = (i, i + 1)
        ends[2 * i + 1] = (i, i + 1)
    return Multigraph(range(m + 1), ends)


def disjoint_union(graphs):
    """Disjoint union with vertices relabeled to consecutive ints and
    edges renumbered, component by component."""
    graphs = list(graphs)
    if not graphs:
        raise ValueError("disjoint_union needs at least one graph")
    vertices = []
    ends = {}
    labels = {}
    offset = 0
    eid = 0
    for g in graphs:
        ren = {v: offset + i for i, v in enumerate(sorted_ids(g.vertices))}
        offset += g.n
        vertices.extend(ren.values())
        for e, (u, v) in g.edges():
            ends[eid] = (ren[u], ren[v])
            if g.label(e) is not None:
                labels[eid] = g.label(e)
            eid += 1
    return Multigraph(vertices, ends, labels)


def random_pm_free(n, mult_max, m, seed, budget=1000):
    """Rejection-sample a multigraph on n vertices with per-pair
    multiplicity at most mult_max and at most one loop per vertex until
    it has no m-edge path.  Deterministic for fixed arguments."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if mult_max < 0 or m < 1:
        raise ValueError("mult_max must be >= 0 and m >= 1")
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        # density varies per attempt, otherwise sparse targets (small m)
        # would almost never come up
        p = rng.random()
        ends = {}
        eid = 0
        for i in range(n):
            for j in range(i + 1, n):
                if mult_max and rng.random() < p:
                    for _ in range(rng.randint(1, mult_max)):
                        ends[eid] = (i, j)
                        eid += 1
        for v in range(n):
            if rng.randint(0, 1):
                ends[eid] = (v, v)
                eid += 1
        g = Multigraph(range(n), ends)
        if not contains_path(g, m):
            return g
    raise ValueError(
        f"rejection budget exhausted: {budget} attempts for "
        f"(n={n}, mult_max={mult_max}, m={m}, seed={seed})"
    )


@dataclass(frozen=True)
class FamilySpec:
    """A named family with parameters; generation is deterministic.
    disjoint_union takes nested FamilySpecs as its parameters."""

    family: str
    params: tuple = ()
    seed: int = None


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "dipole": (dipole, 1),
    "robertson_chain": (robertson_chain, 1),
}


def generate(spec):
    """Build the multigraph described by a FamilySpec."""
    if spec.family in _FAMILIES:
        fn, arity = _FAMILIES[spec.family]
        if len(spec.params) != arity:
            raise ValueError(
                f"{spec.family} takes {arity} parameter(s), got {len(spec.params)}"
            )
        return fn(*spec.params)
    if spec.family == "disjoint_union":
        if not spec.params:
            raise ValueError("disjoint_union needs at least one component")
        return disjoint_union(generate(sub) for sub in spec.params)
    if spec.family == "random_pm_free":
        if len(spec.params) != 3:
            raise ValueError("random_pm_free takes (n, mult_max, m)")
        n, mult_max, m = spec.params
        return random_pm_free(n, mult_max, m, spec.seed)
    raise ValueError(f"unknown family {spec.family!r}")


def star_path_decomposition(m):
    """The star with m leaves together with its width-1 decomposition on
    the path [v_1 .. v_m] with bags {0, i}: the standard example whose
    tree is long but whose bags are already optimal."""
    if m < 3:
        raise ValueError("the star example needs m >= 3")
    g = star_graph(m)
    nodes = range(1, m + 1)
    edges = [(i, i + 1) for i in range(1, m)]
    bags = {i: {0, i} for i in nodes}
    return g, TreeDecomposition(g, nodes, edges, bags)
