"""Acceptance suite: one test per criterion, each printing a PASS line
with its measured time (run with -s to see them).  Expected values are
frozen from independent brute-force oracles in helpers.py; tolerances
are exact unless a criterion states otherwise.
"""

import itertools
import random
import time
from functools import lru_cache

from treediam import (
    brute_tree_diameter,
    brute_treewidth,
    check_embedding,
    connected_components,
    cycle_graph,
    diameter,
    diameter_bound,
    dipole,
    disjoint_paths,
    enumerate_multigraphs,
    enumerate_pm_free,
    find_embedding,
    find_short_linked_minwidth,
    good_pair_scan,
    is_linked,
    is_short,
    star_path_decomposition,
    random_pm_free,
    reduce_for_set,
    rotund_max,
    separator_family,
    shorten_pass,
    star_graph,
    validate,
    width,
)
from treediam.decomp import adhesions
from treediam.util import sorted_ids
from helpers import (
    brute_disjoint_path_systems,
    brute_small_separators,
    random_decomposition,
)


def report(name, elapsed, detail=""):
    print(f"[acceptance] {name}: PASS ({elapsed:.1f}s) {detail}".rstrip())


@lru_cache(maxsize=None)
def preserved_population():
    """500 random valid decompositions of random multigraphs with at
    most 6 vertices and multiplicity at most 2 (criteria 2 and 3)."""
    out = []
    for seed in range(500):
        size_rng = random.Random(10_000 + seed)
        n = size_rng.randint(1, 6)
        g = random_pm_free(n, 2, n, seed)  # no path with n edges fits: unconstrained
        out.append(random_decomposition(g, random.Random(20_000 + seed)))
    return out


@lru_cache(maxsize=None)
def short_linked_witnesses():
    """Short linked minimum-width witnesses for the whole m = 3, n <= 5
    population (criteria 5 and 6)."""
    out = []
    for g in enumerate_pm_free(5, 2, 3):
        out.append((g, find_short_linked_minwidth(g)))
    return out


def all_pair_families(d):
    nodes = sorted_ids(d.nodes)
    return {
        (u, v): separator_family(d, u, v).sets
        for i, u in enumerate(nodes)
        for v in nodes[i:]
    }


def test_criterion_1_star_example_reproduction():
    start = time.monotonic()
    for m in range(3, 7):
        g, d = star_path_decomposition(m)
        assert validate(d).ok
        assert width(d) == 1
        shortened = shorten_pass(d)
        assert diameter(shortened) == 2
        assert brute_tree_diameter(star_graph(m), limit=7) == 2
    elapsed = time.monotonic() - start
    assert elapsed < 10
    report("criterion 1 (star example, m=3..6)", elapsed)


def test_criterion_2_operation_preservation():
    start = time.monotonic()
    population = preserved_population()
    assert len(population) >= 500
    failures = 0
    for d in population:
        fams = all_pair_families(d)
        w = width(d)
        diam = diameter(d)
        for target in sorted(set(adhesions(d).values()), key=sorted_ids):
            out = reduce_for_set(d, target)
            ok = (
                validate(out).ok
                and width(out) == w
                and diameter(out) <= diam
                and all_pair_families(out) == fams
            )
            failures += not ok
        shortened = shorten_pass(d)
        ok = (
            validate(shortened).ok
            and width(shortened) == w
            and diameter(shortened) <= diam
            and is_short(shortened)
            and all_pair_families(shortened) == fams
            and is_linked(shortened).ok == is_linked(d).ok
        )
        failures += not ok
    elapsed = time.monotonic() - start
    assert failures == 0
    assert elapsed < 120
    report(
        "criterion 2 (preservation over 500 random decompositions)", elapsed
    )


def test_criterion_3_adhesion_equality_biconditional():
    from treediam import adhesion_equality_check

    start = time.monotonic()
    failures = 0
    checked = 0
    for d in preserved_population():
        bags = sorted({frozenset(b) for b in d.bags.values()}, key=sorted_ids)
        candidates = set(bags)
        for a, b in itertools.combinations(bags, 2):
            candidates.add(a & b)
            candidates.add(a | b)
        nodes = sorted_ids(d.nodes)
        for u, v in itertools.combinations(nodes, 2):
            path = d.tree_path(u, v)
            for target in candidates:
                lhs, rhs = adhesion_equality_check(d, path, target)
                failures += lhs != rhs
                checked += 1
    elapsed = time.monotonic() - start
    assert failures == 0
    report(
        "criterion 3 (adhesion-equality biconditional)",
        elapsed,
        f"{checked} path/set checks",
    )


def test_criterion_4_bound_verification_sweep():
    start = time.monotonic()
    maxima = {}
    for m in (1, 2, 3):
        max_tw = -1
        max_tdi = -1
        count = 0
        for g in enumerate_pm_free(4, 2, m):
            tw = brute_treewidth(g)
            tdi = brute_tree_diameter(g)
            connected = len(connected_components(g)) == 1
            assert tw <= m - 1
            assert tdi <= diameter_bound(m, connected)
            max_tw = max(max_tw, tw)
            max_tdi = max(max_tdi, tdi)
            count += 1
        maxima[m] = (count, max_tw, max_tdi)
    elapsed = time.monotonic() - start
    assert elapsed < 600
    detail = "; ".join(
        f"m={m}: {c} graphs, max tw {tw} (bound {m - 1}), max tdi {tdi} "
        f"(bounds {diameter_bound(m, True)}/{diameter_bound(m, False)})"
        for m, (c, tw, tdi) in maxima.items()
    )
    report("criterion 4 (width and diameter bound sweep)", elapsed, detail)


def test_criterion_5_rotund_claim_suite():
    start = time.monotonic()
    m = 3
    failures = 0
    paths_checked = 0
    for _, d in short_linked_witnesses():
        p = width(d) + 1
        nodes = sorted_ids(d.nodes)
        for u, v in itertools.combinations(nodes, 2):
            path = d.tree_path(u, v)
            adhs = [d.bags[a] & d.bags[b] for a, b in zip(path, path[1:])]
            s = len(adhs)
            s_star = len(set(adhs))
            if s > 2 * s_star:
                failures += 1
            if rotund_max(d, path).t > p * (m - 1) + 1:
                failures += 1
            paths_checked += 1
    elapsed = time.monotonic() - start
    assert failures == 0
    report(
        "criterion 5 (rotund claims s<=2s*, t<=p(m-1)+1)",
        elapsed,
        f"{paths_checked} tree paths",
    )


def test_criterion_6_short_linked_existence():
    start = time.monotonic()
    witnesses = short_linked_witnesses()
    assert witnesses, "the m=3 population must not be empty"
    for g, d in witnesses:
        assert validate(d).ok
        assert is_short(d)
        assert is_linked(d).ok
        assert width(d) == brute_treewidth(g)
    elapsed = time.monotonic() - start
    report(
        "criterion 6 (short linked witness for 100% of m=3, n<=5)",
        elapsed,
        f"{len(witnesses)} graphs",
    )


def test_criterion_7_antichain_checks():
    start = time.monotonic()
    cycles = [cycle_graph(k) for k in range(4, 13)]
    assert good_pair_scan(cycles, mode="subgraph") is None
    dipoles = [dipole(t) for t in range(1, 9)]
    assert good_pair_scan(dipoles, mode="induced") is None
    assert good_pair_scan(dipoles, mode="subgraph") == (1, 2)
    elapsed = time.monotonic() - start
    assert elapsed < 5
    report("criterion 7 (cycle and dipole antichain checks)", elapsed)


def test_criterion_8_embedding_oracle_equivalence():
    start = time.monotonic()
    population = list(enumerate_multigraphs(4, 2))
    tables = []
    for g in population:
        verts = sorted(g.vertices)
        mult = {
            (u, v): g.multiplicity(u, v) for u in verts for v in verts
        }
        tables.append((g, verts, mult))

    def brute_exists(tx, ty, induced):
        _, xs, mx = tx
        _, ys, my = ty
        if len(xs) > len(ys):
            return False
        for image in itertools.permutations(ys, len(xs)):
            ok = True
            for i, u in enumerate(xs):
                for j in range(i, len(xs)):
                    v = xs[j]
                    cx = mx[(u, v)]
                    cy = my[(image[i], image[j])]
                    if cx > cy or (induced and cx != cy):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
        return False

    disagreements = 0
    pairs = 0
    for tx in tables:
        for ty in tables:
            for mode in ("subgraph", "induced"):
                emb = find_embedding(tx[0], ty[0], mode)
                expected = brute_exists(tx, ty, mode == "induced")
                if (emb is not None) != expected:
                    disagreements += 1
                elif emb is not None:
                    check_embedding(tx[0], ty[0], emb, mode)
                pairs += 1
    elapsed = time.monotonic() - start
    assert disagreements == 0
    assert elapsed < 300
    report(
        "criterion 8 (embedding vs exhaustive maps, n<=4)",
        elapsed,
        f"{pairs} ordered pair/mode checks over {len(population)} graphs",
    )


def test_criterion_9_menger_duality():
    start = time.monotonic()

    def triples(n):
        subsets = []
        for r in range(1, n + 1):
            subsets.extend(itertools.combinations(range(n), r))
        out = []
        for k in (1, 2, 3):
            big_enough = [s for s in subsets if len(s) >= k]
            for U in big_enough:
                for V in big_enough:
                    out.append((U, V, k))
        return out

    triple_cache = {n: triples(n) for n in range(1, 6)}
    ground_truth = {}

    def truth(g, U, V, k):
        key = (g.n, frozenset(g.simple_pairs()), U, V, k)
        got = ground_truth.get(key)
        if got is None:
            exists = brute_disjoint_path_systems(g, U, V, k)
            separators = brute_small_separators(g, U, V, k)
            # Menger duality itself: exactly one side can hold
            assert exists != bool(separators)
            got = (exists, separators)
            ground_truth[key] = got
        return got

    graphs = 0
    checks = 0
    disagreements = 0
    for g in enumerate_multigraphs(5, 2):
        graphs += 1
        for U, V, k in triple_cache[g.n]:
            cert = disjoint_paths(g, U, V, k)
            exists, separators = truth(g, U, V, k)
            checks += 1
            if cert.paths is not None:
                if not exists or len(cert.paths) != k:
                    disagreements += 1
                    continue
                seen = set()
                for p in cert.paths:
                    if p.vertices[0] not in U or p.vertices[-1] not in V:
                        disagreements += 1
                    if seen & set(p.vertices):
                        disagreements += 1
                    seen.update(p.vertices)
                    for i, e in enumerate(p.edges):
                        if set(g.ends(e)) != {p.vertices[i], p.vertices[i + 1]}:
                            disagreements += 1
            else:
                if exists or cert.separator not in separators:
                    disagreements += 1
    elapsed = time.monotonic() - start
    assert disagreements == 0
    report(
        "criterion 9 (Menger duality, all multigraphs n<=5)",
        elapsed,
        f"{graphs} graphs, {checks} certificates",
    )
