"""Shared corpus builders and independent oracles for the test suite."""

import itertools
import random
from fractions import Fraction

from critgroup import (
    Graph,
    IntMatrix,
    clebsch_complement,
    complement,
    complete,
    complete_multipartite,
    cycle,
    determinant,
    graph_join,
    make_graph,
    make_signed_graph,
    paley,
    petersen,
    star,
)


def empty_graph(n):
    return make_graph(n, [])


def triangular_t5():
    return complement(petersen())


def wheel_w4():
    return graph_join(complete(1), complete_multipartite([2, 2]))


def complete_split(clique, independent):
    return graph_join(complete(clique), empty_graph(independent))


def unsigned_two_eigenvalue_corpus():
    """Named two-eigenvalue graphs: strongly regular members plus the
    two-degree join families."""
    members = [
        ("paley5", paley(5)),
        ("paley9", paley(9)),
        ("paley13", paley(13)),
        ("petersen", petersen()),
        ("clebsch_complement", clebsch_complement()),
        ("triangular_t5", triangular_t5()),
        ("K2x2", complete_multipartite([2, 2])),
        ("K3x3", complete_multipartite([3, 3])),
        ("K4x4", complete_multipartite([4, 4])),
        ("K2x2x2", complete_multipartite([2, 2, 2])),
        ("K3x3x3", complete_multipartite([3, 3, 3])),
        ("star2", star(2)),
        ("star3", star(3)),
        ("star4", star(4)),
        ("star5", star(5)),
        ("wheel_w4", wheel_w4()),
        ("split_2_3", complete_split(2, 3)),
        ("join_K2_K2x2", graph_join(complete(2), complete_multipartite([2, 2]))),
    ]
    return members


def unsigned_srg_corpus():
    from critgroup import detect_srg

    return [(name, g) for name, g in unsigned_two_eigenvalue_corpus() if detect_srg(g)]


def detect_srg_safe(g):
    from critgroup import detect_srg

    return g.is_complete() or detect_srg(g) is not None


def applicable_edges(g):
    signed = hasattr(g, "negative_edges")
    base = g.graph if signed else g
    for u, v in g.sorted_edges():
        if base.degree(u) == base.degree(v) and not detect_srg_safe(base):
            continue  # two-degree cases only decompose cross-degree edges
        yield (u, v)


def all_edges(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def signed_complete_all_negative(n):
    edges = all_edges(n)
    return make_signed_graph(n, edges, edges)


def signed_k6_pentagon():
    """K6 with the five negative edges forming a cycle on vertices 2..6;
    signed two-eigenvalue with lam = 0."""
    neg = [(2, 3), (3, 5), (5, 6), (4, 6), (2, 4)]
    return make_signed_graph(6, all_edges(6), neg)


def signed_c4_one_negative():
    return make_signed_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)], [(1, 2)])


def signed_octahedron():
    """A signed two-eigenvalue signing of the 4-regular octahedron
    (lam = 0, eigenvalue product 12), found by exhausting switching
    classes."""
    edges = [(1, 2), (1, 3), (1, 5), (1, 6), (2, 3), (2, 4), (2, 6),
             (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)]
    return make_signed_graph(6, edges, [(2, 3), (3, 4), (4, 6), (5, 6)])


def signed_two_degree_hexad():
    """A signed two-eigenvalue graph with degrees 3 and 4 (eigenvalue
    product 12), found by exhausting switching classes of all two-degree
    graphs on six vertices."""
    edges = [(1, 2), (1, 3), (1, 6), (2, 3), (2, 4), (2, 5),
             (3, 6), (4, 5), (4, 6), (5, 6)]
    return make_signed_graph(6, edges, [(2, 3), (3, 6), (4, 5), (4, 6), (5, 6)])


def signed_corpus():
    """Unbalanced signed two-eigenvalue graphs covering all three signed
    decomposition cases."""
    from critgroup import signed_complete_unbalanced, switch

    return [
        ("unbalanced_K3", signed_complete_unbalanced(3)),
        ("all_negative_K4", signed_complete_all_negative(4)),
        ("all_negative_K4_switched", switch(signed_complete_all_negative(4), {2})),
        ("all_negative_K5", signed_complete_all_negative(5)),
        ("all_negative_K6", signed_complete_all_negative(6)),
        ("K6_pentagon_signing", signed_k6_pentagon()),
        ("C4_one_negative", signed_c4_one_negative()),
        ("octahedron_signing", signed_octahedron()),
        ("two_degree_hexad", signed_two_degree_hexad()),
    ]


# ---------------------------------------------------------------------------
# Exhaustive small-graph corpora (connected, up to isomorphism)


def connected_atlas(n_max):
    """All connected graphs with 2..n_max vertices up to isomorphism,
    relabeled to 1..n."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g()[1:]:
        n = G.number_of_nodes()
        if n < 2 or n > n_max or not nx.is_connected(G):
            continue
        mapping = {v: i + 1 for i, v in enumerate(sorted(G.nodes()))}
        edges = sorted(tuple(sorted((mapping[a], mapping[b]))) for a, b in G.edges())
        out.append(make_graph(n, edges))
    return out


# ---------------------------------------------------------------------------
# Independent oracles


def spanning_trees_deletion_contraction(n, edges):
    """Spanning tree count by deletion-contraction on a multigraph given as
    an edge list (loops discarded on contraction)."""
    if n == 1:
        return 1
    if len(edges) < n - 1:
        return 0
    reach = {1}
    frontier = [1]
    adjacency = {}
    for u, v in edges:
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)
    while frontier:
        x = frontier.pop()
        for y in adjacency.get(x, ()):
            if y not in reach:
                reach.add(y)
                frontier.append(y)
    if len(reach) != n:
        return 0
    u, v = edges[0]
    deleted = edges[1:]
    contracted = []
    for a, b in deleted:
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            contracted.append((a2, b2))
    relabel = {x: i + 1 for i, x in enumerate(sorted(set(range(1, n + 1)) - {v}))}
    contracted = [(relabel[a], relabel[b]) for a, b in contracted]
    return spanning_trees_deletion_contraction(n, deleted) + spanning_trees_deletion_contraction(
        n - 1, contracted
    )


def determinant_divisor_diagonal(m: IntMatrix):
    """Smith diagonal via determinant divisors: d_i = g_i / g_{i-1} where
    g_i is the gcd of all i x i minors. Scanning each size stops early once
    the running gcd reaches its floor g_{i-1}."""
    from math import gcd

    rows, cols = m.shape()
    bound = min(rows, cols)
    diagonal = []
    previous = 1
    for size in range(1, bound + 1):
        running = 0
        for row_idx in itertools.combinations(range(rows), size):
            for col_idx in itertools.combinations(range(cols), size):
                minor = IntMatrix.from_rows(
                    [[m[(i, j)] for j in col_idx] for i in row_idx]
                )
                running = gcd(running, determinant(minor))
                if running == previous:
                    break
            if running == previous:
                break
        if running == 0:
            break
        diagonal.append(running // previous)
        previous = running
    diagonal.extend([0] * (bound - len(diagonal)))
    return diagonal


# ---------------------------------------------------------------------------
# Seeded randomness helpers


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
        g = make_graph(n, edges)
        if g.is_connected():
            return g


def random_sum_zero_vector(rng: random.Random, n: int, bound: int = 9):
    vec = [rng.randint(-bound, bound) for _ in range(n - 1)]
    vec.append(-sum(vec))
    return vec


def random_int_matrix(rng: random.Random, rows: int, cols: int, bound: int = 9) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    )


def frac(a, b=1):
    return Fraction(a, b)
