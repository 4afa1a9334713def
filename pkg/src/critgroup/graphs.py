"""Graphs, signed graphs, generators, and combinatorial structure detection.

Vertices are integers 1..n. Edges are stored as sorted pairs (u, v) with
u < v. A signed graph is a graph together with the set of its negative
edges; every other edge is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import (
    DisconnectedGraphError,
    GraphError,
    GraphFormatError,
    StructureError,
)


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical form of an undirected edge."""
    if u == v:
        raise GraphError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"need at least one vertex, got n={self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices()}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def degree_values(self) -> tuple[int, ...]:
        return tuple(sorted({self.degree(v) for v in self.vertices()}))

    def is_regular(self) -> bool:
        return len(self.degree_values) == 1

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    @cached_property
    def _connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_connected(self) -> bool:
        return self._connected


@dataclass(frozen=True)
class SignedGraph:
    """Signed graph: underlying simple graph plus the set of negative edges."""

    graph: Graph
    negative_edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        bad = self.negative_edges - self.graph.edges
        if bad:
            raise GraphError(f"negative edges not in graph: {sorted(bad)}")

    @property
    def n(self) -> int:
        return self.graph.n

    def vertices(self) -> range:
        return self.graph.vertices()

    def sign(self, u: int, v: int) -> int:
        e = edge_key(u, v)
        if e not in self.graph.edges:
            raise GraphError(f"({u},{v}) is not an edge")
        return -1 if e in self.negative_edges else 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return self.graph.sorted_edges()


def make_graph(n: int, edges) -> Graph:
    return Graph(n, frozenset(edge_key(u, v) for u, v in edges))


def make_signed_graph(n: int, edges, negative_edges) -> SignedGraph:
    return SignedGraph(
        make_graph(n, edges),
        frozenset(edge_key(u, v) for u, v in negative_edges),
    )


def require_connected(g: Graph | SignedGraph, what: str) -> None:
    underlying = g.graph if isinstance(g, SignedGraph) else g
    if not underlying.is_connected():
        raise DisconnectedGraphError(f"{what} requires a connected graph")


# ---------------------------------------------------------------------------
# Generators


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return make_graph(n, combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return make_graph(n, edges)


def star(p: int) -> Graph:
    """Star with center vertex 1 and leaves 2..p+1."""
    if p < 1:
        raise GraphError("star needs at least one leaf")
    return make_graph(p + 1, [(1, i) for i in range(2, p + 2)])


def complete_multipartite(parts: list[int]) -> Graph:
    """Complete multipartite graph; part i occupies a consecutive label block."""
    if len(parts) < 2 or any(m < 1 for m in parts):
        raise GraphError("need at least two parts, each of size >= 1")
    n = sum(parts)
    blocks = []
    start = 1
    for m in parts:
        blocks.append(range(start, start + m))
        start += m
    edges = []
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            edges.extend((u, v) for u in blocks[i] for v in blocks[j])
    return make_graph(n, edges)


def petersen() -> Graph:
    """Kneser graph on the 2-subsets of {1..5}, labeled in lexicographic order."""
    subsets = list(combinations(range(1, 6), 2))
    index = {s: i + 1 for i, s in enumerate(subsets)}
    edges = [
        (index[a], index[b])
        for a, b in combinations(subsets, 2)
        if not set(a) & set(b)
    ]
    return make_graph(10, edges)


def clebsch_complement() -> Graph:
    """Binary strings of length 4 (lexicographic), adjacent iff they differ
    in exactly 2 or 3 positions. This is the (16,10,6,6) strongly regular
    complement of the Clebsch graph."""
    edges = []
    for a, b in combinations(range(16), 2):
        if bin(a ^ b).count("1") in (2, 3):
            edges.append((a + 1, b + 1))
    return make_graph(16, edges)


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise GraphError("q must be a prime power")
            return p, e
    raise GraphError("q must be a prime power >= 2")


def _find_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over F_p, coefficients low to high,
    found by deterministic search with trial division."""

    def poly_mod(num, den):
        num = list(num)
        while len(num) >= len(den):
            if num[-1] % p:
                shift = len(num) - len(den)
                lead = num[-1] * pow(den[-1], -1, p) % p
                for i, c in enumerate(den):
                    num[shift + i] = (num[shift + i] - lead * c) % p
            num.pop()
        return num

    for code in range(p**e):
        coeffs = [(code // p**i) % p for i in range(e)] + [1]
        ok = True
        for d in range(1, e // 2 + 1):
            for dcode in range(p**d):
                den = [(dcode // p**i) % p for i in range(d)] + [1]
                if not any(poly_mod(coeffs, den)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return tuple(coeffs)
    raise GraphError(f"no irreducible of degree {e} over F_{p}")


def paley(q: int) -> Graph:
    """Paley graph on the field with q elements, q a prime power, q = 1 mod 4.

    Field elements are enumerated by integer value sum(c_i * p^i) of their
    coefficient vectors; vertex labels are that value plus one. Two vertices
    are adjacent iff their difference is a non-zero square.
    """
    if q % 4 != 1:
        raise GraphError("paley needs q = 1 mod 4")
    p, e = _factor_prime_power(q)
    if e == 1:
        squares = {x * x % p for x in range(1, p)}
        edges = [
            (a + 1, b + 1) for a, b in combinations(range(p), 2) if (a - b) % p in squares
        ]
        return make_graph(p, edges)

    modulus = _find_irreducible(p, e)

    def decode(code):
        return tuple((code // p**i) % p for i in range(e))

    def encode(coeffs):
        return sum(c * p**i for i, c in enumerate(coeffs))

    def mul(a, b):
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        # reduce mod the irreducible, x^e = -(lower terms)
        for i in range(2 * e - 2, e - 1, -1):
            c = prod[i] % p
            prod[i] = 0
            for j in range(e):
                prod[i - e + j] = (prod[i - e + j] - c * modulus[j]) % p
        return tuple(c % p for c in prod[:e])

    elements = [decode(c) for c in range(q)]
    squares = {encode(mul(x, x)) for x in elements} - {0}
    edges = []
    for ca, cb in combinations(range(q), 2):
        diff = tuple((x - y) % p for x, y in zip(decode(ca), decode(cb)))
        if encode(diff) in squares:
            edges.append((ca + 1, cb + 1))
    return make_graph(q, edges)


def signed_complete_unbalanced(n: int) -> SignedGraph:
    """Complete graph on n >= 3 vertices with the single negative edge (1,2)."""
    if n < 3:
        raise GraphError("unbalanced signed complete graph needs n >= 3")
    return SignedGraph(complete(n), frozenset({(1, 2)}))


def complement(g: Graph) -> Graph:
    edges = [e for e in combinations(g.vertices(), 2) if e not in g.edges]
    return make_graph(g.n, edges)


def disjoint_union(graphs: list[Graph]) -> Graph:
    """Disjoint union; the i-th graph's labels are shifted past its predecessors."""
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    if n < 1:
        raise GraphError("disjoint union of nothing")
    return Graph(n, frozenset(edges))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Join: disjoint union plus all edges between the two vertex sets.
    g2's labels are shifted by g1.n."""
    base = disjoint_union([g1, g2])
    extra = [(u, v + g1.n) for u in g1.vertices() for v in g2.vertices()]
    return Graph(base.n, base.edges | frozenset(extra))


GENERATOR_FAMILIES = (
    "complete",
    "complete_multipartite",
    "star",
    "cycle",
    "paley",
    "petersen",
    "clebsch_complement",
    "signed_complete_unbalanced",
    "signed_from_file",
)


def generate(family: str, params=None) -> Graph | SignedGraph:
    """Build a named family member. params is a list of integers, except for
    signed_from_file where it is a path."""
    params = params if params is not None else []

    def want(k):
        if len(params) != k:
            raise GraphError(f"family {family} takes {k} parameter(s), got {len(params)}")

    if family == "complete":
        want(1)
        return complete(params[0])
    if family == "complete_multipartite":
        if not params:
            raise GraphError("complete_multipartite needs part sizes")
        return complete_multipartite(list(params))
    if family == "star":
        want(1)
        return star(params[0])
    if family == "cycle":
        want(1)
        return cycle(params[0])
    if family == "paley":
        want(1)
        return paley(params[0])
    if family == "petersen":
        want(0)
        return petersen()
    if family == "clebsch_complement":
        want(0)
        return clebsch_complement()
    if family == "signed_complete_unbalanced":
        want(1)
        return signed_complete_unbalanced(params[0])
    if family == "signed_from_file":
        if isinstance(params, str):
            return read_graph_file(params)
        if len(params) == 1 and isinstance(params[0], str):
            return read_graph_file(params[0])
        raise GraphError("signed_from_file takes a file path")
    raise GraphError(f"unknown family {family!r}; known: {', '.join(GENERATOR_FAMILIES)}")


# ---------------------------------------------------------------------------
# File format: first line "n <count>", then one edge per line as "u v",
# optionally followed by + or -. '#' starts a comment. 1-indexed.


def parse_graph(text: str) -> Graph | SignedGraph:
    n = None
    edges: list[tuple[int, int]] = []
    negatives: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    signed = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError("expected header 'n <count>'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError(f"bad vertex count {n}", lineno)
            continue
        if len(tokens) not in (2, 3):
            raise GraphFormatError(f"expected 'u v' or 'u v +/-', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"bad endpoints in {line!r}", lineno) from None
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n} in {line!r}", lineno)
        e = edge_key(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge ({e[0]},{e[1]})", lineno)
        seen.add(e)
        edges.append(e)
        if len(tokens) == 3:
            if tokens[2] not in ("+", "-"):
                raise GraphFormatError(f"bad sign {tokens[2]!r}", lineno)
            signed = True
            if tokens[2] == "-":
                negatives.append(e)

    if n is None:
        raise GraphFormatError("empty input, expected header 'n <count>'")
    if signed:
        return make_signed_graph(n, edges, negatives)
    return make_graph(n, edges)


def read_graph_file(path: str) -> Graph | SignedGraph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())


def format_graph(g: Graph | SignedGraph) -> str:
    """Render a graph in the file format (deterministic edge order)."""
    lines = [f"n {g.n}"]
    if isinstance(g, SignedGraph):
        for u, v in g.sorted_edges():
            lines.append(f"{u} {v} {'-' if (u, v) in g.negative_edges else '+'}")
    else:
        for u, v in g.sorted_edges():
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structure detection


@dataclass(frozen=True)
class SrgParameters:
    """Strongly regular graph parameters (n, k, lam, mu).

    Complete graphs are included as (n, n-1, n-2, 0). For non-complete
    parameters the counting identity (n-k-1)*mu = k*(k-lam-1) holds.
    """

    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if (self.n - self.k - 1) * self.mu != self.k * (self.k - self.lam - 1):
            raise StructureError(f"inconsistent SRG parameters {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)

    @property
    def eigenvalue_sum(self) -> int:
        return 2 * self.k - self.lam + self.mu

    @property
    def eigenvalue_product(self) -> int:
        return self.n * self.mu


def detect_srg(g: Graph) -> SrgParameters | None:
    """Parameters (n, k, lam, mu) if g is strongly regular, else None."""
    require_connected(g, "detect_srg")
    if not g.is_regular() or g.n < 2:
        return None
    k = g.degree(1)
    lam = None
    mu = None
    adj = g.adjacency
    for u, v in combinations(g.vertices(), 2):
        common = len(adj[u] & adj[v])
        if v in adj[u]:
            if lam is None:
                lam = common
            elif lam != common:
                return None
        else:
            if mu is None:
                mu = common
            elif mu != common:
                return None
    if lam is None:
        return None
    if mu is None:
        mu = 0  # complete graph
    return SrgParameters(g.n, k, lam, mu)


@dataclass(frozen=True)
class TwoEigenvalueParams:
    """Parameters of a connected graph whose Laplacian has exactly two
    distinct non-zero eigenvalues.

    regular=True is the strongly regular case (k1 == k2 == k). In the
    non-regular case the degrees take exactly the two values k1 < k2,
    every non-adjacent pair has mu common neighbors, every adjacent pair
    has mu_bar common non-neighbors, and

        eigenvalue_sum  = k1 + k2 + 1 = n + mu - mu_bar
        eigenvalue_product = k1*k2 + mu = n*mu.
    """

    n: int
    regular: bool
    k1: int
    k2: int
    mu: int
    mu_bar: int
    eigenvalue_sum: int
    eigenvalue_product: int
    srg: SrgParameters | None = field(default=None, compare=False)


def detect_two_eigenvalue(g: Graph) -> TwoEigenvalueParams | None:
    """Combinatorial two-distinct-nonzero-Laplacian-eigenvalue detection.

    Regular graphs qualify iff strongly regular and not complete. A
    non-regular graph qualifies iff there are constants mu, mu_bar such
    that every non-adjacent pair has exactly mu common neighbors and every
    adjacent pair has exactly mu_bar common non-neighbors.
    """
    require_connected(g, "detect_two_eigenvalue")
    if g.is_complete():
        raise StructureError("complete graphs have a single non-zero eigenvalue")
    if g.n < 2:
        return None
    adj = g.adjacency

    if g.is_regular():
        srg = detect_srg(g)
        if srg is None:
            return None
        k = srg.k
        mu_bar = g.n - 2 * k + srg.lam
        return TwoEigenvalueParams(
            n=g.n,
            regular=True,
            k1=k,
            k2=k,
            mu=srg.mu,
            mu_bar=mu_bar,
            eigenvalue_sum=srg.eigenvalue_sum,
            eigenvalue_product=srg.eigenvalue_product,
            srg=srg,
        )

    mu = None
    mu_bar = None
    for u, v in combinations(g.vertices(), 2):
        if v in adj[u]:
            nonnbrs = g.n - 2 - len((adj[u] | adj[v]) - {u, v})
            if mu_bar is None:
                mu_bar = nonnbrs
            elif mu_bar != nonnbrs:
                return None
        else:
            common = len(adj[u] & adj[v])
            if mu is None:
                mu = common
            elif mu != common:
                return None
    if mu is None or mu_bar is None or mu < 1:
        return None

    degrees = g.degree_values
    if len(degrees) != 2:
        return None
    k1, k2 = degrees
    # consistency: both closed forms for the eigenvalue data must agree
    if k1 + k2 + 1 != g.n + mu - mu_bar or k1 * k2 + mu != g.n * mu:
        return None
    # adjacent common-neighbor counts split by the degree pattern
    for u, v in g.sorted_edges():
        common = len(adj[u] & adj[v])
        du, dv = g.degree(u), g.degree(v)
        if du == dv:
            expected = mu - 1 + k1 - k2 if du == k1 else mu - 1 + k2 - k1
        else:
            expected = mu - 1
        if common != expected:
            return None
    return TwoEigenvalueParams(
        n=g.n,
        regular=False,
        k1=k1,
        k2=k2,
        mu=mu,
        mu_bar=mu_bar,
        eigenvalue_sum=k1 + k2 + 1,
        eigenvalue_product=g.n * mu,
    )


# ---------------------------------------------------------------------------
# Signed graph operations


def switch(gs: SignedGraph, vertex_set) -> SignedGraph:
    """Switch at a vertex set: flip the sign of every edge with exactly one
    endpoint in the set. An involution; preserves balance and the critical
    group up to isomorphism."""
    s = frozenset(vertex_set)
    bad = s - set(gs.vertices())
    if bad:
        raise GraphError(f"switching set contains non-vertices {sorted(bad)}")
    negatives = set()
    for u, v in gs.graph.edges:
        sign = -1 if (u, v) in gs.negative_edges else 1
        if (u in s) != (v in s):
            sign = -sign
        if sign == -1:
            negatives.add((u, v))
    return SignedGraph(gs.graph, frozenset(negatives))


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of a balance check. For a balanced graph, switching at
    switching_set makes every edge positive."""

    balanced: bool
    switching_set: frozenset[int] | None


def is_balanced(gs: SignedGraph) -> BalanceResult:
    """Spanning-tree sign propagation from vertex 1."""
    require_connected(gs, "is_balanced")
    potential = {1: 1}
    order = [1]
    stack = [1]
    adj = gs.graph.adjacency
    while stack:
        u = stack.pop()
        for w in sorted(adj[u]):
            if w not in potential:
                potential[w] = potential[u] * gs.sign(u, w)
                order.append(w)
                stack.append(w)
    for u, v in gs.graph.edges:
        if gs.sign(u, v) != potential[u] * potential[v]:
            return BalanceResult(False, None)
    return BalanceResult(True, frozenset(v for v, s in potential.items() if s == -1))


def net_common_neighbors(gs: SignedGraph, u: int, v: int) -> int:
    """Sum of sign(u,w)*sign(w,v) over common neighbors w of u and v."""
    if u == v:
        raise GraphError("net common neighbors needs two distinct vertices")
    adj = gs.graph.adjacency
    return sum(gs.sign(u, w) * gs.sign(w, v) for w in adj[u] & adj[v])


@dataclass(frozen=True)
class SignedTwoEigenvalueParams:
    """Parameters of a signed graph whose Laplacian has exactly two distinct
    eigenvalues.

    case "regular": underlying graph is k-regular and there is a constant
    lam with net_common_neighbors(u,v) = sign(u,v)*lam on edges and 0 on
    non-adjacent pairs; then eigenvalue_sum = 2k - lam and
    eigenvalue_product = k*(k - lam - 1).

    case "two_degree": degrees take exactly two values k1 < k2 and
    net_common_neighbors(u,v) = sign(u,v)*(deg(u)+deg(v)-eigenvalue_sum)
    on edges and 0 on non-adjacent pairs, with eigenvalue_sum = k1+k2+1
    and eigenvalue_product = k1*k2.
    """

    n: int
    case: str
    k1: int
    k2: int
    lam: int | None
    eigenvalue_sum: int
    eigenvalue_product: int

    @property
    def regular(self) -> bool:
        return self.case == "regular"


def detect_signed_two_eigenvalue(gs: SignedGraph) -> SignedTwoEigenvalueParams | None:
    """Detect the two-distinct-Laplacian-eigenvalue property of a signed graph.

    Both cases force a quadratic polynomial to annihilate the signed
    Laplacian, so this combinatorial test is exact: it succeeds iff the
    signed Laplacian has exactly two distinct eigenvalues.
    """
    require_connected(gs, "detect_signed_two_eigenvalue")
    g = gs.graph
    if g.n < 2 or not g.edges:
        return None
    adj = g.adjacency

    if g.is_regular():
        k = g.degree(1)
        lam = None
        for u, v in combinations(g.vertices(), 2):
            ncn = net_common_neighbors(gs, u, v)
            if v in adj[u]:
                value = gs.sign(u, v) * ncn
                if lam is None:
                    lam = value
                elif lam != value:
                    return None
            elif ncn != 0:
                return None
        return SignedTwoEigenvalueParams(
            n=g.n,
            case="regular",
            k1=k,
            k2=k,
            lam=lam,
            eigenvalue_sum=2 * k - lam,
            eigenvalue_product=k * (k - lam - 1),
        )

    degrees = g.degree_values
    if len(degrees) != 2:
        return None
    k1, k2 = degrees
    total = k1 + k2 + 1
    for u, v in combinations(g.vertices(), 2):
        ncn = net_common_neighbors(gs, u, v)
        if v in adj[u]:
            if ncn != gs.sign(u, v) * (g.degree(u) + g.degree(v) - total):
                return None
        elif ncn != 0:
            return None
    return SignedTwoEigenvalueParams(
        n=g.n,
        case="two_degree",
        k1=k1,
        k2=k2,
        lam=None,
        eigenvalue_sum=total,
        eigenvalue_product=k1 * k2,
    )


@dataclass(frozen=True)
class UnbalancedTriangle:
    """Unbalanced triangle (u, v, w) of a signed complete graph, normalized
    by switching so that in `graph` the edge (u,v) is the unique negative
    edge of the triangle. switch_set records the switching applied to the
    input."""

    u: int
    v: int
    w: int
    graph: SignedGraph
    switch_set: frozenset[int]


def _normalize_triangle(gs: SignedGraph, a: int, b: int, c: int) -> UnbalancedTriangle:
    """Switch inside {a,b,c} so the negative edge of the odd triangle sits on
    a chosen pair. With one negative edge, relabel so that edge is (u,v).
    With three, put it on (a,b) by switching at c."""
    signs = {
        (a, b): gs.sign(a, b),
        (a, c): gs.sign(a, c),
        (b, c): gs.sign(b, c),
    }
    negs = [e for e, s in signs.items() if s == -1]
    if len(negs) == 1:
        (u, v) = negs[0]
        w = ({a, b, c} - {u, v}).pop()
        return UnbalancedTriangle(u, v, w, gs, frozenset())
    if len(negs) == 3:
        switched = switch(gs, {c})
        return UnbalancedTriangle(a, b, c, switched, frozenset({c}))
    raise StructureError(f"triangle ({a},{b},{c}) is balanced")


def find_unbalanced_triangle(gs: SignedGraph) -> UnbalancedTriangle:
    """Locate an unbalanced triangle in an unbalanced signed complete graph.

    A spanning-tree sign propagation yields an unbalanced fundamental
    cycle; while it is longer than a triangle, a chord splits it into two
    cycles of which exactly one is unbalanced, so the unbalanced piece
    shrinks to a triangle.
    """
    g = gs.graph
    if not g.is_complete() or g.n < 3:
        raise StructureError("need a complete graph on >= 3 vertices")
    balance = is_balanced(gs)
    if balance.balanced:
        raise StructureError("signed graph is balanced, no unbalanced triangle")

    # tree = star at vertex 1; find a violated non-tree edge
    cycle_path = None
    for u, v in g.sorted_edges():
        if u == 1:
            continue
        if gs.sign(u, v) != gs.sign(1, u) * gs.sign(1, v):
            cycle_path = [1, u, v]
            break
    if cycle_path is None:  # cannot happen for an unbalanced input
        raise StructureError("no unbalanced fundamental cycle found")

    def cycle_sign(path):
        total = 1
        for x, y in zip(path, path[1:] + path[:1]):
            total *= gs.sign(x, y)
        return total

    while len(cycle_path) > 3:
        head, second, third = cycle_path[0], cycle_path[1], cycle_path[2]
        tri = [head, second, third]
        if cycle_sign(tri) == -1:
            cycle_path = tri
        else:
            cycle_path = [head, third] + cycle_path[3:]
    a, b, c = sorted(cycle_path)
    return _normalize_triangle(gs, a, b, c)
