"""Exact integer and rational linear algebra.

Everything here is exact: arbitrary-precision integers and
fractions.Fraction. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import GraphError, InternalCheckError
from .graphs import Graph, SignedGraph


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; entries stored row-major as nested tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise GraphError("matrix needs at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise GraphError("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.entries)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise GraphError(f"cannot multiply {self.shape()} by {other.shape()}")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries)
        )

    def mul_vec(self, vec):
        """Matrix times column vector; works for int or Fraction entries."""
        if len(vec) != self.cols:
            raise GraphError(f"vector length {len(vec)} != {self.cols} columns")
        return [sum(a * x for a, x in zip(row, vec)) for row in self.entries]

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def add(self, other: IntMatrix) -> IntMatrix:
        if self.shape() != other.shape():
            raise GraphError("shape mismatch")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        )

    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def trace(self) -> int:
        if self.rows != self.cols:
            raise GraphError("trace of a non-square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


def laplacian(g: Graph | SignedGraph) -> IntMatrix:
    """Laplacian D - A; for signed graphs the adjacency entries carry the
    edge signs, so a negative edge contributes +1 off-diagonal."""
    signed = isinstance(g, SignedGraph)
    base = g.graph if signed else g
    n = base.n
    m = [[0] * n for _ in range(n)]
    for v in base.vertices():
        m[v - 1][v - 1] = base.degree(v)
    for u, v in base.edges:
        s = -1 if signed and (u, v) in g.negative_edges else 1
        m[u - 1][v - 1] = -s
        m[v - 1][u - 1] = -s
    return IntMatrix.from_rows(m)


def determinant(m: IntMatrix) -> int:
    """Fraction-free Bareiss elimination; exact for integer matrices."""
    if m.rows != m.cols:
        raise GraphError("determinant of a non-square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """U @ matrix @ V == S with U, V unimodular and S diagonal, the diagonal
    non-negative with each entry dividing the next."""

    matrix: IntMatrix
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.S[i, i] for i in range(min(self.S.rows, self.S.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form with transforms.

    Pivot rule: the smallest non-zero absolute value in the working
    submatrix, ties broken row-major. Deterministic for a given input.
    """
    rows, cols = m.rows, m.cols
    s = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        if i != j:
            s[i], s[j] = s[j], s[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in s:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, factor):
        # row dst += factor * row src
        srow, urow = s[src], u[src]
        sdst, udst = s[dst], u[dst]
        for j in range(cols):
            sdst[j] += factor * srow[j]
        for j in range(rows):
            udst[j] += factor * urow[j]

    def add_col(dst, src, factor):
        for row in s:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def pivot_to(t):
        """Move the smallest non-zero |entry| of s[t:][t:] to (t, t)."""
        best = 0
        pi = pj = -1
        for i in range(t, rows):
            for j in range(t, cols):
                a = abs(s[i][j])
                if a and (best == 0 or a < best):
                    best, pi, pj = a, i, j
        if best == 0:
            return False
        swap_rows(t, pi)
        swap_cols(t, pj)
        return True

    limit = min(rows, cols)
    for t in range(limit):
        if not pivot_to(t):
            break
        while True:
            # Euclidean elimination of row and column t
            while True:
                for i in range(t + 1, rows):
                    if s[i][t]:
                        add_row(i, t, -(s[i][t] // s[t][t]))
                leftover = [i for i in range(t + 1, rows) if s[i][t]]
                if leftover:
                    # remainder strictly smaller than the pivot: promote it
                    i = min(leftover, key=lambda x: abs(s[x][t]))
                    swap_rows(t, i)
                    continue
                for j in range(t + 1, cols):
                    if s[t][j]:
                        add_col(j, t, -(s[t][j] // s[t][t]))
                leftover = [j for j in range(t + 1, cols) if s[t][j]]
                if leftover:
                    j = min(leftover, key=lambda x: abs(s[t][x]))
                    swap_cols(t, j)
                    continue
                break
            # pivot must divide everything that remains
            d = s[t][t]
            offender = None
            for i in range(t + 1, rows):
                if any(x % d for x in s[i][t + 1 :]):
                    offender = i
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if s[t][t] < 0:
            for j in range(cols):
                s[t][j] = -s[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]

    result = SnfResult(
        matrix=m,
        U=IntMatrix.from_rows(u),
        S=IntMatrix.from_rows(s),
        V=IntMatrix.from_rows(v),
    )
    _check_snf(result)
    return result


def _check_snf(r: SnfResult) -> None:
    s = r.S
    diag = r.diagonal
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j and s[i, j] != 0:
                raise InternalCheckError("SNF result not diagonal")
    for a, b in zip(diag, diag[1:]):
        if a < 0 or b < 0 or (a == 0 and b != 0) or (a != 0 and b % a != 0):
            raise InternalCheckError(f"SNF diagonal {diag} violates the divisibility chain")
    if (r.U @ r.matrix) @ r.V != s:
        raise InternalCheckError("SNF transform identity U @ M @ V == S failed")


def kernel_basis_rows(snf: SnfResult) -> list[tuple[int, ...]]:
    """Basis of the left integer kernel {x : x @ M == 0}: the rows of U
    matched with zero rows of S."""
    r = snf.rank
    return [snf.U.row(i) for i in range(r, snf.U.rows)]


def solve_rational(m: IntMatrix, b, snf: SnfResult | None = None) -> list[Fraction] | None:
    """Exact rational solution of m @ f == b, or None when inconsistent.

    Computed through the Smith transforms: with U m V = S, the system
    becomes S g = U b, solved coordinate-wise; zero rows of S demand zero
    right-hand entries. A precomputed decomposition of m may be passed in.
    """
    if len(b) != m.rows:
        raise GraphError(f"right-hand side length {len(b)} != {m.rows} rows")
    if snf is None:
        snf = smith_normal_form(m)
    c = snf.U.mul_vec(list(b))
    diag = snf.diagonal
    g = [Fraction(0)] * m.cols
    for i in range(m.rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            g[i] = Fraction(c[i], d)
    return snf.V.mul_vec(g)


# ---------------------------------------------------------------------------
# Polynomials (coefficients low to high)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over exact numbers (int / Fraction)."""

    coeffs: tuple

    @classmethod
    def make(cls, coeffs) -> Polynomial:
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if self.is_zero():
            raise GraphError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial.make(i * c for i, c in enumerate(self.coeffs) if i)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        return Polynomial.make(prod)

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Division over the rationals."""
        if other.is_zero():
            raise GraphError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.leading())
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        while len(rem) >= len(other.coeffs) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(other.coeffs):
                break
            shift = len(rem) - len(other.coeffs)
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * Fraction(c)
        return Polynomial.make(quot), Polynomial.make(rem)

    def primitive_integer(self) -> Polynomial:
        """Clear denominators, divide out the content, make the leading
        coefficient positive."""
        if self.is_zero():
            return self
        coeffs = [Fraction(c) for c in self.coeffs]
        denom = 1
        for c in coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = [int(c * denom) for c in coeffs]
        content = 0
        for c in ints:
            content = gcd(content, c)
        ints = [c // content for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return Polynomial.make(ints)

    def strip_zero_roots(self) -> tuple[Polynomial, int]:
        """Factor out the largest power of x; returns (quotient, power)."""
        if self.is_zero():
            raise GraphError("zero polynomial")
        v = 0
        while self.coeffs[v] == 0:
            v += 1
        return Polynomial.make(self.coeffs[v:]), v


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Gcd over the rationals, returned as a primitive integer polynomial
    with positive leading coefficient."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r.primitive_integer()
    return a.primitive_integer()


def squarefree_part(p: Polynomial) -> Polynomial:
    """p with all repeated roots collapsed to multiplicity one."""
    if p.is_zero():
        raise GraphError("zero polynomial")
    if p.degree == 0:
        return Polynomial.make([1])
    g = polynomial_gcd(p, p.derivative())
    q, r = p.divmod(g)
    if not r.is_zero():
        raise InternalCheckError("gcd does not divide the polynomial")
    return q.primitive_integer()


def char_poly(m: IntMatrix) -> Polynomial:
    """Characteristic polynomial det(xI - m), monic with integer
    coefficients, by the Faddeev-LeVerrier recurrence.

    For an integer matrix every division in the recurrence is exact, so
    the computation stays in arbitrary-precision integers.
    """
    if m.rows != m.cols:
        raise GraphError("characteristic polynomial of a non-square matrix")
    n = m.rows
    ident = IntMatrix.identity(n)
    coeffs = [1]  # coefficient of x^n
    work = m
    for k in range(1, n + 1):
        t = work.trace()
        if t % k:
            raise InternalCheckError("Faddeev-LeVerrier division was not exact")
        c = -(t // k)
        coeffs.append(c)
        if k < n:
            work = m @ work.add(ident.scale(c))
    return Polynomial.make(reversed(coeffs))


def distinct_nonzero_eigenvalue_product(m: IntMatrix) -> Fraction:
    """Product of the distinct non-zero eigenvalues, exactly.

    Strip the zero roots off the characteristic polynomial, take the
    square-free part q, and read the product off as
    (-1)^deg(q) * q(0) / lead(q).
    """
    if m.is_zero():
        raise GraphError("zero matrix has no non-zero eigenvalues")
    p, _ = char_poly(m).strip_zero_roots()
    if p.degree == 0:
        raise GraphError("matrix has no non-zero eigenvalues")
    q = squarefree_part(p)
    sign = -1 if q.degree % 2 else 1
    return Fraction(sign * q.coeffs[0], q.leading())


def integer_roots(p: Polynomial, bound: int) -> tuple[list[tuple[int, int]], Polynomial]:
    """Integer roots in [-bound, bound] with multiplicities, plus the
    deflated remainder.

    The caller supplies the search bound; for a symmetric matrix the
    Gershgorin row-sum bound covers every eigenvalue, so this finds the
    complete rational spectrum of a characteristic polynomial.
    """
    if p.is_zero():
        raise GraphError("zero polynomial")
    core, power = p.strip_zero_roots()
    roots = [(0, power)] if power else []
    core = core.primitive_integer()
    for root in range(-bound, bound + 1):
        if root == 0:
            continue
        mult = 0
        while core.degree > 0 and core.evaluate(root) == 0:
            core, rem = core.divmod(Polynomial.make([-root, 1]))
            core = core.primitive_integer()
            if not rem.is_zero():
                raise InternalCheckError("deflation by a verified root failed")
            mult += 1
        if mult:
            roots.append((root, mult))
    roots.sort()
    return roots, core


def gershgorin_bound(m: IntMatrix) -> int:
    """Every eigenvalue of a symmetric integer matrix lies within this
    bound in absolute value."""
    return max(sum(abs(x) for x in row) for row in m.entries)
