"""Arithmetic feasibility scan over strongly regular parameter tuples.

The filter keeps tuples passing the parameter identity, the handshake
parity, and adjacency-eigenvalue multiplicity integrality. Deeper
nonexistence knowledge (Krein conditions, absolute bounds, computer
classifications) is out of scope, so the tight-denominator scan marks any
tuple outside its embedded known-existence list for manual review instead
of suppressing it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import isqrt

from .errors import GraphError
from .graphs import SrgParameters
from .pairing import self_pairing_denominator

# Parameter tuples with denominator equal to the full bound whose graphs are
# known to exist; the reference catalogues confirm realizations for each.
KNOWN_TIGHT_TUPLES = frozenset(
    {(5, 2, 0, 1), (35, 18, 9, 9), (45, 12, 3, 3), (85, 20, 3, 5)}
)

SCAN_NOTE = (
    "feasibility filter is arithmetic only (parameter identity, parity, "
    "multiplicity integrality); tuples outside the embedded known-existence "
    "list are flagged needs_review rather than suppressed"
)


@dataclass(frozen=True)
class FeasibleTuple:
    """A parameter tuple passing the arithmetic feasibility conditions.

    multiplicities pairs the counts of the two adjacency eigenvalues
    (larger eigenvalue first); conference marks the irrational-eigenvalue
    case, where the two counts agree. denominator is the self-pairing
    denominator; needs_review marks tight tuples absent from the embedded
    known-existence list."""

    params: SrgParameters
    multiplicities: tuple[int, int]
    conference: bool
    denominator: int
    denominator_equals_bound: bool
    needs_review: bool = False


def _multiplicities(n: int, k: int, lam: int, mu: int) -> tuple[tuple[int, int], bool] | None:
    """Adjacency eigenvalue multiplicities, or None when not integral.

    The non-trivial adjacency eigenvalues are (lam - mu +- sqrt(disc))/2
    with disc = (lam-mu)^2 + 4(k-mu); their multiplicities
    (n-1 -+ q)/2 with q = (2k + (n-1)(lam-mu))/sqrt(disc) must be
    non-negative integers. Irrational eigenvalues force equal
    multiplicities: q = 0 and n odd (the conference case)."""
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    t = 2 * k + (n - 1) * (lam - mu)
    s = isqrt(disc)
    if s * s == disc:
        if s == 0 or t % s:
            return None
        q = t // s
        if (n - 1 - q) % 2:
            return None
        m_plus = (n - 1 - q) // 2
        m_minus = (n - 1 + q) // 2
        if m_plus < 0 or m_minus < 0:
            return None
        return (m_plus, m_minus), False
    if t != 0 or (n - 1) % 2:
        return None
    half = (n - 1) // 2
    return (half, half), True


def enumerate_feasible(n_max: int) -> list[FeasibleTuple]:
    """All arithmetically feasible primitive tuples with n <= n_max, sorted
    by (n, k, lam). Primitive means connected and co-connected:
    2 <= k <= n-2 and 1 <= mu <= k."""
    if n_max < 5:
        raise GraphError(f"need n_max >= 5, got {n_max}")
    out = []
    for n in range(5, n_max + 1):
        for k in range(2, n - 1):
            if (n * k) % 2:
                continue
            for lam in range(k):
                numerator = k * (k - lam - 1)
                if numerator % (n - k - 1):
                    continue
                mu = numerator // (n - k - 1)
                if not 1 <= mu <= k:
                    continue
                mult = _multiplicities(n, k, lam, mu)
                if mult is None:
                    continue
                pair, conference = mult
                params = SrgParameters(n, k, lam, mu)
                denominator = self_pairing_denominator(params)
                out.append(
                    FeasibleTuple(
                        params=params,
                        multiplicities=pair,
                        conference=conference,
                        denominator=denominator,
                        denominator_equals_bound=denominator
                        == params.eigenvalue_product,
                    )
                )
    return out


def scan_tight_denominators(n_max: int) -> list[FeasibleTuple]:
    """Feasible tuples whose self-pairing denominator equals the full
    spectral bound, with tuples outside the known-existence list flagged."""
    out = []
    for ft in enumerate_feasible(n_max):
        if not ft.denominator_equals_bound:
            continue
        p = ft.params
        known = (p.n, p.k, p.lam, p.mu) in KNOWN_TIGHT_TUPLES
        out.append(replace(ft, needs_review=not known))
    return out
