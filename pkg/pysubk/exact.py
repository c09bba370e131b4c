""" Exact k-domination: the verification oracle and the upper-bound side.

The oracle enumerates vertex sets of size c = 1, 2, ... as bitsets, in
lexicographic order, by depth-first search over ascending vertex indices.
Once a vertex has been passed over it can only be dominated from inside
the set, so a branch dies as soon as some passed-over vertex cannot reach
its quota k even if all remaining slots go to its neighbours. The first
set found at the smallest c is the lexicographically smallest minimum
k-dominating set.

Graphs above the vertex cap are refused with ``ResourceLimitError``; the
oracle never approximates.
"""
from numbers import Integral
from dataclasses import dataclass

from .constants import ORACLE_CAP
from .exceptions import DomainError, ResourceLimitError
from .invariants import sub_k, sub_k_regular, check_k


@dataclass(frozen=True)
class KDomWitness:
    k: int
    gamma_k: int
    witness: tuple


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(G, S):
    mask = 0
    for v in S:
        if not isinstance(v, Integral) or not 0 <= v < G.n:
            raise DomainError(f"Vertex {v!r} is not in V(G) = 0..{G.n - 1}")
        mask |= 1 << int(v)
    return mask


def is_k_dominating(G, S, k):
    """ True iff every vertex outside S has at least k neighbours in S. """
    k = check_k(k)
    mask = _mask_of(G, S)
    outside = ((1 << G.n) - 1) & ~mask
    return all((G.rows[v] & mask).bit_count() >= k for v in _bits(outside))


def _search(G, k, size):
    """ Yields every k-dominating set of exactly ``size`` vertices, as
    bitmasks, in lexicographic order. """
    n, rows = G.n, G.rows
    full = (1 << n) - 1

    def feasible(chosen, nxt, left):
        # vertices below nxt that were skipped can only get help from nxt..n-1
        avail = full & ~((1 << nxt) - 1)
        skipped = ((1 << nxt) - 1) & ~chosen
        for u in _bits(skipped):
            have = (rows[u] & chosen).bit_count()
            if have >= k:
                continue
            if have + min((rows[u] & avail).bit_count(), left) < k:
                return False
        return True

    def dfs(nxt, chosen, left):
        if left == 0:
            if feasible(chosen, n, 0):
                yield chosen
            return
        for v in range(nxt, n - left + 1):
            new = chosen | (1 << v)
            if feasible(new, v + 1, left - 1):
                yield from dfs(v + 1, new, left - 1)

    yield from dfs(0, 0, size)


def _check_cap(G, cap):
    if G.n > cap:
        raise ResourceLimitError(
            f"Graph has {G.n} vertices, above the oracle cap of {cap}; "
            f"raise the cap explicitly to run the exact search"
        )


def gamma_k(G, k, cap=ORACLE_CAP):
    """ Exact k-domination number with the lexicographically smallest
    minimum k-dominating set as witness.

    Parameters
    ----------
    G : Graph
    k : int
        Positive integer
    cap : int
        Largest vertex count the oracle accepts (default 32)

    Returns
    -------
    KDomWitness
    """
    k = check_k(k)
    _check_cap(G, cap)
    if G.n == 0:
        return KDomWitness(k, 0, ())
    if k > G.max_degree:
        # no outside vertex can collect k neighbours
        return KDomWitness(k, G.n, tuple(range(G.n)))

    for size in range(1, G.n + 1):
        for mask in _search(G, k, size):
            return KDomWitness(k, size, tuple(_bits(mask)))
    return KDomWitness(k, G.n, tuple(range(G.n)))


def minimum_k_dominating_sets(G, k, cap=ORACLE_CAP):
    """ Every minimum k-dominating set, lexicographically ordered. """
    best = gamma_k(G, k, cap)
    if best.gamma_k == G.n:
        yield best.witness
        return
    for mask in _search(G, k, best.gamma_k):
        yield tuple(_bits(mask))


def domination_number(G, cap=ORACLE_CAP):
    return gamma_k(G, 1, cap).gamma_k


def caro_roditty_upper(n, min_degree, k):
    """ Upper bound floor(rn / (r+1)) for the smallest r >= 1 with
    delta >= (r+1)k/r - 1, or None when no r <= n qualifies.

    The condition is compared in integers: delta*r >= (r+1)*k - r.
    """
    k = check_k(k)
    if n < 1 or min_degree < 0:
        raise DomainError(f"Need n >= 1 and delta >= 0, got n={n}, delta={min_degree}")
    slope = min_degree + 1 - k
    if slope <= 0:
        return None
    r = -(-k // slope)
    if r > n:
        return None
    return r * n // (r + 1)


def cubic_interval(n, k):
    """ (lower, upper) on gamma_k of a cubic graph of order n, k in {1, 2, 3}. """
    if k not in (1, 2, 3):
        raise DomainError(f"Cubic intervals exist for k in {{1, 2, 3}}, got {k!r}")
    return sub_k_regular(n, 3, k), caro_roditty_upper(n, 3, k)


def equality_check(G, k, cap=ORACLE_CAP):
    """ Whether sub_k(G) = gamma_k(G). """
    return sub_k(G, k) == gamma_k(G, k, cap).gamma_k


def attach_oracle(report, G, cap=ORACLE_CAP):
    """ Adds gamma_k, the equality flag and the witness to a BoundReport. """
    w = gamma_k(G, report.k, cap)
    report.gamma_k = w.gamma_k
    report.equality = report.sub_k == w.gamma_k
    report.witness = w.witness
    return report
