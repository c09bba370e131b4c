""" Degree-sequence invariants: the sub-k-domination number and the lower
bounds on the k-domination number that can be read off a degree sequence.

Everything here is exact: integers, numpy int64 arrays and
``fractions.Fraction``; there is no floating point in this module.

sub_k(D) = min{ t : t + (1/k) * (d_1 + ... + d_t) >= n }

is evaluated as the integer condition ``k*t + S_t >= k*n`` over the prefix
sums ``S_t`` of the non-increasing degree sequence, in a single vectorised
pass, after a counting sort of the degrees (degrees lie in 0..n-1).

Note on the corona of a star
----------------------------
For the corona of K_{1,n-1} (order 2n-1, degrees {n-1, 2^(n-1), 1^(n-1)})
the single-stratum bound equals ((2k-1)n - (k-3)) / (2+k). The same quantity
is sometimes quoted with numerator ((2k-1)n - (k-2)) when its difference to
the Fink-Jacobson bound is expanded; the value computed here follows from
plugging the degree sequence into the bound and agrees with (k-3). The
difference returned by ``corona_comparison`` is computed from the two exact
values and does not depend on either printed closed form.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .exceptions import DomainError, PreconditionError

# Above this k*n the vectorised int64 scan could overflow
_INT64_SAFE = 2**62


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """ Non-increasing degree sequence with prefix sums.

    Parameters
    ----------
    degrees : np.ndarray
        d_1 >= d_2 >= ... >= d_n (int64)
    prefix : np.ndarray
        prefix[t] = d_1 + ... + d_t, prefix[0] = 0 (int64, length n+1)
    level_counts : np.ndarray
        level_counts[j] = number of vertices of degree j, j = 0..Delta
    """
    degrees: np.ndarray
    prefix: np.ndarray
    level_counts: np.ndarray

    @property
    def n(self):
        return int(self.degrees.size)

    @property
    def max_degree(self):
        return int(self.degrees[0]) if self.n else 0

    @property
    def min_degree(self):
        return int(self.degrees[-1]) if self.n else 0

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return np.array_equal(self.degrees, other.degrees)

    def __repr__(self):
        return f"DegreeSequence({self.degrees.tolist()})"

    @classmethod
    def from_degrees(cls, degrees):
        """ Validates and counting-sorts an arbitrary list of degrees. """
        arr = np.asarray(degrees)
        if arr.size == 0:
            arr = arr.astype(np.int64)
        if arr.ndim != 1 or not np.issubdtype(arr.dtype, np.integer):
            raise DomainError("Degrees must be a flat sequence of integers")
        arr = arr.astype(np.int64, copy=False)
        n = arr.size
        if n and (arr.min() < 0 or arr.max() > n - 1):
            raise DomainError(f"Degrees must lie in 0..{n - 1} for a sequence of length {n}")
        counts = np.bincount(arr, minlength=1) if n else np.zeros(1, dtype=np.int64)
        return cls.from_counts(counts)

    @classmethod
    def from_counts(cls, level_counts):
        """ Builds the sequence from a degree histogram (index = degree). """
        counts = np.asarray(level_counts, dtype=np.int64)
        if counts.ndim != 1 or (counts < 0).any():
            raise DomainError("Level counts must be a flat sequence of nonnegative integers")
        nz = np.flatnonzero(counts)
        counts = counts[:nz[-1] + 1] if nz.size else counts[:1]
        # counting sort: emit levels from the top down
        levels = np.arange(counts.size, dtype=np.int64)[::-1]
        degrees = np.repeat(levels, counts[::-1])
        prefix = np.zeros(degrees.size + 1, dtype=np.int64)
        np.cumsum(degrees, out=prefix[1:])
        for arr in (degrees, prefix, counts):
            arr.setflags(write=False)
        return cls(degrees=degrees, prefix=prefix, level_counts=counts)

    @classmethod
    def from_graph(cls, G):
        return cls.from_degrees(G.degrees)


def as_sequence(D):
    """ Accepts a DegreeSequence, a Graph or a plain list of degrees. """
    if isinstance(D, DegreeSequence):
        return D
    if hasattr(D, 'degrees') and hasattr(D, 'rows'):
        return DegreeSequence.from_graph(D)
    return DegreeSequence.from_degrees(D)


def check_k(k):
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return int(k)


##### sub_k #####

def sub_k(D, k):
    """ Sub-k-domination number of a degree sequence (k = 1: Slater's sub). """
    k = check_k(k)
    D = as_sequence(D)
    n = D.n
    if n == 0:
        raise DomainError("sub_k is undefined for an empty degree sequence")

    if k * n >= _INT64_SAFE:
        return sub_k_from_counts(D.level_counts.tolist(), k)

    t = np.arange(1, n + 1, dtype=np.int64)
    # t = n always qualifies, so argmax finds a True entry
    hit = k * t + D.prefix[1:] >= k * n
    return int(np.argmax(hit)) + 1


def slater_bound(D):
    return sub_k(D, 1)


def sub_k_from_counts(level_counts, k):
    """ sub_k from a degree histogram in O(Delta) steps.

    Inside a block of c vertices of equal degree d starting after position
    t0 with prefix sum S0, the condition k*t + S0 + (t - t0)*d >= k*n is linear
    in t, so the first qualifying t is a ceiling division.
    """
    k = check_k(k)
    n = int(sum(level_counts))
    if n == 0:
        raise DomainError("sub_k is undefined for an empty degree sequence")

    target = k * n
    t0, s0 = 0, 0
    for d in range(len(level_counts) - 1, -1, -1):
        c = int(level_counts[d])
        if not c:
            continue
        need = target - s0 + t0 * d
        t = max(t0 + 1, -(-need // (k + d)))
        if t <= t0 + c:
            return t
        t0 += c
        s0 += c * d
    return n


def perturb_counts(level_counts, changes):
    """ Applies degree changes to a histogram without rebuilding anything.

    Parameters
    ----------
    level_counts : sequence of int
        Histogram (index = degree)
    changes : iterable of (degree, delta)
        One entry per affected vertex: a vertex of degree ``degree`` moves to
        ``degree + delta``; ``delta=None`` removes the vertex

    Returns
    -------
    list of int
    """
    counts = [int(c) for c in level_counts]
    for d, delta in changes:
        if d >= len(counts) or counts[d] == 0:
            raise DomainError(f"No vertex of degree {d} to change")
        counts[d] -= 1
        if delta is None:
            continue
        new = d + delta
        if new < 0:
            raise DomainError(f"Degree {d} cannot change by {delta}")
        if new >= len(counts):
            counts.extend([0] * (new + 1 - len(counts)))
        counts[new] += 1
    return counts


def sub_k_regular(n, r, k):
    """ Closed form for r-regular graphs: ceil(kn / (r + k)). """
    k = check_k(k)
    if n < 1 or not 0 <= r <= n - 1:
        raise DomainError(f"Need n >= 1 and 0 <= r <= n-1, got n={n}, r={r}")
    return -(-k * n // (r + k))


def kn_equality_threshold(n, k):
    """ Whether sub_k(K_n) = gamma_k(K_n) = k, i.e. n > (k-1)^2. """
    k = check_k(k)
    if k > n - 1:
        raise DomainError(f"Need 1 <= k <= n-1, got n={n}, k={k}")
    return n > (k - 1) ** 2


##### Fink-Jacobson #####

def fink_jacobson_ratio(n, max_degree, k):
    """ The exact rational kn / (Delta + k). """
    k = check_k(k)
    if n < 1 or max_degree < 0:
        raise DomainError(f"Need n >= 1 and Delta >= 0, got n={n}, Delta={max_degree}")
    return Fraction(k * n, max_degree + k)


def fink_jacobson_bound(n, max_degree, k):
    """ ceil(kn / (Delta + k)), the smallest integer meeting the bound. """
    r = fink_jacobson_ratio(n, max_degree, k)
    return -(-r.numerator // r.denominator)


def max_degree_bound(n, max_degree):
    """ The classical n / (Delta + 1) bound on the domination number. """
    return fink_jacobson_ratio(n, max_degree, 1)


##### Stratified bound #####

@dataclass(frozen=True)
class StratifiedParams:
    """ Strata of the top t degree levels Delta, Delta-1, ..., Delta-t+1.

    ``level_counts[i-1]`` is n_{Delta+1-i} (zero for absent levels), ``s_t``
    their sum and ``delta_t`` the degree d_{s_t+1} just below the strata.
    """
    t: int
    level_counts: tuple
    s_t: int
    delta_t: int


class StratifiedBound(NamedTuple):
    t: int
    value: Fraction


def _check_t(D, t):
    if not isinstance(t, (int, np.integer)) or not 1 <= t <= D.max_degree:
        raise DomainError(f"Stratum count must lie in 1..Delta = 1..{D.max_degree}, got {t!r}")


def stratified_params(D, t):
    D = as_sequence(D)
    _check_t(D, t)
    delta = D.max_degree
    counts = tuple(int(D.level_counts[delta + 1 - i]) for i in range(1, t + 1))
    s_t = sum(counts)
    if s_t + 1 > D.n:
        raise PreconditionError(f"s_t + 1 = {s_t + 1} exceeds n = {D.n}; Delta_t is undefined")
    return StratifiedParams(t=int(t), level_counts=counts, s_t=s_t, delta_t=int(D.degrees[s_t]))


def _guard_holds(D, k, s_t, guard):
    S = int(D.prefix[s_t])
    if guard == 'strict':
        return s_t + S < D.n
    if guard == 'relaxed':
        return k * s_t + S < k * D.n
    raise DomainError(f"guard must be 'strict' or 'relaxed', got {guard!r}")


def _stratified_value(D, k, s_t, delta_t):
    # sum_i (Delta + 1 - Delta_t - i) n_{Delta+1-i} telescopes to S_{s_t} - Delta_t * s_t
    excess = int(D.prefix[s_t]) - delta_t * s_t
    return Fraction(k * D.n - excess, k + delta_t)


def stratified_bound(D, k, t, guard='strict'):
    """ Lower bound on sub_k from the counts of the top t degree levels.

    Parameters
    ----------
    D : DegreeSequence (or Graph / list of degrees)
    k : int
        Domination multiplicity (>= 1)
    t : int
        Number of strata, 1 <= t <= Delta
    guard : str
        'strict' requires s_t + S_{s_t} < n (independent of k); 'relaxed'
        requires s_t + S_{s_t} / k < n, which also guarantees s_t < sub_k

    Returns
    -------
    Fraction, to be ceiled by the caller

    Raises
    ------
    PreconditionError
        If the guard fails or Delta_t is undefined
    """
    k = check_k(k)
    D = as_sequence(D)
    p = stratified_params(D, t)
    if not _guard_holds(D, k, p.s_t, guard):
        raise PreconditionError(
            f"Guard ({guard}) fails for t={t}: s_t={p.s_t}, S_s_t={int(D.prefix[p.s_t])}, n={D.n}, k={k}"
        )
    return _stratified_value(D, k, p.s_t, p.delta_t)


def _valid_strata(D, k, guard):
    """ Yields (t, s_t, Delta_t) for every t whose guard holds, in order.

    s_t and S_{s_t} never decrease with t, so the valid t form a prefix.
    """
    delta = D.max_degree
    s_t = 0
    for t in range(1, delta + 1):
        s_t += int(D.level_counts[delta + 1 - t])
        if s_t + 1 > D.n or not _guard_holds(D, k, s_t, guard):
            return
        yield t, s_t, int(D.degrees[s_t])


def all_stratified_bounds(D, k, guard='strict'):
    """ {t: bound} for every t satisfying the guard. """
    k = check_k(k)
    D = as_sequence(D)
    return {t: _stratified_value(D, k, s_t, dt) for t, s_t, dt in _valid_strata(D, k, guard)}


def _best_of(D, bounds):
    if not bounds:
        return None
    t = max(bounds)
    # empty levels at the bottom of the strata leave s_t, Delta_t and the
    # bound unchanged; report the smallest t giving the same strata
    delta = D.max_degree
    while t > 1 and D.level_counts[delta + 1 - t] == 0:
        t -= 1
    return StratifiedBound(t, bounds[t])


def best_stratified_bound(D, k, guard='strict'):
    """ Bound at the largest valid t (the strongest one), or None. """
    D = as_sequence(D)
    return _best_of(D, all_stratified_bounds(D, k, guard))


def corollary_bound(D, k):
    """ Single-stratum bound (kn - n_Delta (Delta - Delta')) / (Delta' + k)
    under its k-aware hypothesis n_Delta + Delta n_Delta / k < n. """
    return stratified_bound(D, k, 1, guard='relaxed')


class CoronaComparison(NamedTuple):
    stratified: Fraction
    fink_jacobson: Fraction
    difference: Fraction


def corona_closed_form(n, k):
    """ ((2k-1)n - (k-3)) / (2+k) """
    return Fraction((2 * k - 1) * n - (k - 3), 2 + k)


def corona_comparison(n, k):
    """ Stratified vs Fink-Jacobson bound on the corona of K_{1,n-1}. """
    k = check_k(k)
    if n < 4:
        raise DomainError(f"Need n >= 4 so that Delta > Delta', got n={n}")
    counts = np.zeros(n, dtype=np.int64)
    counts[n - 1] = 1
    counts[2] = n - 1
    counts[1] = n - 1
    D = DegreeSequence.from_counts(counts)
    strat = stratified_bound(D, k, 1, guard='relaxed')
    fj = fink_jacobson_ratio(D.n, D.max_degree, k)
    return CoronaComparison(strat, fj, strat - fj)


##### Report #####

def ceil_fraction(x):
    return -(-x.numerator // x.denominator)


@dataclass
class BoundReport:
    """ Every lower (and optionally upper) bound computed for one graph and k.

    ``stratified`` is the best stratified bound (attained at ``stratified_t``),
    ``stratified_by_t`` holds the bound for every t whose guard holds.

    ``tightest`` names the closed-form lower bound with the larger ceiling:
    'stratified' when it strictly beats the Fink-Jacobson ceiling.
    """
    graph_id: object
    k: int
    n: Optional[int] = None
    m: Optional[int] = None
    sub_k: Optional[int] = None
    fink_jacobson: Optional[int] = None
    stratified: Optional[Fraction] = None
    stratified_t: Optional[int] = None
    stratified_by_t: dict = field(default_factory=dict)
    caro_roditty: Optional[int] = None
    tightest: Optional[str] = None
    k_exceeds_max_degree: Optional[bool] = None
    gamma_k: Optional[int] = None
    equality: Optional[bool] = None
    witness: Optional[tuple] = None
    criticality: object = None
    error: Optional[str] = None

    @property
    def violations(self):
        """ Broken theorem-level inequalities (expected to stay empty). """
        out = []
        if self.sub_k is None:
            return out
        if self.fink_jacobson > self.sub_k:
            out.append('fink_jacobson > sub_k')
        if self.stratified is not None:
            if self.fink_jacobson > ceil_fraction(self.stratified):
                out.append('fink_jacobson > stratified')
            if self.stratified > self.sub_k:
                out.append('stratified > sub_k')
        if self.gamma_k is not None and self.sub_k > self.gamma_k:
            out.append('sub_k > gamma_k')
        if self.gamma_k is not None and self.caro_roditty is not None and self.gamma_k > self.caro_roditty:
            out.append('gamma_k > caro_roditty')
        if self.criticality is not None:
            out.extend(f"{name} check failed" for name in self.criticality.failures)
        return out


def bound_report(D, k, graph_id=None, m=None):
    """ Computes the full lower-bound suite for one degree sequence and k. """
    k = check_k(k)
    D = as_sequence(D)
    sub = sub_k(D, k)
    fj = fink_jacobson_bound(D.n, D.max_degree, k)
    strata = all_stratified_bounds(D, k)
    best = _best_of(D, strata)
    if best is not None and ceil_fraction(best.value) > fj:
        tightest = 'stratified'
    else:
        tightest = 'fink_jacobson'
    return BoundReport(
        graph_id=graph_id, k=k, n=D.n, m=m, sub_k=sub, fink_jacobson=fj,
        stratified=best.value if best else None, stratified_t=best.t if best else None,
        stratified_by_t=strata, tightest=tightest,
        k_exceeds_max_degree=k > D.max_degree
    )
