""" sub_k-critical graphs with respect to edge deletion (ED), edge addition
(EA) and vertex deletion (VD), plus checks of the structure such graphs are
known to have.

G is ED-critical if every edge deletion raises sub_k, EA-critical if every
edge addition lowers it, VD-critical if every vertex deletion raises it.
The quantifiers range over E(G), E(complement) and V(G); an edgeless graph
is therefore ED-critical and a complete graph EA-critical vacuously, which
the report flags separately.

Index-based checks use the canonical degree ordering v_1, ..., v_n: degree
non-increasing, ties broken by ascending label. With t = sub_k(G) the head
is {v_1..v_t} and the tail {v_t+1..v_n}.

Each mutation's sub_k is evaluated either from scratch (rebuild the graph,
recount degrees) or incrementally by moving one to three entries of the
degree histogram; both give the same numbers.
"""
from enum import Enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .constants import CRITICALITY_CHECKS
from .graph import delete_edge, add_edge, delete_vertex
from .invariants import DegreeSequence, sub_k, sub_k_from_counts, perturb_counts, check_k


class Verdict(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    NOT_APPLICABLE = 'not-applicable'


class Mutation(NamedTuple):
    kind: str  # 'delete_edge', 'add_edge' or 'delete_vertex'
    target: object


def _level_counts(G):
    return DegreeSequence.from_graph(G).level_counts.tolist()


def sub_k_after(G, k, mutation, counts=None):
    """ sub_k of the mutated graph via the degree histogram only.

    The null graph left by deleting the last vertex has sub_k = 0.
    """
    counts = _level_counts(G) if counts is None else counts
    deg = G.degrees
    if mutation.kind in ('delete_edge', 'add_edge'):
        u, v = mutation.target
        delta = -1 if mutation.kind == 'delete_edge' else 1
        changes = [(int(deg[u]), delta), (int(deg[v]), delta)]
    elif mutation.kind == 'delete_vertex':
        v = mutation.target
        changes = [(int(deg[v]), None)] + [(int(deg[w]), -1) for w in G.neighbors[v]]
    else:
        raise ValueError(f"Unknown mutation {mutation.kind!r}")
    new = perturb_counts(counts, changes)
    return sub_k_from_counts(new, k) if sum(new) else 0


def _sub_k_rebuilt(G, k, mutation):
    if mutation.kind == 'delete_edge':
        H = delete_edge(G, mutation.target)
    elif mutation.kind == 'add_edge':
        H = add_edge(G, mutation.target)
    else:
        H = delete_vertex(G, mutation.target)
    return sub_k(H, k) if H.n else 0


def _mutations(G, kind):
    if kind == 'delete_edge':
        return [Mutation(kind, e) for e in G.edges()]
    if kind == 'add_edge':
        return [Mutation(kind, e) for e in G.non_edges()]
    return [Mutation(kind, v) for v in range(G.n)]


def _mutated_values(G, k, kind, incremental=True):
    """ [(mutation, sub_k after mutation)] over every mutation of one kind. """
    if incremental:
        counts = _level_counts(G)
        return [(mu, sub_k_after(G, k, mu, counts)) for mu in _mutations(G, kind)]
    return [(mu, _sub_k_rebuilt(G, k, mu)) for mu in _mutations(G, kind)]


def _first_failure(G, k, kind, incremental=True):
    base = sub_k(G, k)
    for mu, after in _mutated_values(G, k, kind, incremental):
        raises = after > base
        if kind == 'add_edge':
            raises = after < base
        if not raises:
            return mu
    return None


def is_ed_critical(G, k, incremental=True):
    check_k(k)
    return _first_failure(G, k, 'delete_edge', incremental) is None


def is_ea_critical(G, k, incremental=True):
    check_k(k)
    return _first_failure(G, k, 'add_edge', incremental) is None


def is_vd_critical(G, k, incremental=True):
    check_k(k)
    return _first_failure(G, k, 'delete_vertex', incremental) is None


def vd_gap(G, v, k):
    """ sub_k(G - v) - sub_k(G). """
    return sub_k_after(G, k, Mutation('delete_vertex', v)) - sub_k(G, k)


##### Structural checks #####

def _head_tail(G, k):
    t = sub_k(G, k)
    order = G.degree_order()
    return t, order[:t], order[t:]


def _mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _verdict(ok):
    return Verdict.PASS if ok else Verdict.FAIL


def _tail_independent(G, k):
    _, _, tail = _head_tail(G, k)
    tail_mask = _mask(tail)
    return _verdict(all(not (G.rows[v] & tail_mask) for v in tail))


def _edge_deletion_gap(G, k):
    D = DegreeSequence.from_graph(G)
    t = sub_k(D, k)
    floor_ok = (k * t + int(D.prefix[t])) // k == G.n
    gaps_ok = all(after == t + 1 for _, after in _mutated_values(G, k, 'delete_edge'))
    return _verdict(floor_ok and gaps_ok)


def _low_degree_clique(G, k):
    D = DegreeSequence.from_graph(G)
    t = sub_k(D, k)
    d_t = int(D.degrees[t - 1])
    low = [v for v in range(G.n) if G.degrees[v] < d_t]
    return _verdict(all(G.rows[u] >> v & 1 for i, u in enumerate(low) for v in low[i + 1:]))


def _edge_addition_gap(G, k):
    t = sub_k(G, k)
    return _verdict(all(after == t - 1 for _, after in _mutated_values(G, k, 'add_edge')))


def _tail_attachment(G, k):
    _, head, tail = _head_tail(G, k)
    head_mask = _mask(head)
    return _verdict(all((G.rows[v] & head_mask).bit_count() >= k + 1 for v in tail))


def check_tail_independent(G, k):
    """ ED-critical G: no edge joins two tail vertices, so n - sub_k <= alpha(G). """
    if not is_ed_critical(G, k):
        return Verdict.NOT_APPLICABLE
    return _tail_independent(G, k)


def check_edge_deletion_gap(G, k):
    """ ED-critical G without isolates: floor(t + S_t / k) = n, and every edge
    deletion raises sub_k by exactly one. """
    if G.isolates() or not is_ed_critical(G, k):
        return Verdict.NOT_APPLICABLE
    return _edge_deletion_gap(G, k)


def check_low_degree_clique(G, k):
    """ EA-critical G: vertices of degree below d_t are pairwise adjacent. """
    if not is_ea_critical(G, k):
        return Verdict.NOT_APPLICABLE
    return _low_degree_clique(G, k)


def check_edge_addition_gap(G, k):
    """ EA-critical G without isolates: every edge addition lowers sub_k by exactly one. """
    if G.isolates() or not is_ea_critical(G, k):
        return Verdict.NOT_APPLICABLE
    return _edge_addition_gap(G, k)


def check_tail_attachment(G, k):
    """ VD-critical G: every tail vertex has at least k+1 neighbours in the head. """
    if not is_vd_critical(G, k):
        return Verdict.NOT_APPLICABLE
    return _tail_attachment(G, k)


def tail_independent_all_orderings(G, k):
    """ Whether the tail is independent for every degree ordering, not only
    the canonical one.

    Only the vertices tied at degree d_t can move between head and tail.
    With H above, M at and T below d_t, the tail holds T plus
    r = |M| - (t - |H|) vertices of M, so the property holds for all
    orderings iff T is independent, no T-M edge exists when r >= 1, and M is
    independent when r >= 2.
    """
    D = DegreeSequence.from_graph(G)
    t = sub_k(D, k)
    if t == G.n:
        return True
    d_t = int(D.degrees[t - 1])
    above = [v for v in range(G.n) if G.degrees[v] > d_t]
    tied = [v for v in range(G.n) if G.degrees[v] == d_t]
    below = [v for v in range(G.n) if G.degrees[v] < d_t]
    r = len(tied) - (t - len(above))
    below_mask, tied_mask = _mask(below), _mask(tied)

    if any(G.rows[v] & below_mask for v in below):
        return False
    if r >= 1 and any(G.rows[v] & tied_mask for v in below):
        return False
    if r >= 2 and any(G.rows[v] & tied_mask for v in tied):
        return False
    return True


##### Report #####

# check -> (structural test, criticality it assumes, needs an isolate-free graph)
_CHECKS = {
    'tail_independent': (_tail_independent, 'ed', False),
    'edge_deletion_gap': (_edge_deletion_gap, 'ed', True),
    'low_degree_clique': (_low_degree_clique, 'ea', False),
    'edge_addition_gap': (_edge_addition_gap, 'ea', True),
    'tail_attachment': (_tail_attachment, 'vd', False),
}

@dataclass
class CriticalityReport:
    graph_id: object
    k: int
    n: int
    m: int
    sub_k: int
    ed_critical: bool
    ea_critical: bool
    vd_critical: bool
    ed_vacuous: bool
    ea_vacuous: bool
    prop_checks: dict = field(default_factory=dict)
    counterexample: dict = field(default_factory=dict)
    tail_independent_all_orderings: Optional[bool] = None

    @property
    def any_critical(self):
        return self.ed_critical or self.ea_critical or self.vd_critical

    @property
    def failures(self):
        return [name for name, v in self.prop_checks.items() if v is Verdict.FAIL]


def criticality_report(G, k, graph_id=None, incremental=True):
    """ Criticality flags, structural checks and counterexamples for one graph. """
    k = check_k(k)
    counter = {}
    for name, kind in [('ed', 'delete_edge'), ('ea', 'add_edge'), ('vd', 'delete_vertex')]:
        mu = _first_failure(G, k, kind, incremental)
        if mu is not None:
            counter[name] = mu

    flags = {name: name not in counter for name in ('ed', 'ea', 'vd')}
    ed, ea, vd = flags['ed'], flags['ea'], flags['vd']
    isolates = bool(G.isolates())
    checks = {}
    for name in CRITICALITY_CHECKS:
        check, needs, isolate_free = _CHECKS[name]
        applies = flags[needs] and not (isolate_free and isolates)
        checks[name] = check(G, k) if applies else Verdict.NOT_APPLICABLE

    return CriticalityReport(
        graph_id=graph_id, k=k, n=G.n, m=G.m, sub_k=sub_k(G, k),
        ed_critical=ed, ea_critical=ea, vd_critical=vd,
        ed_vacuous=G.m == 0, ea_vacuous=G.is_complete(),
        prop_checks=checks, counterexample=counter,
        tail_independent_all_orderings=tail_independent_all_orderings(G, k) if ed else None
    )
