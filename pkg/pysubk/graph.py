""" Simple undirected graphs, named families and persistent mutations.

A ``Graph`` stores its adjacency twice: as a packed bit matrix (``rows[v]``
is an int whose bit ``u`` is set iff u ~ v) for O(1) edge queries in the
subset search of the exact oracle, and as sorted neighbour tuples for
iteration. Graphs never change after construction; every mutation returns
a new graph.

Canonical labelings of the generated families
---------------------------------------------
path(n)
    0 - 1 - ... - (n-1)
cycle(n)
    0 - 1 - ... - (n-1) - 0, i.e. vertices in cyclic order
complete(n), empty(n)
    0 .. n-1
complete_bipartite(a, b)
    parts {0 .. a-1} and {a .. a+b-1}
star(n)
    K_{1,n-1}; center 0, leaves 1 .. n-1
complete_bipartite_minus_perfect_matching(a)
    parts {0 .. a-1} and {a .. 2a-1}; i ~ a+j iff i != j
star_corona(n)
    star(n) plus pendant n+i-1 attached to leaf i (order 2n-1)
pendant_attach(base, p, targets)
    base vertices keep their labels; the p pendants of each target follow
    consecutively, targets in the given order
"""
from dataclasses import dataclass, field
from numbers import Integral
from itertools import combinations

import numpy as np
import networkx as nx

from .constants import GRAPH_FAMILIES
from .exceptions import DomainError, MalformedInputError


class Graph:
    """ Immutable simple graph on vertices 0 .. n-1.

    Use ``from_edge_list`` or one of the family generators rather than the
    constructor, which trusts its input.
    """

    __slots__ = ('n', 'rows', 'neighbors', 'degrees')

    def __init__(self, n, rows):
        self.n = n
        self.rows = tuple(rows)
        self.neighbors = tuple(
            tuple(u for u in range(n) if (r >> u) & 1) for r in self.rows
        )
        degrees = np.fromiter((r.bit_count() for r in self.rows), dtype=np.int64, count=n)
        degrees.setflags(write=False)
        self.degrees = degrees

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self):
        return int(self.degrees.sum()) // 2

    @property
    def max_degree(self):
        return int(self.degrees.max()) if self.n else 0

    @property
    def min_degree(self):
        return int(self.degrees.min()) if self.n else 0

    def degree(self, v):
        v = _check_vertex(self, v)
        return int(self.degrees[v])

    def has_edge(self, u, v):
        u, v = _check_vertex(self, u), _check_vertex(self, v)
        return bool((self.rows[u] >> v) & 1)

    def edges(self):
        """ Sorted list of (u, v) pairs with u < v. """
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def non_edges(self):
        """ Sorted list of (u, v) pairs with u < v that are not edges. """
        return [(u, v) for u, v in combinations(range(self.n), 2)
                if not (self.rows[u] >> v) & 1]

    def isolates(self):
        return [v for v in range(self.n) if self.degrees[v] == 0]

    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    def is_regular(self):
        return self.n == 0 or self.max_degree == self.min_degree

    def degree_order(self):
        """ Vertices by non-increasing degree, ties by ascending label. """
        return sorted(range(self.n), key=lambda v: (-int(self.degrees[v]), v))

    def to_numpy(self):
        adj = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            adj[u, v] = adj[v, u] = True
        return adj

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G


def _check_vertex(G, v):
    if not isinstance(v, Integral) or isinstance(v, bool) or not 0 <= v < G.n:
        raise DomainError(f"Vertex {v!r} is not in V(G) = 0..{G.n - 1}")
    return int(v)


def _normalize_pair(G, e):
    try:
        u, v = e
    except (TypeError, ValueError):
        raise DomainError(f"Expected a vertex pair, got {e!r}")
    u, v = _check_vertex(G, u), _check_vertex(G, v)
    if u == v:
        raise DomainError(f"({u}, {v}) is a self-loop")
    return u, v


def from_edge_list(n, edges):
    """ Builds a graph on vertices 0..n-1; duplicate pairs collapse. """
    if not isinstance(n, Integral) or isinstance(n, bool) or n < 0:
        raise MalformedInputError(f"Vertex count must be a nonnegative integer, got {n!r}")

    n = int(n)
    rows = [0] * n
    for i, e in enumerate(edges):
        try:
            u, v = e
        except (TypeError, ValueError):
            raise MalformedInputError(f"Edge #{i} is not a vertex pair: {e!r}")
        if not all(isinstance(x, Integral) and not isinstance(x, bool) for x in (u, v)):
            raise MalformedInputError(f"Edge #{i} ({u!r}, {v!r}) has a non-integer endpoint")
        # numpy integers would turn the shifts below into int64 arithmetic
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInputError(f"Edge #{i} ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise MalformedInputError(f"Edge #{i} ({u}, {v}) is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def from_networkx(G):
    """ Converts a networkx graph; nodes are relabeled 0..n-1 in node order. """
    index = {node: i for i, node in enumerate(G.nodes())}
    edges = [(index[u], index[v]) for u, v in G.edges() if u != v]
    return from_edge_list(len(index), edges)


##### Named families #####

def path(n):
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, combinations(range(n), 2))


def empty(n):
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return from_edge_list(n, [])


def complete_bipartite(a, b):
    _require(a >= 1 and b >= 1, f"complete bipartite graph needs a, b >= 1, got ({a}, {b})")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n):
    """ K_{1,n-1} with center 0. """
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_bipartite_minus_perfect_matching(a, b=None):
    b = a if b is None else b
    _require(a == b and a >= 1, f"need equal part sizes a = b >= 1, got ({a}, {b})")
    return from_edge_list(2 * a, [(i, a + j) for i in range(a) for j in range(a) if i != j])


def star_corona(n):
    """ Corona of K_{1,n-1}: one pendant on each leaf, order 2n-1. """
    _require(n >= 2, f"star corona needs n >= 2, got {n}")
    edges = [(0, i) for i in range(1, n)] + [(i, n + i - 1) for i in range(1, n)]
    return from_edge_list(2 * n - 1, edges)


def pendant_attach(base, p=1, targets=None):
    """ Appends ``p`` pendant vertices to every vertex in ``targets``
    (default: all vertices of ``base``). """
    _require(p >= 0, f"pendant count must be >= 0, got {p}")
    targets = range(base.n) if targets is None else targets
    edges = base.edges()
    nxt = base.n
    for v in targets:
        v = _check_vertex(base, v)
        for _ in range(p):
            edges.append((v, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


_INT_FAMILIES = {
    'path': path,
    'cycle': cycle,
    'complete': complete,
    'empty': empty,
    'complete_bipartite': complete_bipartite,
    'star': star,
    'complete_bipartite_minus_perfect_matching': complete_bipartite_minus_perfect_matching,
    'star_corona': star_corona,
}


@dataclass(frozen=True)
class FamilySpec:
    """ A named graph family plus its integer parameters.

    ``pendant_attach`` additionally takes ``base`` (another FamilySpec) and
    optional ``targets``; its ``params`` is ``(p,)``.
    """
    family: str
    params: tuple = ()
    base: 'FamilySpec' = None
    targets: tuple = field(default=None)


def generate(spec):
    """ Builds the graph described by a FamilySpec. """
    if spec.family not in GRAPH_FAMILIES:
        raise DomainError(f"Unknown family {spec.family!r}; choose from {GRAPH_FAMILIES}")

    if not all(isinstance(p, (int, np.integer)) for p in spec.params):
        raise DomainError(f"Family parameters must be integers, got {spec.params}")

    if spec.family == 'pendant_attach':
        if spec.base is None:
            raise DomainError("pendant_attach needs a base family")
        p = spec.params[0] if spec.params else 1
        return pendant_attach(generate(spec.base), p, spec.targets)

    try:
        return _INT_FAMILIES[spec.family](*spec.params)
    except TypeError:
        raise DomainError(f"Wrong number of parameters for {spec.family}: {spec.params}")


def _require(cond, msg):
    if not cond:
        raise DomainError(msg)


##### Mutations #####

def delete_edge(G, e):
    """ G - e; e must be an edge of G. """
    u, v = _normalize_pair(G, e)
    if not (G.rows[u] >> v) & 1:
        raise DomainError(f"({u}, {v}) is not an edge")
    rows = list(G.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(G.n, rows)


def add_edge(G, e):
    """ G + e; e must be an edge of the complement. """
    u, v = _normalize_pair(G, e)
    if (G.rows[u] >> v) & 1:
        raise DomainError(f"({u}, {v}) is already an edge")
    rows = list(G.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(G.n, rows)


def delete_vertex(G, v):
    """ G - v; the remaining vertices are relabeled 0..n-2 in their old order. """
    v = _check_vertex(G, v)
    low = (1 << v) - 1
    rows = [(r & low) | ((r >> (v + 1)) << v)
            for u, r in enumerate(G.rows) if u != v]
    return Graph(G.n - 1, rows)


def complement(G):
    full = (1 << G.n) - 1
    return Graph(G.n, [(~r & full) & ~(1 << u) for u, r in enumerate(G.rows)])
