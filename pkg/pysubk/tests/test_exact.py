from itertools import combinations

import pytest
import networkx as nx

from pysubk.exceptions import DomainError, ResourceLimitError
from pysubk.formats import iter_atlas
from pysubk.graph import (path, cycle, complete, empty, star, pendant_attach,
                          complete_bipartite_minus_perfect_matching, from_edge_list, from_networkx)
from pysubk.invariants import sub_k, kn_equality_threshold, bound_report
from pysubk.exact import (is_k_dominating, gamma_k, minimum_k_dominating_sets, domination_number,
                          caro_roditty_upper, cubic_interval, equality_check, attach_oracle)

ATLAS = [G for _, G, _ in iter_atlas(7)]


def brute_gamma_k(G, k):
    for size in range(G.n + 1):
        for S in combinations(range(G.n), size):
            if is_k_dominating(G, S, k):
                return size


def cubic_graphs(n):
    """ Every cubic graph on n vertices up to isomorphism (vertex 0 adjacent to 1, 2, 3). """
    found = []
    adj = [set() for _ in range(n)]
    for w in (1, 2, 3):
        adj[0].add(w)
        adj[w].add(0)

    def extend():
        v = next((u for u in range(n) if len(adj[u]) < 3), None)
        if v is None:
            H = nx.Graph()
            H.add_nodes_from(range(n))
            H.add_edges_from((u, w) for u in range(n) for w in adj[u] if u < w)
            if not any(nx.is_isomorphic(H, F) for F in found):
                found.append(H)
            return
        start = max([w for w in adj[v] if w > v], default=v) + 1
        for w in range(start, n):
            if len(adj[w]) < 3:
                adj[v].add(w)
                adj[w].add(v)
                extend()
                adj[v].discard(w)
                adj[w].discard(v)

    extend()
    return [from_networkx(H) for H in found]


class TestKDominating:
    def test_even_positions_of_c6(self):
        assert is_k_dominating(cycle(6), [0, 2, 4], 2)

    def test_universal_vertex(self):
        assert is_k_dominating(complete(4), [2], 1)

    def test_two_vertices_of_k4(self):
        assert not is_k_dominating(complete(4), [0, 1], 3)

    def test_bad_vertex(self):
        with pytest.raises(DomainError):
            is_k_dominating(path(3), [3], 1)


class TestOracle:
    @pytest.mark.parametrize('G,k,expected', [
        (cycle(9), 1, 3),
        (complete(4), 3, 3),
        (complete_bipartite_minus_perfect_matching(3), 2, 3),
        (pendant_attach(complete(3), 2), 1, 3),
        (cycle(12), 2, 6),
    ])
    def test_examples(self, G, k, expected):
        w = gamma_k(G, k)
        assert w.gamma_k == expected
        assert len(w.witness) == expected
        assert is_k_dominating(G, w.witness, k)

    def test_lexicographic_witness(self):
        assert gamma_k(path(4), 1).witness == (0, 2)
        assert gamma_k(path(3), 1).witness == (1,)
        assert gamma_k(star(6), 1).witness == (0,)

    def test_k_above_max_degree(self):
        w = gamma_k(empty(3), 1)
        assert (w.gamma_k, w.witness) == (3, (0, 1, 2))
        assert gamma_k(path(3), 3).gamma_k == 3

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            gamma_k(star(33), 1)
        assert gamma_k(star(33), 1, cap=33).gamma_k == 1
        with pytest.raises(ResourceLimitError):
            gamma_k(path(5), 1, cap=4)

    def test_null_graph(self):
        assert gamma_k(from_edge_list(0, []), 1).gamma_k == 0

    def test_all_minimum_sets(self):
        sets = list(minimum_k_dominating_sets(cycle(4), 1))
        assert sets == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        assert list(minimum_k_dominating_sets(path(3), 1)) == [(1,)]

    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_matches_brute_force(self, k):
        for G in ATLAS:
            w = gamma_k(G, k)
            assert w.gamma_k == brute_gamma_k(G, k)
            assert len(w.witness) == w.gamma_k
            assert is_k_dominating(G, w.witness, k)

    def test_monotone_in_k(self):
        for G in ATLAS:
            values = [gamma_k(G, k).gamma_k for k in range(1, 5)]
            assert values == sorted(values)

    def test_domination_number(self):
        assert domination_number(cycle(7)) == 3


class TestLowerBound:
    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_sub_k_below_gamma_k(self, k):
        for G in ATLAS:
            assert sub_k(G, k) <= gamma_k(G, k).gamma_k

    @pytest.mark.parametrize('k', range(1, 6))
    def test_sharp_on_bipartite_minus_matching(self, k):
        G = complete_bipartite_minus_perfect_matching(k + 1)
        assert sub_k(G, k) == gamma_k(G, k).gamma_k == k + 1

    @pytest.mark.parametrize('n', range(2, 11))
    def test_sharp_on_stars(self, n):
        assert sub_k(star(n), 1) == domination_number(star(n)) == 1

    @pytest.mark.parametrize('n', range(3, 16))
    def test_cycles(self, n):
        assert sub_k(cycle(n), 1) == gamma_k(cycle(n), 1).gamma_k == -(-n // 3)
        assert sub_k(cycle(n), 2) == gamma_k(cycle(n), 2).gamma_k == -(-n // 2)

    def test_complete_graph_threshold(self):
        for n in range(2, 21):
            for k in range(1, min(5, n - 1) + 1):
                assert equality_check(complete(n), k) == kn_equality_threshold(n, k)

    def test_equality_for_large_max_degree(self):
        # k = 1: Delta >= n - 2 or gamma <= 2 forces sub = gamma
        for G in ATLAS:
            g = domination_number(G)
            if G.max_degree >= G.n - 2 or g <= 2:
                assert sub_k(G, 1) == g

    @pytest.mark.parametrize('G,k,expected', [
        (cycle(6), 1, True),
        (complete(4), 3, False),
        (pendant_attach(star(4), 1, targets=(1, 2)), 1, False),
    ])
    def test_equality_examples(self, G, k, expected):
        assert equality_check(G, k) is expected


class TestUpperBounds:
    @pytest.mark.parametrize('n,k,expected', [(12, 3, 9), (12, 1, 6), (12, 2, 6), (9, 3, 6)])
    def test_caro_roditty_cubic(self, n, k, expected):
        assert caro_roditty_upper(n, 3, k) == expected

    def test_caro_roditty_inapplicable(self):
        assert caro_roditty_upper(10, 2, 3) is None
        assert caro_roditty_upper(2, 1, 1) == 1
        with pytest.raises(DomainError):
            caro_roditty_upper(0, 1, 1)

    @pytest.mark.parametrize('n,k,expected', [(6, 1, (2, 3)), (8, 2, (4, 4)), (12, 3, (6, 9))])
    def test_cubic_interval(self, n, k, expected):
        assert cubic_interval(n, k) == expected

    def test_cubic_interval_bad_k(self):
        with pytest.raises(DomainError):
            cubic_interval(8, 4)

    @pytest.mark.parametrize('n', [4, 6, 8])
    def test_cubic_generator_matches_corpus(self, cubic, n):
        assert len(cubic_graphs(n)) == len(cubic[n])

    @pytest.mark.parametrize('n,count', [
        (4, 1), (6, 2), (8, 6),
        pytest.param(10, 21, marks=pytest.mark.slow),
        pytest.param(12, 94, marks=pytest.mark.slow),
    ])
    def test_cubic_graphs(self, cubic, n, count):
        graphs = cubic[n]
        assert len(graphs) == count
        for G in graphs:
            assert G.degrees.tolist() == [3] * n
            for k in (1, 2, 3):
                lower, upper = cubic_interval(n, k)
                assert lower <= gamma_k(G, k).gamma_k <= upper
            if n <= 8:
                assert sub_k(G, 2) == gamma_k(G, 2).gamma_k

    def test_gamma_within_caro_roditty(self):
        for G in ATLAS:
            for k in (1, 2):
                upper = caro_roditty_upper(G.n, G.min_degree, k)
                if upper is not None:
                    assert gamma_k(G, k).gamma_k <= upper


class TestAttachOracle:
    def test_k4(self):
        r = attach_oracle(bound_report(complete(4), 3, m=6), complete(4))
        assert (r.sub_k, r.gamma_k, r.equality) == (2, 3, False)
        assert r.witness == (0, 1, 2)
        assert r.violations == []
