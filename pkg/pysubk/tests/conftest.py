import os.path as op

import pytest

from pysubk.constants import GRAPHS8
from pysubk.formats import iter_graph6
from pysubk.exact import gamma_k

CUBIC_GRAPHS = op.join(op.dirname(GRAPHS8), 'cubic.g6')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive corpus runs and large benchmarks')


def read_corpus(path):
    with open(path, 'rb') as f:
        return [G for _, G, _ in iter_graph6(f)]


@pytest.fixture(scope='session')
def graphs8():
    """ Every graph on 8 vertices, one per isomorphism class. """
    return read_corpus(GRAPHS8)


@pytest.fixture(scope='session')
def gamma8(graphs8):
    """ gamma_k for k = 1, 2, 3 of every 8-vertex graph, in corpus order. """
    return {k: [gamma_k(G, k).gamma_k for G in graphs8] for k in (1, 2, 3)}


@pytest.fixture(scope='session')
def cubic():
    """ Every cubic graph on 4..12 vertices, keyed by order. """
    out = {}
    for G in read_corpus(CUBIC_GRAPHS):
        out.setdefault(G.n, []).append(G)
    return out
