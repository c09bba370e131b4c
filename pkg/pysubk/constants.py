import os.path as op


GRAPH_FAMILIES = [
    'path', 'cycle', 'complete', 'empty', 'complete_bipartite', 'star',
    'complete_bipartite_minus_perfect_matching', 'star_corona', 'pendant_attach'
]

COMMANDS = ['compute', 'bounds', 'exact', 'critical', 'scan', 'bench']
INPUT_FORMATS = ['graph6', 'edgelist', 'atlas']
OUTPUT_FORMATS = ['jsonl', 'csv']
SCAN_FILTERS = ['equality', 'critical', 'violations']

# Exact oracle: vertex cap (loud error above it) and the bitset word size
# used as the hard ceiling for structural operations in the oracle path
ORACLE_CAP = 32
BITSET_WORD = 64

# networkx' atlas holds every graph on at most 7 vertices; the 12346 graphs
# on 8 vertices ship as a graph6 file
NX_ATLAS_MAX_N = 7
here = op.dirname(__file__)
GRAPHS8 = op.join(here, 'data', 'graphs8.g6')
ATLAS_MAX_N = 8

# Streaming: graphs per joblib batch
CHUNK_SIZE = 256

BENCH_SIZES = (10**5, 10**6, 10**7)
BENCH_SEED = 2019
# Allowed slack between time ratio and size ratio in the linearity check
BENCH_SLACK = 3.0

# Fixed, documented CSV layout (JSON uses the same names)
CSV_COLUMNS = [
    'graph_id', 'n', 'm', 'k', 'sub_k', 'fink_jacobson', 'stratified',
    'gamma_k', 'equality', 'ed_critical', 'ea_critical', 'vd_critical',
    'error'
]

CRITICALITY_CHECKS = [
    'tail_independent', 'edge_deletion_gap', 'low_degree_clique',
    'edge_addition_gap', 'tail_attachment'
]
