import io
import json
from fractions import Fraction

import pytest
import numpy as np
import networkx as nx

from pysubk.constants import CSV_COLUMNS
from pysubk.exceptions import MalformedInputError
from pysubk.graph import complete, empty, cycle, star_corona, from_networkx, from_edge_list
from pysubk.invariants import bound_report
from pysubk.exact import attach_oracle
from pysubk.criticality import criticality_report
from pysubk.formats import (graph6_record, parse_graph6, encode_graph6, parse_edge_list,
                            iter_graph6, iter_edge_lists, iter_atlas, emit_record,
                            emit_records, record_fields, csv_header)


def nx_graph6(H):
    return nx.to_graph6_bytes(H, header=False).strip()


class TestGraph6:
    @pytest.mark.parametrize('line,expected', [
        ('A_', complete(2)),
        ('A?', empty(2)),
        ('Bw', complete(3)),
        ('>>graph6<<Bw', complete(3)),
        (b'A_\n', complete(2)),
    ])
    def test_examples(self, line, expected):
        assert parse_graph6(line) == expected

    def test_record(self):
        rec = graph6_record('Bw')
        assert (rec.order, rec.bits) == (3, '111')

    def test_matches_networkx(self):
        for H in nx.graph_atlas_g()[1:]:
            line = nx_graph6(H)
            G = parse_graph6(line)
            assert G == from_networkx(H)
            reference = nx.from_graph6_bytes(line)
            assert {frozenset(e) for e in reference.edges()} == {frozenset(e) for e in G.edges()}
            assert encode_graph6(G) == line.decode()

    def test_round_trip_random(self):
        rng = np.random.default_rng(11)
        for n in (8, 20, 62, 63, 100):
            H = nx.gnp_random_graph(n, 0.3, seed=int(rng.integers(1 << 30)))
            G = from_networkx(H)
            text = encode_graph6(G)
            assert text == nx_graph6(H).decode()
            assert parse_graph6(text) == G

    def test_multi_byte_order(self):
        text = encode_graph6(from_edge_list(63, [(0, 62)]))
        assert text.startswith('~??~')
        G = parse_graph6(text)
        assert G.n == 63 and G.edges() == [(0, 62)]

    @pytest.mark.parametrize('line,offset', [
        ('A', 1),
        ('A_?', 2),
        ('A`', 1),
        ('A ', 1),
        ('~?', 2),
        ('', 0),
    ])
    def test_malformed(self, line, offset):
        with pytest.raises(MalformedInputError) as excinfo:
            parse_graph6(line, lineno=7)
        assert excinfo.value.offset == offset
        assert excinfo.value.line == 7
        assert 'line 7' in str(excinfo.value)

    def test_non_ascii(self):
        with pytest.raises(MalformedInputError) as excinfo:
            parse_graph6(b'A\xff')
        assert excinfo.value.offset == 1


class TestEdgeList:
    @pytest.mark.parametrize('text,expected', [
        ('2 1\n0 1', complete(2)),
        ('4 0', empty(4)),
        ('3 3\n0 1\n1 2\n0 2\n', complete(3)),
    ])
    def test_examples(self, text, expected):
        assert parse_edge_list(text) == expected

    @pytest.mark.parametrize('text,line', [
        ('2 1\n0 2', 2),
        ('2 1\n1 1', 2),
        ('3 2\n0 1\n1 0', 3),
        ('3 2\n0 1', 1),
        ('2 0\n0 1', 2),
        ('2 x', 1),
        ('2 1\n0 1 2', 2),
        ('', 1),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(MalformedInputError) as excinfo:
            parse_edge_list(text)
        assert excinfo.value.line == line


class TestStreams:
    def test_graph6_stream(self):
        stream = io.BytesIO(b'>>graph6<<A_\nA\n\nBw\n')
        out = list(iter_graph6(stream))
        assert [gid for gid, _, _ in out] == [1, 2, 4]
        assert out[0][1] == complete(2) and out[2][1] == complete(3)
        assert out[1][1] is None and 'line 2' in out[1][2]

    def test_graph6_non_ascii_line(self):
        out = list(iter_graph6(io.BytesIO(b'A\xff\nA_\n')))
        assert out[0][1] is None and 'line 1' in out[0][2]
        assert out[1][1] == complete(2)

    def test_edge_list_blocks(self):
        stream = io.StringIO('2 1\n0 1\n3 0\nx y\n2 1\n0 1\n')
        out = list(iter_edge_lists(stream))
        assert [gid for gid, _, _ in out] == [1, 3, 4, 5]
        assert out[0][1] == complete(2)
        assert out[1][1] == empty(3)
        assert out[2][1] is None and 'line 4' in out[2][2]
        assert out[3][1] == complete(2)

    def test_bad_block_is_skipped(self):
        stream = io.StringIO('3 2\n0 1\n0 1\n2 1\n0 1\n')
        out = list(iter_edge_lists(stream))
        assert out[0][1] is None and 'Duplicate' in out[0][2]
        assert out[1] == (4, complete(2), None)

    def test_unreadable_order_skips_announced_edges(self):
        out = list(iter_edge_lists(io.StringIO('x 2\n3 0\n0 1\n')))
        assert len(out) == 1
        assert out[0][0] == 1 and out[0][1] is None and 'line 1' in out[0][2]

    def test_unreadable_header_resyncs(self):
        out = list(iter_edge_lists(io.StringIO('x y\n0 1\n5\n2 1\n0 1\n')))
        assert [gid for gid, _, _ in out] == [1, 4]
        assert 'dropped 2' in out[0][2]
        assert out[1] == (4, complete(2), None)

    def test_resync_skips_blocks_with_bad_edges(self):
        out = list(iter_edge_lists(io.StringIO('x y\n2 1\n0 5\n3 1\n1 2\n')))
        assert [gid for gid, _, _ in out] == [1, 4]
        assert 'dropped 2' in out[0][2]
        assert out[1][1] == from_edge_list(3, [(1, 2)])

    def test_atlas(self):
        graphs = list(iter_atlas(3))
        assert len(graphs) == 7
        assert [G.n for _, G, _ in graphs] == [1, 2, 2, 3, 3, 3, 3]
        assert graphs[2] == (3, complete(2), None)


def csv_row(report):
    return dict(zip(CSV_COLUMNS, emit_record(report, 'csv').split(',')))


class TestRecords:
    def test_k4_row(self):
        report = attach_oracle(bound_report(complete(4), 3, graph_id='k4', m=6), complete(4))
        row = csv_row(report)
        assert row['sub_k'] == '2' and row['gamma_k'] == '3'
        assert row['equality'] == 'false'
        assert row['stratified'] == '' and row['error'] == ''

    def test_criticality_row(self):
        row = csv_row(criticality_report(complete(2), 1, graph_id=3))
        assert row['ed_critical'] == 'true'
        assert row['graph_id'] == '3' and row['gamma_k'] == ''

    def test_star_corona_row(self):
        row = csv_row(bound_report(star_corona(5), 1, graph_id=1, m=8))
        assert (row['stratified'], row['sub_k'], row['fink_jacobson']) == ('7/3', '3', '2')

    def test_header(self):
        assert csv_header().split(',') == CSV_COLUMNS

    def test_record_fields_nested(self):
        report = bound_report(cycle(5), 1, graph_id=0)
        report.criticality = criticality_report(cycle(5), 1)
        fields = record_fields(report)
        assert list(fields) == CSV_COLUMNS
        assert fields['ed_critical'] == report.criticality.ed_critical

    def test_jsonl(self):
        report = bound_report(star_corona(5), 1, graph_id=1, m=8)
        report.criticality = criticality_report(star_corona(5), 1)
        rec = json.loads(emit_record(report, 'jsonl'))
        assert rec['stratified'] == '7/3'
        assert rec['stratified_by_t'] == {'1': '7/3', '2': '7/3'}
        assert rec['gamma_k'] is None
        assert set(rec['criticality']['prop_checks'].values()) <= {'pass', 'fail', 'not-applicable'}
        assert rec['criticality']['counterexample']['vd']['kind'] == 'delete_vertex'

    def test_error_record(self):
        report = bound_report(complete(2), 1, graph_id=9)
        report.error = 'Truncated payload, with a comma'
        line = emit_record(report, 'csv')
        assert line.endswith('"Truncated payload, with a comma"')

    def test_many(self):
        reports = [bound_report(cycle(n), 2, graph_id=n) for n in range(3, 8)]
        lines = emit_records(reports, 'csv')
        assert [line.split(',')[0] for line in lines] == ['3', '4', '5', '6', '7']
        assert emit_records([], 'jsonl') == []
        with pytest.raises(ValueError):
            emit_records(reports, 'xml')

    def test_fraction_values(self):
        report = bound_report(star_corona(5), 2, graph_id=1)
        assert isinstance(report.stratified, Fraction)
        assert json.loads(emit_record(report, 'jsonl'))['k'] == 2
