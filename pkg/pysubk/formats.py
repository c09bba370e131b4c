""" Graph corpora in and result records out.

graph6
    N(n) R(x): the order (one byte n+63 for n <= 62; '~' plus three bytes
    for n <= 258047; '~~' plus six bytes above) followed by the upper
    triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte,
    big-endian, each byte offset by 63, zero-padded to a multiple of six.
edge list
    First line "n m", then m lines "u v" with 0-based labels. Several blocks
    may follow each other in one stream.
records
    JSON lines with the report's own field names, or CSV rows with the fixed
    columns in ``constants.CSV_COLUMNS``. Rationals are written as "p/q",
    booleans as true/false, missing values as blanks (CSV) or null (JSON).

All readers work line by line and never buffer a whole corpus.
"""
import json
from itertools import islice
from enum import Enum
from fractions import Fraction
from dataclasses import dataclass, fields, is_dataclass

import numpy as np
import pandas as pd
import networkx as nx

from .constants import CSV_COLUMNS, ATLAS_MAX_N, NX_ATLAS_MAX_N, GRAPHS8
from .exceptions import MalformedInputError
from .graph import Graph, from_edge_list, from_networkx

GRAPH6_HEADER = '>>graph6<<'


@dataclass(frozen=True)
class Graph6Record:
    raw: str
    order: int
    bits: str


def _to_text(line):
    if isinstance(line, bytes):
        try:
            line = line.decode('ascii')
        except UnicodeDecodeError as e:
            raise MalformedInputError("Non-ASCII byte in graph6 line", offset=e.start)
    return line.rstrip('\r\n')


def graph6_record(line, lineno=None):
    """ Decodes one graph6 line into order and upper-triangle bits. """
    raw = _to_text(line)
    body = raw[len(GRAPH6_HEADER):] if raw.startswith(GRAPH6_HEADER) else raw
    start = len(raw) - len(body)

    for i, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise MalformedInputError(f"Byte {ch!r} outside the graph6 alphabet", lineno, start + i)
    if not body:
        raise MalformedInputError("Empty graph6 line", lineno, start)

    vals = [ord(ch) - 63 for ch in body]
    if vals[0] != 63:
        n, pos = vals[0], 1
    else:
        width = 6 if len(vals) > 1 and vals[1] == 63 else 3
        pos = 2 if width == 6 else 1
        if len(vals) < pos + width:
            raise MalformedInputError("Truncated multi-byte graph order", lineno, start + len(vals))
        n = 0
        for v in vals[pos:pos + width]:
            n = (n << 6) | v
        pos += width

    n_bits = n * (n - 1) // 2
    n_bytes = -(-n_bits // 6)
    payload = vals[pos:]
    if len(payload) < n_bytes:
        raise MalformedInputError(
            f"Truncated payload: need {n_bytes} bytes for n={n}, got {len(payload)}",
            lineno, start + len(vals))
    if len(payload) > n_bytes:
        raise MalformedInputError(
            f"Trailing bytes after the {n_bytes}-byte payload for n={n}",
            lineno, start + pos + n_bytes)

    bits = ''.join(format(v, '06b') for v in payload)
    if '1' in bits[n_bits:]:
        raise MalformedInputError("Nonzero padding bits", lineno, start + len(vals) - 1)
    return Graph6Record(raw=raw, order=n, bits=bits[:n_bits])


def parse_graph6(line, lineno=None):
    """ Decodes one graph6 line (optional '>>graph6<<' header) into a Graph. """
    rec = graph6_record(line, lineno)
    n = rec.order
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if rec.bits[idx] == '1':
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, rows)


def encode_graph6(G):
    """ graph6 text of G (no header, no newline). """
    return nx.to_graph6_bytes(G.to_networkx(), header=False).decode('ascii').strip()


def parse_edge_list(text):
    """ Parses one "n m" block followed by exactly m edge lines. """
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise MalformedInputError("Empty edge list", 1)
    G, used = _edge_block(lines, 0)
    if used != len(lines):
        raise MalformedInputError("More edge lines than announced", lines[used][0])
    return G


def _ints(lineno, line, count):
    parts = line.split()
    if len(parts) != count:
        raise MalformedInputError(f"Expected {count} integers, got {line.strip()!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise MalformedInputError(f"Non-integer token in {line.strip()!r}", lineno)


def _edge_block(lines, start):
    """ Reads one block from a list of (lineno, text); returns (Graph, next index). """
    lineno, header = lines[start]
    n, m = _ints(lineno, header, 2)
    if n < 0 or m < 0:
        raise MalformedInputError("Negative vertex or edge count", lineno)

    seen = set()
    for idx in range(start + 1, start + 1 + m):
        if idx >= len(lines):
            raise MalformedInputError(f"Expected {m} edges, found {idx - start - 1}", lineno)
        eline, text = lines[idx]
        u, v = _ints(eline, text, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInputError(f"Label outside 0..{n - 1} in edge ({u}, {v})", eline)
        if u == v:
            raise MalformedInputError(f"Self-loop ({u}, {v})", eline)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MalformedInputError(f"Duplicate edge ({u}, {v})", eline)
        seen.add(key)
    return from_edge_list(n, seen), start + 1 + m


##### Streaming readers: yield (graph_id, Graph or None, error or None) #####

def iter_graph6(stream):
    for lineno, line in enumerate(stream, start=1):
        try:
            text = _to_text(line)
        except MalformedInputError as e:
            e.line = lineno
            yield lineno, None, f"Non-ASCII byte in graph6 line (line {lineno}, byte {e.offset})"
            continue
        if not text.strip() or text.strip() == GRAPH6_HEADER:
            continue
        try:
            yield lineno, parse_graph6(text, lineno), None
        except MalformedInputError as e:
            yield lineno, None, str(e)


class _Lines:
    """ Nonblank (lineno, text) pairs of a stream, with push-back. """

    def __init__(self, stream):
        self._it = ((i, ln) for i, ln in enumerate(stream, start=1) if ln.strip())
        self._back = []

    def __iter__(self):
        return self

    def __next__(self):
        if self._back:
            return self._back.pop()
        return next(self._it)

    def take(self, count):
        return list(islice(self, count))

    def skip(self, count):
        for _ in islice(self, count):
            pass

    def push(self, items):
        self._back.extend(reversed(items))


def _announced_edges(header):
    """ The edge count of a header whose vertex count is unreadable, or None. """
    parts = header.split()
    if len(parts) != 2:
        return None
    try:
        m = int(parts[1])
    except ValueError:
        return None
    return m if m >= 0 else None


def _resync(lines):
    """ Drops lines until one starts a well-formed block; returns the number dropped. """
    dropped = 0
    for lineno, text in lines:
        try:
            n, m = _ints(lineno, text, 2)
        except MalformedInputError:
            dropped += 1
            continue
        if n < 0 or not 0 <= m <= n * (n - 1) // 2:
            dropped += 1
            continue
        block = [(lineno, text)] + lines.take(m)
        try:
            _edge_block(block, 0)
        except MalformedInputError:
            lines.push(block[1:])
            dropped += 1
            continue
        lines.push(block)
        break
    return dropped


def iter_edge_lists(stream):
    """ Streams consecutive "n m" blocks. A bad block is reported once and
    skipped as a whole when its edge count is readable; otherwise lines are
    dropped until one starts a well-formed block. """
    lines = _Lines(stream)
    for lineno, header in lines:
        try:
            n, m = _ints(lineno, header, 2)
        except MalformedInputError as e:
            announced = _announced_edges(header)
            if announced is not None:
                lines.skip(announced)
                yield lineno, None, str(e)
            else:
                dropped = _resync(lines)
                suffix = f"; dropped {dropped} more line(s) up to the next block" if dropped else ""
                yield lineno, None, str(e) + suffix
            continue
        block = [(lineno, header)] + lines.take(max(m, 0))
        try:
            G, _ = _edge_block(block, 0)
            yield lineno, G, None
        except MalformedInputError as e:
            yield lineno, None, str(e)


def iter_atlas(max_n=ATLAS_MAX_N):
    """ Every graph on 1..max_n vertices (max_n <= 8), keyed by index.

    Orders up to 7 come from networkx' atlas under their atlas index; the
    8-vertex graphs are read from the shipped graph6 file and numbered on
    from the end of the atlas.
    """
    atlas = nx.graph_atlas_g()
    for idx, H in enumerate(atlas):
        if 1 <= H.number_of_nodes() <= max_n:
            yield idx, from_networkx(H), None
    if max_n <= NX_ATLAS_MAX_N:
        return
    with open(GRAPHS8, 'rb') as f:
        for lineno, G, err in iter_graph6(f):
            yield len(atlas) + lineno - 1, G, err


##### Records #####

def fraction_text(x):
    return f"{x.numerator}/{x.denominator}"


def _jsonable(x):
    if isinstance(x, Fraction):
        return fraction_text(x)
    if isinstance(x, Enum):
        return x.value
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if is_dataclass(x):
        return {f.name: _jsonable(getattr(x, f.name)) for f in fields(x)}
    if hasattr(x, '_asdict'):
        return {key: _jsonable(v) for key, v in x._asdict().items()}
    if isinstance(x, dict):
        return {str(key): _jsonable(v) for key, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def csv_value(x):
    """ CSV cell text of one value. """
    if x is None:
        return ''
    if isinstance(x, (bool, np.bool_)):
        return 'true' if x else 'false'
    if isinstance(x, Fraction):
        return fraction_text(x)
    return str(x)


def record_fields(report):
    """ The report's values for the fixed CSV columns (None when absent). """
    out = dict.fromkeys(CSV_COLUMNS)
    for col in CSV_COLUMNS:
        if hasattr(report, col):
            out[col] = getattr(report, col)
    crit = getattr(report, 'criticality', None)
    if crit is not None:
        for col in ('ed_critical', 'ea_critical', 'vd_critical'):
            out[col] = getattr(crit, col)
    return out


def csv_header():
    return ','.join(CSV_COLUMNS)


def emit_records(reports, fmt):
    """ One text line per report, in order. """
    reports = list(reports)
    if not reports:
        return []
    if fmt == 'jsonl':
        return [json.dumps(_jsonable(r)) for r in reports]
    if fmt == 'csv':
        rows = [[csv_value(v) for v in record_fields(r).values()] for r in reports]
        df = pd.DataFrame(rows, columns=CSV_COLUMNS)
        return df.to_csv(index=False, header=False).splitlines()
    raise ValueError(f"Unknown output format {fmt!r}")


def emit_record(report, fmt):
    return emit_records([report], fmt)[0]
