""" Stage runners behind the ``pysubk`` commands.

Every runner takes ``(cfg, logger)``, streams records to stdout and returns
True when any record carried an error or a broken inequality.
"""
import json
import time
import logging
from itertools import islice
from contextlib import contextmanager
from dataclasses import dataclass, asdict

import click
import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from .logging import tqdm_ctm, tdesc
from .constants import BENCH_SLACK
from .exceptions import PysubkError
from .formats import iter_graph6, iter_edge_lists, iter_atlas, emit_records, csv_header
from .invariants import DegreeSequence, BoundReport, bound_report, sub_k
from .exact import attach_oracle, caro_roditty_upper
from .criticality import criticality_report

# Ratios of timings below this are mostly timer noise
_TIMER_FLOOR = 1e-3


##### Input #####

@contextmanager
def open_input(cfg):
    """ Opens the input stream (graph6 in binary mode, edge lists as text). """
    if cfg['fmt'] == 'atlas':
        yield None
        return

    if cfg['fmt'] == 'graph6':
        with click.open_file(cfg['input'], 'rb') as f:
            yield f
    else:
        with click.open_file(cfg['input'], 'r', errors='replace') as f:
            yield f


def read_graphs(cfg, stream):
    """ (graph_id, Graph or None, error or None) for every input graph. """
    if cfg['fmt'] == 'atlas':
        return iter_atlas(cfg['max_n'])
    if cfg['fmt'] == 'graph6':
        return iter_graph6(stream)
    return iter_edge_lists(stream)


def _chunked(it, size):
    it = iter(it)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


##### Per-graph builders (run inside joblib workers) #####

def _build_compute(G, k, graph_id, cap):
    report = bound_report(G, k, graph_id=graph_id, m=G.m)
    report.stratified_by_t = {}
    return report


def _build_bounds(G, k, graph_id, cap):
    report = bound_report(G, k, graph_id=graph_id, m=G.m)
    report.caro_roditty = caro_roditty_upper(G.n, G.min_degree, k)
    return report


def _build_exact(G, k, graph_id, cap):
    return attach_oracle(_build_bounds(G, k, graph_id, cap), G, cap)


def _build_critical(G, k, graph_id, cap):
    return criticality_report(G, k, graph_id=graph_id)


def _build_scan(G, k, graph_id, cap):
    report = _build_exact(G, k, graph_id, cap)
    report.criticality = criticality_report(G, k, graph_id=graph_id)
    return report


_BUILDERS = {
    'compute': _build_compute,
    'bounds': _build_bounds,
    'exact': _build_exact,
    'critical': _build_critical,
    'scan': _build_scan,
}


def _run_graph(build, graph_id, G, err, ks, cap):
    """ One record per k; failures become error records instead of exceptions. """
    if err is not None:
        return [BoundReport(graph_id=graph_id, k=k, error=err) for k in ks]

    out = []
    for k in ks:
        try:
            out.append(build(G, k, graph_id, cap))
        except PysubkError as e:
            out.append(BoundReport(graph_id=graph_id, k=k, n=G.n, m=G.m, error=str(e)))
    return out


def stream_reports(cfg, logger):
    """ Yields records in input order, computed chunk-wise in parallel. """
    build = _BUILDERS[cfg['command']]
    show = logger.isEnabledFor(logging.INFO)
    with open_input(cfg) as stream:
        graphs = read_graphs(cfg, stream)
        pbar = tqdm_ctm(desc=tdesc(f"Running {cfg['command']}:"), disable=not show)
        for chunk in _chunked(graphs, cfg['chunk_size']):
            out = Parallel(n_jobs=cfg['n_cpus'])(delayed(_run_graph)(
                build, graph_id, G, err, cfg['k'], cfg['oracle_cap'])
                for graph_id, G, err in chunk
            )
            pbar.update(len(chunk))
            for reports in out:
                yield from reports
        pbar.close()


def problems(report):
    """ Error message and broken checks of one record. """
    if getattr(report, 'error', None) is not None:
        return [report.error]
    if isinstance(report, BoundReport):
        return report.violations
    return [f"{name} check failed" for name in report.failures]


def _echo(lines):
    for line in lines:
        click.echo(line)


def _write_all(reports, cfg, logger, keep=None):
    if cfg['header'] and cfg['output'] == 'csv':
        click.echo(csv_header())

    failed = False
    for report in reports:
        issues = problems(report)
        if issues:
            failed = True
            level = logging.WARNING if getattr(report, 'error', None) else logging.ERROR
            logger.log(level, f"Graph {report.graph_id}, k={report.k}: {'; '.join(issues)}")
        if keep is None or keep(report):
            _echo(emit_records([report], cfg['output']))
    return failed


##### Commands #####

def run_compute(cfg, logger):
    """ sub_k, Fink-Jacobson and the best stratified bound; never runs the oracle. """
    return _write_all(stream_reports(cfg, logger), cfg, logger)


def run_bounds(cfg, logger):
    """ Full bound suite including every stratified bound and the Caro-Roditty upper bound. """
    return _write_all(stream_reports(cfg, logger), cfg, logger)


def run_exact(cfg, logger):
    """ Bound suite plus gamma_k, equality flag and witness. """
    return _write_all(stream_reports(cfg, logger), cfg, logger)


def run_critical(cfg, logger):
    """ One criticality report per graph and k. """
    return _write_all(stream_reports(cfg, logger), cfg, logger)


def scan_filter(filters):
    """ Predicate keeping records that match every filter (errors always pass). """
    def keep(report):
        if report.error is not None:
            return True
        crit = report.criticality
        matches = {
            'equality': report.equality is True,
            'critical': crit is not None and crit.any_critical,
            'violations': bool(report.violations),
        }
        return all(matches[f] for f in filters)
    return keep


SUMMARY_KEYS = ['graphs', 'records', 'errors', 'equality', 'ed_critical',
                'ea_critical', 'vd_critical', 'check_failures', 'violations']


def update_summary(counts, report, last_id=None):
    """ Adds one scanned record (before filtering) to the running counts. """
    counts['records'] += 1
    counts['graphs'] += report.graph_id != last_id
    if report.error is not None:
        counts['errors'] += 1
        return counts
    counts['equality'] += report.equality is True
    counts['violations'] += bool(report.violations)
    crit = report.criticality
    if crit is not None:
        counts['ed_critical'] += crit.ed_critical
        counts['ea_critical'] += crit.ea_critical
        counts['vd_critical'] += crit.vd_critical
        counts['check_failures'] += len(crit.failures)
    return counts


def run_scan(cfg, logger):
    """ Oracle plus criticality over a corpus, filtered, with a summary on stderr. """
    counts = dict.fromkeys(SUMMARY_KEYS, 0)

    def tracked():
        last_id = None
        for report in stream_reports(cfg, logger):
            update_summary(counts, report, last_id)
            last_id = report.graph_id
            yield report

    failed = _write_all(tracked(), cfg, logger, keep=scan_filter(cfg['filter']))
    summary = pd.Series(counts)
    log = logger.warning if failed else logger.info
    log("Scan summary:\n" + summary.to_string())
    return failed


##### Benchmark #####

@dataclass
class BenchResult:
    n: int
    k: int
    sub_k: int
    seconds: float


def synthetic_degrees(n, seed):
    """ n degrees drawn uniformly from 0..n-1. """
    rng = np.random.default_rng(seed)
    return rng.integers(0, n, size=n, dtype=np.int64)


def time_sub_k(degrees, k):
    """ Wall time of counting sort plus the threshold scan. """
    t0 = time.perf_counter()
    value = sub_k(DegreeSequence.from_degrees(degrees), k)
    return value, time.perf_counter() - t0


def check_linearity(results, slack=BENCH_SLACK):
    """ Messages for consecutive sizes whose time ratio exceeds slack x size ratio. """
    issues = []
    for k in sorted({r.k for r in results}):
        runs = sorted((r for r in results if r.k == k), key=lambda r: r.n)
        for a, b in zip(runs, runs[1:]):
            if a.seconds < _TIMER_FLOOR or b.n == a.n:
                continue
            t_ratio, n_ratio = b.seconds / a.seconds, b.n / a.n
            if t_ratio > slack * n_ratio:
                issues.append(f"k={k}: n {a.n} -> {b.n} took {t_ratio:.1f}x longer "
                              f"(allowed {slack * n_ratio:.1f}x)")
    return issues


def run_bench(cfg, logger):
    """ Times sub_k on synthetic degree sequences and checks near-linear scaling. """
    results = []
    for n in cfg['bench_sizes']:
        degrees = synthetic_degrees(n, cfg['seed'])
        for k in cfg['k']:
            value, secs = time_sub_k(degrees, k)
            logger.info(f"n={n}, k={k}: sub_k={value} in {secs:.4f} s")
            results.append(BenchResult(n=n, k=k, sub_k=value, seconds=secs))

    if cfg['output'] == 'jsonl':
        _echo(json.dumps(asdict(r)) for r in results)
    else:
        df = pd.DataFrame([asdict(r) for r in results])
        _echo(df.to_csv(index=False, header=cfg['header']).splitlines())

    issues = check_linearity(results)
    for msg in issues:
        logger.error(f"Scaling is not near-linear: {msg}")
    return bool(issues)


RUNNERS = {
    'compute': run_compute,
    'bounds': run_bounds,
    'exact': run_exact,
    'critical': run_critical,
    'scan': run_scan,
    'bench': run_bench,
}
