import sys
import click

from .logging import get_logger
from .constants import COMMANDS, INPUT_FORMATS, OUTPUT_FORMATS, SCAN_FILTERS
from .exceptions import ConfigError
from .bookkeeping import DEFAULTS, load_config_file, set_defaults, check_parameters
from .workflows import RUNNERS


@click.command()
# 1. Positional args
@click.argument('command', type=click.Choice(COMMANDS))
@click.argument('input', default=None, required=False)  # graph file; stdin if omitted or '-'
# 2. What to compute
@click.option('--k', 'k', multiple=True, type=click.INT, help='Value of k (repeatable); default: 1')
@click.option('--oracle-cap', default=DEFAULTS['oracle_cap'], type=click.INT, show_default=True, help='Largest graph (in vertices) the exact oracle accepts')
@click.option('--filter', 'filter', multiple=True, type=click.Choice(SCAN_FILTERS), help='Scan filter (repeatable; records must match all)')
# 3. Input/output
@click.option('--format', 'fmt', default=DEFAULTS['fmt'], type=click.Choice(INPUT_FORMATS), show_default=True, help='Input format (atlas: every graph on 1..--max-n vertices, no input needed)')
@click.option('--max-n', default=DEFAULTS['max_n'], type=click.INT, show_default=True, help='Largest order read from the atlas (8 adds the shipped 8-vertex corpus)')
@click.option('--output', default=DEFAULTS['output'], type=click.Choice(OUTPUT_FORMATS), show_default=True, help='Record format on stdout')
@click.option('--header/--no-header', default=DEFAULTS['header'], show_default=True, help='Write a CSV header line')
# 4. Benchmark options
@click.option('--bench-sizes', default=DEFAULTS['bench_sizes'], type=click.STRING, help='Comma-separated sizes for bench (default: 1e5,1e6,1e7)')
@click.option('--seed', default=DEFAULTS['seed'], type=click.INT, show_default=True, help='Seed of the synthetic bench degree sequences')
# 5. Misc options
@click.option('--n-cpus', default=DEFAULTS['n_cpus'], type=click.INT, show_default=True, help='Number of CPUs to use (graphs are processed in parallel within a chunk)')
@click.option('--chunk-size', default=DEFAULTS['chunk_size'], type=click.INT, show_default=True, help='Graphs per parallel batch')
@click.option('--config', default=None, type=click.Path(), help='TOML file with option values (command-line values win)')
@click.option('--verbose', default=DEFAULTS['verbose'], type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']), show_default=True, help='Verbosity level')
def main(command, input, k, oracle_cap, filter, fmt, max_n, output, header, bench_sizes, seed,
         n_cpus, chunk_size, config, verbose):
    """ Main API of pysubk.

    COMMAND is one of compute, bounds, exact, critical, scan or bench;
    INPUT is a graph6 or edge-list file (default: stdin).
    """

    ##### set + check parameters #####
    cfg = locals()
    logger = get_logger(verbose)
    try:
        cfg = load_config_file(cfg, logger)
        logger.setLevel(cfg['verbose'])
        cfg = set_defaults(cfg, logger)
        check_parameters(cfg, logger)
    except ConfigError as e:
        logger.error(str(e))
        sys.exit(2)

    ##### run #####
    logger.info(f"Starting {command} for k = {list(cfg['k'])}")
    try:
        failed = RUNNERS[command](cfg, logger)
    except (OSError, click.FileError) as e:
        logger.error(f"Could not read input: {e}")
        sys.exit(1)

    if failed:
        logger.warning("Finished with errors or violations")
        sys.exit(1)

    logger.info("Done")


if __name__ == '__main__':
    main()
