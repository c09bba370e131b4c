import os.path as op
import toml

from .constants import (COMMANDS, INPUT_FORMATS, OUTPUT_FORMATS, SCAN_FILTERS,
                        ORACLE_CAP, BITSET_WORD, CHUNK_SIZE, BENCH_SIZES, BENCH_SEED,
                        ATLAS_MAX_N)
from .exceptions import ConfigError

# Option defaults, shared by the click options and the config-file merge
DEFAULTS = dict(
    k=(),
    fmt='graph6',
    output='jsonl',
    oracle_cap=ORACLE_CAP,
    filter=(),
    bench_sizes=None,
    n_cpus=1,
    chunk_size=CHUNK_SIZE,
    seed=BENCH_SEED,
    max_n=ATLAS_MAX_N,
    header=False,
    verbose='INFO'
)

_ORACLE_COMMANDS = ('exact', 'scan')


def load_config_file(cfg, logger):
    """ Fills options left at their default from a TOML file (--config). """
    if cfg['config'] is None:
        return cfg

    if not op.isfile(cfg['config']):
        raise ConfigError(f"Config file {cfg['config']} does not exist!")

    try:
        file_cfg = toml.load(cfg['config'])
    except toml.TomlDecodeError as e:
        raise ConfigError(f"Could not parse {cfg['config']}: {e}")

    for key, value in file_cfg.items():
        key = key.replace('-', '_')
        if key == 'format':
            key = 'fmt'
        if key not in DEFAULTS:
            logger.warning(f"Ignoring unknown key '{key}' in {cfg['config']}")
            continue

        if isinstance(DEFAULTS[key], tuple) and not isinstance(value, list):
            value = [value]
        if isinstance(value, list):
            value = tuple(value)

        if cfg[key] == DEFAULTS[key]:
            cfg[key] = value
            logger.debug(f"Setting {key} = {value!r} from {cfg['config']}")
        else:
            logger.debug(f"Keeping command-line value for {key} (config has {value!r})")

    logger.info(f"Loaded settings from {cfg['config']}")
    return cfg


def _parse_sizes(sizes):
    if isinstance(sizes, str):
        sizes = [s for s in sizes.replace(' ', '').split(',') if s]
    try:
        return tuple(int(float(s)) for s in sizes)
    except (TypeError, ValueError):
        raise ConfigError(f"Could not parse bench sizes {sizes!r}; use e.g. 100000,1000000")


def set_defaults(cfg, logger):
    """ Sets default inputs. """
    if not cfg['k']:
        cfg['k'] = (1,)
        logger.debug("No --k given, so using k = 1")
    cfg['k'] = tuple(cfg['k'])
    cfg['filter'] = tuple(cfg['filter'])

    if cfg['input'] is None:
        cfg['input'] = '-'

    if cfg['command'] == 'bench':
        cfg['bench_sizes'] = BENCH_SIZES if cfg['bench_sizes'] is None else _parse_sizes(cfg['bench_sizes'])
    elif cfg['bench_sizes'] is not None:
        logger.warning("--bench-sizes only affects the bench command; ignoring it")

    if cfg['fmt'] == 'atlas' and cfg['input'] != '-':
        logger.warning(f"Reading the built-in atlas, so ignoring input {cfg['input']}")

    return cfg


def check_parameters(cfg, logger):
    """ Checks parameter settings and raises errors in case of
    incompatible parameters. """

    if cfg['command'] not in COMMANDS:
        raise ConfigError(f"Unknown command '{cfg['command']}'; choose from {COMMANDS}")

    if cfg['fmt'] not in INPUT_FORMATS:
        raise ConfigError(f"Unknown input format '{cfg['fmt']}'; choose from {INPUT_FORMATS}")

    if cfg['output'] not in OUTPUT_FORMATS:
        raise ConfigError(f"Unknown output format '{cfg['output']}'; choose from {OUTPUT_FORMATS}")

    bad_k = [k for k in cfg['k'] if not isinstance(k, int) or isinstance(k, bool) or k < 1]
    if bad_k:
        raise ConfigError(f"All k values must be integers >= 1, got {bad_k}")

    if not isinstance(cfg['oracle_cap'], int) or cfg['oracle_cap'] < 1:
        raise ConfigError(f"Oracle cap must be a positive integer, got {cfg['oracle_cap']!r}")

    if cfg['oracle_cap'] > BITSET_WORD:
        raise ConfigError(f"Oracle cap {cfg['oracle_cap']} is above the structural ceiling of "
                          f"{BITSET_WORD} vertices")

    if cfg['oracle_cap'] > ORACLE_CAP and cfg['command'] in _ORACLE_COMMANDS:
        logger.warning(f"Oracle cap raised to {cfg['oracle_cap']}; the exact search is "
                       "exponential and may run for a very long time")

    unknown = [f for f in cfg['filter'] if f not in SCAN_FILTERS]
    if unknown:
        raise ConfigError(f"Unknown filter(s) {unknown}; choose from {SCAN_FILTERS}")

    if cfg['filter'] and cfg['command'] != 'scan':
        raise ConfigError("--filter can only be used with the scan command")

    if cfg['n_cpus'] < 1 and cfg['n_cpus'] != -1:
        raise ConfigError(f"--n-cpus must be >= 1 (or -1 for all cores), got {cfg['n_cpus']}")

    if cfg['chunk_size'] < 1:
        raise ConfigError(f"--chunk-size must be >= 1, got {cfg['chunk_size']}")

    if not 1 <= cfg['max_n'] <= ATLAS_MAX_N:
        raise ConfigError(f"--max-n must lie in 1..{ATLAS_MAX_N} (the atlas stops there), "
                          f"got {cfg['max_n']}")

    if cfg['command'] == 'bench':
        if not cfg['bench_sizes'] or any(s < 1 for s in cfg['bench_sizes']):
            raise ConfigError(f"Bench sizes must be positive, got {cfg['bench_sizes']}")

    if max(cfg['k']) > 5:
        logger.warning(f"k = {max(cfg['k'])} is above every maximum degree of small corpora; "
                       "expect sub_k = n for most graphs")
