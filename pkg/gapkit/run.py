"""
-------------------------------------------------
gapkit - command line entry point
gapkit <command> [options]
python3 -m gapkit.run <command> [options]

    fit          fit a reference Gaussian model
    gap          distribution gap of test sets
    pool         density / diversity / domain gap of a pool
    subset       sub-pool ids under a subset scheme
    equiv-check  randomized sigmoid / GDA equivalence check
    select       gap-aware selection from per-item distances
    frechet      Frechet distance between two models

    --config path.yml               : run configuration file
    --config:section.key=value      : override a configuration value
    --seed N                        : 64-bit seed for all randomness
    --threads N                     : worker threads for data-parallel maps
    --out DIR                       : output directory
    --print                         : echo log messages to stderr
    --debug                         : keep debug messages in the log

Exit status: 0 success, 2 input / validation error,
3 numeric failure.
-------------------------------------------------
"""

from typing import Any, Dict, List, Optional, Tuple, Type
import argparse, json, os, sys

from gapkit import __version__
from gapkit.core import Config, GapError, MLog, Module, RunManifest, SelectionMode
from gapkit.core.Module import Sequence
from gapkit.modules import (FitRunner, EquivalenceRunner, SelectionRunner, GapProcessor,
                            PoolProcessor, FrechetProcessor, SubsetFilter, ReportExporter)

ERROR_FILE = 'error.json'

# computing module per command; every workflow ends with the ReportExporter
COMMANDS: Dict[str, Type[Module]] = {
    'fit': FitRunner,
    'gap': GapProcessor,
    'pool': PoolProcessor,
    'subset': SubsetFilter,
    'equiv-check': EquivalenceRunner,
    'select': SelectionRunner,
    'frechet': FrechetProcessor,
}

GLOBAL_FLAGS = ('config', 'seed', 'threads', 'out', 'print', 'debug')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument('--config', type=str, help='Run configuration file (YAML).')
    common.add_argument('--seed', type=int, help='Seed for all randomness (unsigned 64-bit). Default 0.')
    common.add_argument('--threads', type=int, help='Worker threads for data-parallel maps. Results do not depend on it.')
    common.add_argument('--out', type=str, help='Output directory. Default: current directory.')
    common.add_argument('--print', action='store_true', default=None, help='Echo log messages to stderr.')
    common.add_argument('--debug', action='store_true', default=None, help='Keep debug messages (module timing) in the log.')

    parser = argparse.ArgumentParser(prog='gapkit', description='Gaussian distribution gap metrics for detector features.', allow_abbrev=False)
    parser.add_argument('--version', action='version', version=f'gapkit {__version__}')
    commands = parser.add_subparsers(dest='command', required=True, metavar='command')

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=help, allow_abbrev=False)

    fit = add('fit', 'fit a reference Gaussian model')
    fit.add_argument('--reference', type=str, help='Reference feature file (.csv or FSET binary).')
    fit.add_argument('--ridge', type=float, help='Ridge added to the covariance diagonal. Default 0.')
    fit.add_argument('--model-out', type=str, help='Model path. Default: <out>/model.json.')

    gap = add('gap', 'distribution gap of test sets against a model')
    gap.add_argument('--model', type=str, help='Reference model json.')
    gap.add_argument('--test', type=str, nargs='+', action='extend', help='Test feature file(s); further files are compared in a table.')
    gap.add_argument('--fractions', type=float, nargs='+', help='Kept fractions for the filtered gap. Default 1.0.')
    gap.add_argument('--bins', type=int, help='Histogram bins. Default 20.')
    gap.add_argument('--range', type=float, nargs=2, dest='hist_range', metavar=('LO', 'HI'), help='Histogram range over sqrt distances.')
    gap.add_argument('--no-scatter', action='store_false', dest='scatter', default=None, help='Do not export (score, distance) pairs.')
    gap.add_argument('--outlier-threshold', type=float, help='Report the number of samples whose distance exceeds this value.')
    gap.add_argument('--model-before', type=str, help='Export the per-sample distance change from this model.')

    pool = add('pool', 'density, diversity and domain gap of a synthetic pool')
    pool.add_argument('--model', type=str, help='Reference model json.')
    pool.add_argument('--pool', type=str, help='Pool feature file.')
    pool.add_argument('--grid', type=str, help='Grid manifest (YAML) or builtin grid name (archangel).')
    pool.add_argument('--exponent', type=float, help='Diversity exponent k. Default 10.')
    pool.add_argument('--scheme', type=str, nargs='+', action='extend', dest='schemes', help='Also report each scheme\'s sub-pool.')

    subset = add('subset', 'sub-pool ids of a grid under a scheme')
    subset.add_argument('--grid', type=str, help='Grid manifest (YAML) or builtin grid name (archangel).')
    subset.add_argument('--scheme', type=str, help='Builtin scheme name or scheme file.')
    subset.add_argument('--scheme-name', type=str, help='Scheme to pick from a file holding several.')

    equiv = add('equiv-check', 'randomized sigmoid / GDA posterior equivalence check')
    equiv.add_argument('--trials', type=int, help='Random instances. Default 1000.')
    equiv.add_argument('--dim-max', type=int, help='Largest dimension drawn. Default 8.')

    select = add('select', 'gap-aware selection')
    select.add_argument('--per-item', type=str, help='Gap report json or per_sample.csv.')
    select.add_argument('--count', type=int, help='Number of items to select.')
    select.add_argument('--mode', type=str, choices=[m.value for m in SelectionMode], help='Selection mode. Default gap-weighted.')
    select.add_argument('--temperature', type=float, help='Selection temperature. Default 1.')
    select.add_argument('--trials', type=int, help='Monte Carlo trials for a bias report. Default 0 (off).')

    frechet = add('frechet', 'Frechet distance between two Gaussian models')
    frechet.add_argument('--model-a', type=str, help='First model json.')
    frechet.add_argument('--model-b', type=str, help='Second model json.')

    return parser


def parse_args(argv: List[str]) -> Tuple[argparse.Namespace, List[str]]:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    unknown = [a for a in extra if not a.startswith('--config:')]
    if unknown:
        parser.error(f"unrecognized arguments: {' '.join(unknown)}")
    return args, extra


def split_args(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    """(general config section, local module config) from parsed arguments; unset flags are left out."""
    values = {k: v for k, v in vars(args).items() if v is not None and k != 'command'}
    general = {k: v for k, v in values.items() if k in GLOBAL_FLAGS and k != 'config'}
    local = {k: v for k, v in values.items() if k not in GLOBAL_FLAGS}
    return general, local


def run(config: Config, command: str, local_config: Optional[dict] = None) -> int:
    """Run one command's workflow; returns the exit status."""
    logger = MLog(config)
    config.useLogger(logger)

    workflow = [(COMMANDS[command], local_config or {}), (ReportExporter, {})]
    for module, _ in workflow:
        logger.registerModule(module.__name__)

    config.checkGeneral()

    config.data.manifest = RunManifest(command=command, version=__version__)
    logger.start()
    Sequence(config, workflow).task()
    return config.data.exit_code


def report_error(error: GapError, out: str, logger: Optional[MLog] = None) -> None:
    document = error.to_dict()
    print(json.dumps(document, sort_keys=True))
    if logger is not None:
        logger.log(str(error), level='ERROR')
    try:
        os.makedirs(out, exist_ok=True)
        with open(os.path.join(out, ERROR_FILE), 'w', encoding='utf-8') as f:
            json.dump(document, f, indent=4, sort_keys=True)
            f.write('\n')
    except OSError as e:
        print(f"cannot write {ERROR_FILE} to {out}: {e.strerror}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)

    try:
        args, extra = parse_args(argv)
    except SystemExit as e:
        # argparse reports argument errors with status 2
        return e.code if isinstance(e.code, int) else 2

    general, local = split_args(args)
    out = general.get('out', '.')
    config: Optional[Config] = None

    try:
        config = Config(config_file=args.config, config={'general': general}, args=extra)
        out = config['out']
        return run(config, args.command, local)
    except GapError as e:
        report_error(e, out, config.logger if config is not None else None)
        return e.exit_code
    finally:
        if config is not None and config.logger is not None:
            config.logger.export(out)


if __name__ == '__main__':
    sys.exit(main())
