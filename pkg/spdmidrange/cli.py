"""
======================
COMMAND-LINE INTERFACE
======================

`spdmidrange <command> [options]`:

- `gen`: random or clustered SPD dataset (JSON or CSV);
- `midrange`: IMR of a dataset file, optionally with trace, active data and the d = 2 oracle,
  or the built-in three-matrix example (`--example`);
- `cluster {kmeans,xmeans,kmeanspp}`: cluster a dataset file, scored against its labels if present;
- `experiment {convergence,invariance,xmeans,kmeanspp,trajectories}`: experiment tables as CSV;
- `cone-export`: cone coordinates of a 2x2 dataset and its IMR trajectory.

`--dim`, `--n`, `--k`, `--iters` and `--runs` are accepted by every command; a command ignores the
ones it has no use for. Users: `--dim`, `--n`: gen, experiment; `--k`: gen, cluster, experiment;
`--iters`: midrange, cluster, experiment, cone-export; `--runs`: experiment.

Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""


from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
import json
from pathlib import Path
import sys

from loguru import logger
import numpy as np
from pydantic import ValidationError

from spdmidrange.core.clustering.accuracy import AccuracyReport, score_accuracy
from spdmidrange.core.clustering.bic import BicLikelihood
from spdmidrange.core.clustering.dataset import Dataset
from spdmidrange.core.clustering.init import InitStrategy
from spdmidrange.core.clustering.kmeans import kmeans
from spdmidrange.core.clustering.model import ClusterModel
from spdmidrange.core.clustering.xmeans import xmeans
from spdmidrange.core.midrange.active import ActiveDataReport, detect_active_data
from spdmidrange.core.midrange.imr import ImrConfig, imr_cost, inductive_midrange
from spdmidrange.core.midrange.oracle import optimization_midrange_2d
from spdmidrange.core.spd.matrix import SpdMatrix
from spdmidrange.core.thompson.metric import thompson_distance
from spdmidrange.core.util.config import SpdConfig
from spdmidrange.core.util.errors import SpdNumericalError, SpdValidationError
from spdmidrange.core.util.rng import make_stream
from spdmidrange.experiments.clustering import KMEANSPP_DIMS, XMEANS_DIMS, experiment_kmeanspp, experiment_xmeans
from spdmidrange.experiments.cone_export import export_cone_csv
from spdmidrange.experiments.convergence import CONVERGENCE_CONFIGS, experiment_convergence
from spdmidrange.experiments.generators import ExperimentConfig, gen_clustered_dataset, gen_random_dataset
from spdmidrange.experiments.invariance import INVARIANCE_CONFIGS, experiment_invariance
from spdmidrange.experiments.tables import CsvTable
from spdmidrange.experiments.trajectories import experiment_trajectories
from spdmidrange.experiments.worked_example import run_worked_example


EXIT_OK: int = 0
EXIT_INVALID: int = 2
EXIT_NUMERICAL: int = 3

# default repetition counts of the experiment suites
DEFAULT_RUNS: dict[str, int] = {'convergence': 10, 'invariance': 100, 'xmeans': 20, 'kmeanspp': 20, 'trajectories': 1}


# INPUT / OUTPUT
# ==============

def load_dataset(path: str) -> Dataset:
    try:
        return Dataset.from_json_dict(json.loads(Path(path).read_text(encoding='utf-8')))
    except SpdValidationError:
        raise
    # ragged or non-numeric rows surface as ValueError from numpy
    except (KeyError, TypeError, ValueError) as err:
        raise SpdValidationError(f'*** {path} IS NOT A DATASET FILE {{"points": [...], "labels": [...]}}: {err!r} ***') \
            from err


def dataset_csv(data: Dataset) -> str:
    """One row per point: index, label, then the entries in row-major order."""
    dim: int = data.dim
    table = CsvTable(columns=('index', 'label', *(f'e{r}{c}' for r in range(dim) for c in range(dim))))
    for i, point in enumerate(data):
        table.add(i, '' if data.labels is None else data.labels[i], *point.entries.ravel().tolist())
    return table.render()


def write_output(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding='utf-8')
        logger.info(f'Output written to {out}')
    else:
        sys.stdout.write(text)


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + '\n'


def parse_configs(text: str | None, default: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Parse '5x5,50x20' into [(5, 5), (50, 20)]."""
    if not text:
        return list(default)
    try:
        return [(int(d), int(n)) for d, n in (item.lower().split('x') for item in text.split(','))]
    except ValueError as err:
        raise SpdValidationError(f'*** CANNOT PARSE CONFIGURATIONS {text!r}; EXPECTED e.g. 5x5,50x20 ***') from err


def parse_dims(text: str | None, default: Sequence[int]) -> list[int]:
    if not text:
        return list(default)
    try:
        return [int(d) for d in text.split(',')]
    except ValueError as err:
        raise SpdValidationError(f'*** CANNOT PARSE DIMENSIONS {text!r}; EXPECTED e.g. 2,5,10 ***') from err


def experiment_config(args: argparse.Namespace, default_runs: int = 20, **overrides) -> ExperimentConfig:
    """ExperimentConfig from a --config JSON file overlaid with explicit flags, then `overrides`."""
    base: dict = json.loads(Path(args.config).read_text(encoding='utf-8')) if getattr(args, 'config', None) else {}
    flags: dict = {'seed': args.seed, 'dim': getattr(args, 'dim', None), 'n_points': getattr(args, 'n', None),
                   'n_clusters': getattr(args, 'k', None), 'num_iters': getattr(args, 'iters', None),
                   'runs': getattr(args, 'runs', None), 'cluster_radius': getattr(args, 'radius', None),
                   'min_center_separation': getattr(args, 'separation', None)}
    base.setdefault('runs', default_runs)
    return ExperimentConfig.model_validate(base | {name: value for name, value in flags.items() if value is not None}
                                           | overrides)


# COMMANDS
# ========

def cmd_gen(args: argparse.Namespace) -> str:
    if args.k:
        cfg: ExperimentConfig = experiment_config(args)
        data: Dataset = gen_clustered_dataset(cfg, make_stream(cfg.seed))
    else:
        cfg: ExperimentConfig = experiment_config(args, n_points=args.n or 5, n_clusters=1)
        data: Dataset = gen_random_dataset(cfg.dim, cfg.n_points, make_stream(cfg.seed))
    return dataset_csv(data) if args.format == 'csv' else to_json(data.to_json_dict())


def cmd_midrange(args: argparse.Namespace) -> str:
    if args.example:
        result = run_worked_example(num_iters=args.iters)
        if args.format == 'csv':
            table = CsvTable(columns=('quantity', 'value'))
            table.extend([('imr_cost', result.imr_cost), ('optimum_cost', result.optimum_cost),
                          ('cost_increase', result.cost_increase), ('separation', result.separation)])
            return table.render()
        return to_json({'imr': result.imr.to_json_dict(), 'imr_cost': result.imr_cost,
                        'optimum': result.optimum.to_json_dict(), 'optimum_cost': result.optimum_cost,
                        'separation': result.separation})

    data: Dataset = load_dataset(args.data)
    cfg = ImrConfig(num_iters=args.iters or SpdConfig.IMR_NUM_ITERS, init=args.init,
                    record_trace=args.trace, early_stop=args.early_stop)
    midrange, trace = inductive_midrange(data, cfg)

    if args.format == 'csv':
        return trace.to_csv() if trace else midrange.to_csv()

    output: dict = {'midrange': midrange.to_json_dict(), 'cost': imr_cost(midrange, data)}
    if trace:
        output['trace'] = {'targets': trace.targets, 'step_distances': trace.step_distances}
    if args.active:
        report: ActiveDataReport = detect_active_data(data, num_iters=cfg.num_iters)
        output['active_data'] = {name: sorted(getattr(report, name)) for name in ('active', 'external', 'internal')}
    if args.oracle:
        optimum: SpdMatrix = optimization_midrange_2d(data)
        output['oracle'] = {'optimum': optimum.to_json_dict(), 'cost': imr_cost(optimum, data),
                            'separation': thompson_distance(midrange, optimum)}
    return to_json(output)


def cmd_cluster(args: argparse.Namespace) -> str:
    data: Dataset = load_dataset(args.data)
    rng = make_stream(args.seed)

    match args.algorithm:
        case 'xmeans':
            model: ClusterModel = xmeans(data, k0=args.k or 1, rng=rng, likelihood=args.likelihood,
                                         imr_iters=args.iters)
        case 'kmeanspp':
            model: ClusterModel = kmeans(data, args.k or 1, init=InitStrategy.KMEANS_PP, imr_iters=args.iters, rng=rng)
        case _:
            model: ClusterModel = kmeans(data, args.k or 1, init=InitStrategy(args.init), imr_iters=args.iters, rng=rng)

    report: AccuracyReport | None = score_accuracy(model, data.labels) if data.labels is not None else None

    if args.format == 'csv':
        if report is None:
            table = CsvTable(columns=('index', 'cluster'))
            table.extend(enumerate(model.assignment))
            return table.render()
        return f'{AccuracyReport.CSV_HEADER}\n{report.to_csv_row()}\n'

    output: dict = dict(model.to_json_dict())
    if report:
        output['accuracy'] = {'points_identified': report.points_identified,
                              'clusters_identified': report.clusters_identified,
                              'clusters_lost': report.clusters_lost}
    return to_json(output)


def cmd_experiment(args: argparse.Namespace) -> str:
    # only the clustering suites use true clusters
    overrides: dict = {} if args.suite in ('xmeans', 'kmeanspp') else {'n_clusters': 1}
    cfg: ExperimentConfig = experiment_config(args, default_runs=DEFAULT_RUNS[args.suite], **overrides)
    progress: bool = not args.quiet

    match args.suite:
        case 'convergence':
            return experiment_convergence(cfg, parse_configs(args.configs, CONVERGENCE_CONFIGS), progress=progress)
        case 'invariance':
            return experiment_invariance(cfg, parse_configs(args.configs, INVARIANCE_CONFIGS), progress=progress)
        case 'xmeans':
            return experiment_xmeans(cfg, parse_dims(args.dims, XMEANS_DIMS), progress=progress)
        case 'kmeanspp':
            return experiment_kmeanspp(cfg, parse_dims(args.dims, KMEANSPP_DIMS), progress=progress)
        case _:
            return experiment_trajectories(cfg, dim=args.dim or 2, n_points=args.n or 10)


def cmd_cone_export(args: argparse.Namespace) -> str:
    data: Dataset = load_dataset(args.data)
    trace = None
    if args.trace:
        _, trace = inductive_midrange(data, ImrConfig(num_iters=args.iters or SpdConfig.IMR_NUM_ITERS,
                                                      record_trace=True))
    report: ActiveDataReport | None = detect_active_data(data, num_iters=args.iters) if args.active else None
    return export_cone_csv(data, trace=trace, report=report)


# PARSER
# ======

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help='master random seed (default: SPDMIDRANGE_SEED)')
    common.add_argument('--out', type=str, default=None, help='output file (default: stdout)')
    common.add_argument('--format', choices=('json', 'csv'), default='json', help='output format (default: json)')
    common.add_argument('-v', '--verbose', action='store_true', help='log debug messages')
    common.add_argument('-q', '--quiet', action='store_true', help='log warnings only, no progress bars')
    common.add_argument('--dim', type=int, default=None, help='matrix dimension d (gen, experiment)')
    common.add_argument('--n', type=int, default=None, help='number of points N (gen, experiment)')
    common.add_argument('--k', type=int, default=None,
                        help='gen, experiment: true clusters (gen: omit for unclustered data); cluster: k, or k0 for X-means')
    common.add_argument('--iters', type=int, default=None,
                        help='IMR iterations (midrange, experiment, cone-export), per centroid (cluster)')
    common.add_argument('--runs', type=int, default=None, help='repetitions (experiment; default depends on the suite)')

    parser = argparse.ArgumentParser(prog='spdmidrange',
                                     description='Thompson-metric midranges and clustering of SPD matrices',
                                     formatter_class=argparse.RawTextHelpFormatter,
                                     epilog='Examples:\n'
                                            '    spdmidrange gen --dim 2 --n 200 --k 10 --seed 1 --out data.json\n'
                                            '    spdmidrange midrange --example\n'
                                            '    spdmidrange cluster kmeanspp --data data.json --k 10 --format csv\n'
                                            '    spdmidrange experiment convergence --runs 10 --out table1.csv')
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', parents=[common], help='generate a random or clustered dataset')
    gen.add_argument('--radius', type=float, default=None, help='cluster radius in d∞ (default: 0.2)')
    gen.add_argument('--separation', type=float, default=None, help='minimum center separation (default: 1.0)')
    gen.set_defaults(handler=cmd_gen)

    midrange = commands.add_parser('midrange', parents=[common], help='inductive midrange of a dataset')
    midrange.add_argument('--data', type=str, default=None, help='dataset JSON file')
    midrange.add_argument('--init', type=int, default=0, help='index of the initial data point (default: 0)')
    midrange.add_argument('--trace', action='store_true', help='record the trace (CSV format: the trace table)')
    midrange.add_argument('--early-stop', action='store_true', help='stop once steps stay below tolerance')
    midrange.add_argument('--active', action='store_true', help='also classify active/external/internal data')
    midrange.add_argument('--oracle', action='store_true', help='also compute the d = 2 optimization midrange')
    midrange.add_argument('--example', action='store_true', help='run the built-in three-matrix 2x2 example')
    midrange.set_defaults(handler=cmd_midrange)

    cluster = commands.add_parser('cluster', parents=[common], help='cluster a dataset')
    cluster.add_argument('algorithm', choices=('kmeans', 'xmeans', 'kmeanspp'))
    cluster.add_argument('--data', type=str, required=True, help='dataset JSON file')
    cluster.add_argument('--init', choices=[s.value for s in InitStrategy], default=InitStrategy.RANDOM_POINTS.value,
                         help='k-means initialization (default: random_points)')
    cluster.add_argument('--likelihood', choices=[s.value for s in BicLikelihood], default=BicLikelihood.SCALAR.value,
                         help='X-means BIC likelihood (default: scalar)')
    cluster.set_defaults(handler=cmd_cluster)

    experiment = commands.add_parser('experiment', parents=[common], help='run an experiment suite (CSV)')
    experiment.add_argument('suite', choices=('convergence', 'invariance', 'xmeans', 'kmeanspp', 'trajectories'))
    experiment.add_argument('--config', type=str, default=None, help='ExperimentConfig JSON file')
    experiment.add_argument('--configs', type=str, default=None, help='(d, N) list for convergence/invariance, e.g. 5x5,5x20')
    experiment.add_argument('--dims', type=str, default=None, help='dimension list for xmeans/kmeanspp, e.g. 2,5,10')
    experiment.set_defaults(handler=cmd_experiment)

    cone = commands.add_parser('cone-export', parents=[common], help='cone coordinates of 2x2 data (CSV)')
    cone.add_argument('--data', type=str, required=True, help='dataset JSON file of 2x2 matrices')
    cone.add_argument('--trace', action='store_true', help='include the IMR trajectory')
    cone.add_argument('--active', action='store_true', help='tag data points with their active-data role')
    cone.set_defaults(handler=cmd_cone_export)

    return parser


def configure_logging(verbose: bool = False, quiet: bool = False):
    logger.remove()
    logger.add(sys.stderr, level='DEBUG' if verbose else 'WARNING' if quiet else 'INFO')


def main(argv: Sequence[str] | None = None) -> int:
    args: argparse.Namespace = build_parser().parse_args(argv)
    configure_logging(verbose=args.verbose, quiet=args.quiet)

    if args.command == 'midrange' and not (args.example or args.data):
        logger.error('midrange needs --data FILE or --example')
        return EXIT_INVALID

    handler: Callable[[argparse.Namespace], str] = args.handler
    try:
        write_output(handler(args), args.out)

    except (SpdValidationError, ValidationError, json.JSONDecodeError, FileNotFoundError) as err:
        logger.error(f'Invalid input: {err}')
        return EXIT_INVALID

    except (SpdNumericalError, np.linalg.LinAlgError) as err:
        logger.error(f'Numerical failure: {err}')
        return EXIT_NUMERICAL

    return EXIT_OK
