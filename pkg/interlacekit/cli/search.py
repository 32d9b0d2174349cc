"""
    Seeded search over generated matrices

    With --target interior-counterexample the STP (or SK) generator is
    sampled until some interior deleted index breaks eigenvalue
    interlacing; any other target emits --budget instances of that
    generator family. Everything is reproducible from (seed, config).
"""

import json
import logging
import os
import time

import pandas as pd

from collections import OrderedDict

from interlacekit.cli.argparsers import search_argsparser
from interlacekit.cli.exceptionhandler import install_hook, run_command
from interlacekit.cli.logger import init_logger
from interlacekit.cli.matrixio import ReportDocument, matrix_to_rows
from interlacekit.common.errors import (DimensionError,
                                        GeneratorBudgetError)
from interlacekit.common.gen import GenConfig, generate
from interlacekit.common.interlace import (instance_rng, jsonable,
                                           search_interior_counterexample)


def _config_from_args(args):
    target = args.family if args.target == 'interior-counterexample' \
        else args.target
    return GenConfig(seed=args.seed, n=args.n, magnitude=args.magnitude,
                     max_denominator=args.max_denominator, target=target)


def _hit_payload(hit, decimal):
    if hit is None:
        return None
    return OrderedDict([('index', hit.index),
                        ('seed', hit.seed),
                        ('matrix', matrix_to_rows(hit.matrix, decimal)),
                        ('r', hit.r),
                        ('j', hit.j),
                        ('roots', jsonable(hit.roots)),
                        ('reverified', True)])


def _write_outputs(output_dir, config_dict, records, results):
    """ config JSON, CSV log and results JSON under output_dir """

    if not os.path.isdir(output_dir):
        raise DimensionError("Directory {} does not exist".format(
            output_dir))

    config_fname = os.path.join(output_dir, 'search_config.json')
    with open(config_fname, 'w') as f:
        json.dump(config_dict, f, indent=2)

    log_fname = os.path.join(output_dir, 'search_log.csv')
    pd.DataFrame(records).to_csv(log_fname, index=False)

    hits_fname = os.path.join(output_dir, 'search_hits.json')
    with open(hits_fname, 'w') as f:
        json.dump(results, f, indent=2)

    logging.info("search outputs written to {}".format(output_dir))


def run_search(args):
    """
        Run the search described by args and print the report

        Args:
            args (argparse.Namespace): parsed search arguments

        Returns:
            int: 0, whether or not something was found
    """

    init_logger(args.log_file, args.quiet, args.verbose)

    if args.budget <= 0:
        raise GeneratorBudgetError("--budget must be positive, got "
                                   "{}".format(args.budget))
    if args.workers < 1:
        raise DimensionError("--workers must be at least 1")

    start = time.time()
    config = _config_from_args(args)
    inputs = OrderedDict([('target', args.target),
                          ('config', config.to_dict()),
                          ('budget', args.budget)])
    logging.info("search {} with {}".format(args.target, config))

    records = []
    payload = OrderedDict([('target', args.target)])
    if args.target == 'interior-counterexample':
        hit = search_interior_counterexample(
            config, args.budget, workers=args.workers,
            progress=not args.quiet, records=records)
        payload['outcome'] = 'hit' if hit is not None else 'none'
        payload['instances_checked'] = len(records)
        payload['border_failures'] = sum(
            1 for record in records if record['border_failure'])
        payload['hit'] = _hit_payload(hit, args.decimal)
        results = payload['hit']
    else:
        instances = []
        for index in range(args.budget):
            A = generate(config, instance_rng(config.seed, index))
            records.append(OrderedDict([('index', index),
                                        ('seed', config.seed),
                                        ('n', config.n),
                                        ('status', 'generated')]))
            instances.append(OrderedDict([
                ('index', index),
                ('matrix', matrix_to_rows(A, args.decimal))]))
        payload['outcome'] = 'generated'
        payload['instances'] = instances
        results = instances

    if args.output_dir is not None:
        _write_outputs(args.output_dir, inputs, records, results)

    document = ReportDocument('search', inputs, payload,
                              {'total': time.time() - start})
    print(document.to_json())
    return 0


def search_main(argv=None):
    install_hook()
    args = search_argsparser().parse_args(argv)
    return run_command(run_search, args)
