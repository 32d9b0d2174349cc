"""
    Python script to verify one eigenvalue monotonicity / interlacing
    property (or one of the algebraic identity suites) on a matrix
    file. Exit code 0 when the property holds, 1 when it is violated
    and 2 on input errors.

    License:

    MIT License

    Copyright (c) 2026 The interlace-kit authors

    Permission is hereby granted, free of charge, to any person
    obtaining a copy of this software and associated documentation
    files (the "Software"), to deal in the Software without
    restriction, including without limitation the rights to use, copy,
    modify, merge, publish, distribute, sublicense, and/or sell copies
    of the Software, and to permit persons to whom the Software is
    furnished to do so, subject to the following conditions:

    The above copyright notice and this permission notice shall be
    included in all copies or substantial portions of the Software.

    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
    EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
    OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
    NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS
    BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
    ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
    CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
    SOFTWARE.

"""

import logging
import time

from collections import OrderedDict

from interlacekit.cli.argparsers import verify_argsparser
from interlacekit.cli.exceptionhandler import install_hook, run_command
from interlacekit.cli.logger import init_logger
from interlacekit.cli.matrixio import (ReportDocument, matrix_input,
                                       read_matrix)
from interlacekit.common.classify import proposition1_closure_suite
from interlacekit.common.errors import (DimensionError, InterlaceKitError,
                                        MatrixParseError)
from interlacekit.common.exact import format_exact, to_exact
from interlacekit.common.interlace import (InterlaceReport,
                                           border_product_descartes,
                                           check_kotelyansky_hypothesis,
                                           choose_alpha_beta,
                                           grid_sign_sampler,
                                           kotelyansky_products,
                                           verify_tau, verify_theorem10,
                                           verify_theorem9,
                                           verify_weak_interlacing, zigzag)
from interlacekit.common.matrix import verify_identities
from interlacekit.common.settings import PERRON_TOLERANCE
from interlacekit.common.spectral import (perron_lower_bound_check,
                                          spectral_radius_positive,
                                          verify_submatrix_radius_bound)


def _rational_option(value, name):
    if value is None:
        return None
    try:
        return to_exact(value)
    except (TypeError, ValueError):
        raise MatrixParseError("{} '{}' is not a decimal or p/q "
                               "literal".format(name, value))


def _bracket(A, args):
    alpha = _rational_option(args.alpha, '--alpha')
    beta = _rational_option(args.beta, '--beta')
    if alpha is None or beta is None:
        auto_alpha, auto_beta = choose_alpha_beta(A, nonnegative=True)
        alpha = auto_alpha if alpha is None else alpha
        beta = auto_beta if beta is None else beta
    if alpha >= beta:
        raise DimensionError("need alpha < beta, got [{}, {}]".format(
            format_exact(alpha), format_exact(beta)))
    return alpha, beta


def _verify_tau(A, args, strict):
    report = verify_tau(A, strict=strict, all_pairs=args.all_pairs,
                        progress=not args.quiet)
    return report.holds, report.to_dict()


def _verify_weak(A, args):
    report = verify_weak_interlacing(A)
    return report.holds, report.to_dict()


def _verify_theorem10(A, args):
    report = verify_theorem10(A)
    if args.r is None:
        return report.holds, report.to_dict()

    n = A.size
    if not 1 <= args.r <= n:
        raise DimensionError("--r {} is out of range 1..{}".format(
            args.r, n))

    if not report.holds and 'reason' in (report.counterexample or {}):
        return False, report.to_dict()

    chains = report.details['border'] + report.details['interior']
    result = [c for c in chains if c['r'] == args.r]
    if not result:
        # n == 1, no deleted index chains
        return report.holds, report.to_dict()
    restricted = InterlaceReport('theorem10', checked_pairs=2 * (n - 1))
    restricted.details['r'] = args.r
    restricted.details['border_index'] = args.r in (1, n)
    restricted.details['chain'] = result[0]
    if not result[0]['holds']:
        restricted.fail(result[0])
    return restricted.holds, restricted.to_dict()


def _verify_kotelyansky(A, args):
    B = zigzag(A) if args.zigzag else A
    alpha, beta = _bracket(B, args)
    holds, witness = check_kotelyansky_hypothesis(B, alpha, beta)

    report = InterlaceReport('kotelyansky', checked_pairs=B.size - 1)
    report.details['alpha'] = alpha
    report.details['beta'] = beta
    report.details['zigzag'] = args.zigzag
    products = []
    for k, p in kotelyansky_products(B):
        positive, changes, _ = grid_sign_sampler(p, alpha, beta)
        products.append(OrderedDict([
            ('k', k),
            ('coefficients', [format_exact(c) for c in p.coefficients]),
            ('grid_positive', positive), ('grid_sign_changes', changes)]))
    report.details['products'] = products
    if not holds:
        report.fail(witness)
    return report.holds, report.to_dict()


def _verify_theorem9(A, args):
    alpha = _rational_option(args.alpha, '--alpha')
    beta = _rational_option(args.beta, '--beta')
    report = verify_theorem9(A, alpha, beta, zigzag_first=args.zigzag)
    return report.holds, report.to_dict()


def _verify_border_descartes(A, args):
    report = border_product_descartes(A)
    return report.holds, report.to_dict()


def _verify_identities(A, args):
    results = verify_identities(A)
    failed = [name for name, holds in results.items() if holds is False]
    payload = OrderedDict([
        ('identities', OrderedDict(
            (name, 'skipped' if holds is None else holds)
            for name, holds in results.items())),
        ('failed', failed)])
    return not failed, payload


def _verify_perron(A, args):
    result = spectral_radius_positive(A)
    radius_ok, failing = verify_submatrix_radius_bound(A)

    # Collatz-Wielandt: A x >= alpha x for alpha the smallest ratio
    n = A.size
    x = result.vector
    alpha, lower_ok = None, False
    if result.vector_positive:
        ratios = [sum(A[i, j] * x[j] for j in range(n)) / x[i]
                  for i in range(n)]
        alpha = min(ratios)
        if max(ratios) == alpha:
            alpha -= PERRON_TOLERANCE
        try:
            lower_ok = perron_lower_bound_check(A, x, alpha)
        except InterlaceKitError as e:
            logging.error(str(e))

    holds = result.vector_positive and result.functional_positive and \
        radius_ok and lower_ok
    payload = OrderedDict([
        ('perron', result.to_dict()),
        ('submatrix_radius_bound', radius_ok),
        ('submatrix_radius_failure', None if failing is None
         else list(failing)),
        ('lower_bound_alpha', None if alpha is None
         else format_exact(alpha, decimal=True)),
        ('lower_bound', lower_ok)])
    return holds, payload


def _verify_proposition1(A, args):
    report = proposition1_closure_suite(A, seed=args.seed)
    return report.holds, report.to_dict()


PROPERTY_HANDLERS = OrderedDict([
    ('tau', lambda A, args: _verify_tau(A, args, strict=False)),
    ('tau-strict', lambda A, args: _verify_tau(A, args, strict=True)),
    ('weak', _verify_weak),
    ('theorem10', _verify_theorem10),
    ('kotelyansky', _verify_kotelyansky),
    ('theorem9', _verify_theorem9),
    ('border-descartes', _verify_border_descartes),
    ('identities', _verify_identities),
    ('perron', _verify_perron),
    ('proposition1', _verify_proposition1)])


def run_verify(args):
    """
        Verify args.property on the matrix in args.input

        Args:
            args (argparse.Namespace): parsed verify arguments

        Returns:
            int: 0 if the property holds, 1 if it is violated
    """

    init_logger(args.log_file, args.quiet, args.verbose)

    start = time.time()
    matrix_file = read_matrix(args.input)
    A = matrix_file.matrix
    A.require_square()

    logging.info("verifying {} on {}".format(args.property,
                                             matrix_file.path))
    holds, result = PROPERTY_HANDLERS[args.property](A, args)

    inputs = matrix_input(matrix_file)
    inputs['property'] = args.property
    for option in ('r', 'alpha', 'beta'):
        if getattr(args, option) is not None:
            inputs[option] = getattr(args, option)
    if args.zigzag:
        inputs['zigzag'] = True
    if args.all_pairs:
        inputs['all_pairs'] = True

    payload = OrderedDict([('property', args.property), ('holds', holds),
                           ('result', result)])
    document = ReportDocument('verify', inputs, payload,
                              {'total': time.time() - start})
    print(document.to_json())

    if not holds:
        logging.info("{} is violated".format(args.property))
        return 1
    return 0


def verify_main(argv=None):
    """
        The main entry point for the verify script
    """

    install_hook()

    # parse the command line arguments
    parser = verify_argsparser()
    args = parser.parse_args(argv)

    return run_command(run_verify, args)
