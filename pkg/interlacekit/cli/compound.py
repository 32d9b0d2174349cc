"""
    Print the k-th compound matrix of a matrix file
"""

import logging
import sys
import time

from collections import OrderedDict

from interlacekit.cli.argparsers import compound_argsparser
from interlacekit.cli.exceptionhandler import install_hook, run_command
from interlacekit.cli.logger import init_logger
from interlacekit.cli.matrixio import (JSON_FORMAT, ReportDocument,
                                       format_text, matrix_input,
                                       matrix_to_rows, read_matrix)
from interlacekit.common.errors import DimensionError
from interlacekit.common.matrix import compound, index_sets


def run_compound(args):
    """
        Text input gets the compound back as text on stdout; JSON
        input (or --report) gets a report document with the compound
        and the lexicographic index sets labelling its rows and columns
    """

    init_logger(args.log_file, args.quiet, args.verbose)

    start = time.time()
    matrix_file = read_matrix(args.input)
    A = matrix_file.matrix.require_square()
    k = args.k
    if k < 1 or k > A.size:
        raise DimensionError("k = {} is out of range 1..{}".format(
            k, A.size))

    C = compound(A, k)
    logging.info("compound of order {} is {}x{}".format(k, C.rows, C.cols))

    if matrix_file.source_format != JSON_FORMAT and not args.report:
        sys.stdout.write(format_text(C, decimal=args.decimal))
        return 0

    payload = OrderedDict([
        ('k', k),
        ('row_sets', [list(s) for s in index_sets(A.rows, k)]),
        ('col_sets', [list(s) for s in index_sets(A.cols, k)]),
        ('matrix', matrix_to_rows(C, decimal=args.decimal))])
    inputs = matrix_input(matrix_file)
    inputs['k'] = k
    document = ReportDocument('compound', inputs, payload,
                              {'total': time.time() - start})
    print(document.to_json())
    return 0


def compound_main(argv=None):
    install_hook()
    args = compound_argsparser().parse_args(argv)
    return run_command(run_compound, args)
