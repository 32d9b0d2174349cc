"""
    Python script to classify a matrix against the whole sign
    regularity hierarchy (positive, P, TP, STP, K, SK, JS, SJS, TJS,
    STJS, JSK, SJSK), with a witness for every negative verdict

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

from interlacekit.cli.argparsers import classify_argsparser
from interlacekit.cli.exceptionhandler import install_hook, run_command
from interlacekit.cli.logger import init_logger
from interlacekit.cli.matrixio import (ReportDocument, matrix_input,
                                       read_matrix)
from interlacekit.common.classify import classify_all
from interlacekit.common.exact import format_exact
from interlacekit.common.matrix import det


def run_classify(args):
    """
        Classify the matrix in args.input and print the report

        Args:
            args (argparse.Namespace): parsed classify arguments

        Returns:
            int: exit code, 0 on success
    """

    init_logger(args.log_file, args.quiet, args.verbose)

    start = time.time()
    matrix_file = read_matrix(args.input)
    A = matrix_file.matrix
    logging.info("classifying {}x{} matrix from {}".format(
        A.rows, A.cols, matrix_file.path))

    report = classify_all(A, matrix_id=matrix_file.name,
                          exhaustive=args.exhaustive)

    payload = OrderedDict([('classification', report.to_dict())])
    if A.is_square:
        payload['determinant'] = format_exact(det(A), decimal=args.decimal)

    document = ReportDocument('classify', matrix_input(matrix_file),
                              payload, {'total': time.time() - start})
    print(document.to_json())
    return 0


def classify_main(argv=None):
    """
        The main entry point for the classify script
    """

    install_hook()

    # parse the command line arguments
    parser = classify_argsparser()
    args = parser.parse_args(argv)

    return run_command(run_classify, args)
