import argparse

from interlacekit import __version__
from interlacekit.common.gen import TARGETS

PROPERTIES = ('tau', 'tau-strict', 'weak', 'theorem10', 'kotelyansky',
              'theorem9', 'border-descartes', 'identities', 'perron',
              'proposition1')

SEARCH_TARGETS = ('interior-counterexample',) + TARGETS


def _common_arguments(parser):
    parser.add_argument('--log-file', type=str,
                        help="path to a file that receives debug level "
                        "logs", default=None)

    parser.add_argument('--quiet', '-q', action='store_true',
                        help="only warnings and errors on stderr, no "
                        "progress bars")

    parser.add_argument('--verbose', '-v', action='store_true',
                        help="debug messages on stderr")

    parser.add_argument('--decimal', action='store_true',
                        help="print rationals as decimals instead of p/q "
                        "(display only)")


def classify_argsparser(parser=None):
    """ Command line arguments for the classify command

        Args:
            parser (argparse.ArgumentParser): parser to add to, a new
                one if None

        Returns:
            argparse.ArgumentParser
    """

    if parser is None:
        parser = argparse.ArgumentParser(prog='interlace-kit classify')

    parser.add_argument('input', type=str,
                        help="path to the matrix file (text or JSON)")

    parser.add_argument('--exhaustive', action='store_true',
                        help="collect every violating minor / sign "
                        "pattern instead of the first one")

    _common_arguments(parser)
    return parser


def compound_argsparser(parser=None):
    """ Command line arguments for the compound command

        Returns:
            argparse.ArgumentParser
    """

    if parser is None:
        parser = argparse.ArgumentParser(prog='interlace-kit compound')

    parser.add_argument('input', type=str,
                        help="path to the matrix file (text or JSON)")

    parser.add_argument('-k', type=int, required=True,
                        help="order of the compound matrix, 1 <= k <= "
                        "min(rows, cols)")

    parser.add_argument('--report', action='store_true',
                        help="print a JSON report even for text input")

    _common_arguments(parser)
    return parser


def verify_argsparser(parser=None):
    """ Command line arguments for the verify command

        Returns:
            argparse.ArgumentParser
    """

    if parser is None:
        parser = argparse.ArgumentParser(prog='interlace-kit verify')

    parser.add_argument('input', type=str,
                        help="path to the matrix file (text or JSON)")

    parser.add_argument('--property', '-p', type=str, required=True,
                        choices=PROPERTIES,
                        help="the property to verify")

    parser.add_argument('--r', type=int, default=None,
                        help="deleted index for theorem10; restricts the "
                        "report to that index")

    parser.add_argument('--alpha', type=str, default=None,
                        help="left end of the lambda interval for "
                        "kotelyansky/theorem9 (decimal or p/q)")

    parser.add_argument('--beta', type=str, default=None,
                        help="right end of the lambda interval for "
                        "kotelyansky/theorem9 (decimal or p/q)")

    parser.add_argument('--zigzag', action='store_true',
                        help="apply the permutation (1, n, 2, n-1, ...) "
                        "before kotelyansky/theorem9")

    parser.add_argument('--all-pairs', action='store_true',
                        help="tau: compare every nested pair of subsets, "
                        "not only the covering ones")

    parser.add_argument('--seed', type=int, default=0,
                        help="seed for the random diagonal used by "
                        "proposition1")

    _common_arguments(parser)
    return parser


def search_argsparser(parser=None):
    """ Command line arguments for the search command

        Returns:
            argparse.ArgumentParser
    """

    if parser is None:
        parser = argparse.ArgumentParser(prog='interlace-kit search')

    parser.add_argument('--target', type=str, choices=SEARCH_TARGETS,
                        default='interior-counterexample',
                        help="what to search for: an interior index "
                        "interlacing failure, or instances of a "
                        "generator family")

    parser.add_argument('--family', type=str, choices=('stp', 'sk'),
                        default='stp',
                        help="generator family sampled by "
                        "interior-counterexample")

    parser.add_argument('--seed', type=int, required=True,
                        help="seed of the generator")

    parser.add_argument('--budget', type=int, required=True,
                        help="number of instances to sample")

    parser.add_argument('--n', type=int, default=4,
                        help="matrix size")

    parser.add_argument('--magnitude', type=int, default=10,
                        help="bound on entries / factor parameters")

    parser.add_argument('--max-denominator', type=int, default=10,
                        help="largest denominator of sampled rationals")

    parser.add_argument('--workers', type=int, default=1,
                        help="number of worker processes")

    parser.add_argument('--output-dir', type=str, default=None,
                        help="directory for the config JSON, the CSV "
                        "search log and the hits JSON")

    _common_arguments(parser)
    return parser


def interlacekit_argsparser():
    """ Top level parser with one sub-command per tool

        Returns:
            argparse.ArgumentParser
    """

    parser = argparse.ArgumentParser(
        prog='interlace-kit',
        description="Exact classification of sign-regular matrix classes "
        "and verification of eigenvalue interlacing properties")

    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))

    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    classify_argsparser(subparsers.add_parser(
        'classify', help="verdicts for the whole class hierarchy"))

    compound_argsparser(subparsers.add_parser(
        'compound', help="the k-th compound matrix"))

    verify_argsparser(subparsers.add_parser(
        'verify', help="verify a monotonicity or interlacing property"))

    search_argsparser(subparsers.add_parser(
        'search', help="seeded search over generated matrices"))

    return parser
