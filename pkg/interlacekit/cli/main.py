"""
    The interlace-kit command: one sub-command per tool

        interlace-kit classify <file>
        interlace-kit compound -k <int> <file>
        interlace-kit verify --property <name> [--r <int>]
            [--alpha <rat> --beta <rat>] <file>
        interlace-kit search --target <name> --seed <int> --budget <int>
            --n <int>

    Reports go to stdout, diagnostics to stderr. Exit codes: 0 success
    or property holds, 1 property violated, 2 usage or input error.
"""

import sys

from interlacekit.cli.argparsers import interlacekit_argsparser
from interlacekit.cli.classify import run_classify
from interlacekit.cli.compound import run_compound
from interlacekit.cli.exceptionhandler import install_hook, run_command
from interlacekit.cli.search import run_search
from interlacekit.cli.verify import run_verify

COMMANDS = {
    'classify': run_classify,
    'compound': run_compound,
    'verify': run_verify,
    'search': run_search,
}


def main(argv=None):
    """
        Args:
            argv (list): arguments without the program name, sys.argv
                when None

        Returns:
            int: the exit code
    """

    parser = interlacekit_argsparser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors and 0 for --help
        return e.code if isinstance(e.code, int) else 2

    return run_command(COMMANDS[args.command], args)


def console_main():
    install_hook()
    sys.exit(main())


if __name__ == '__main__':
    console_main()
