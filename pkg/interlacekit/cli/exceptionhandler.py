"""
A custom class for exceptions without printing the traceback
"""

import sys


def eprint(*args, **kwargs):
    """ 
        print function to print to standard error
    """
    print(*args, file=sys.stderr, **kwargs)


class NoTracebackException(Exception):
    """
        An exception that when raised results in the error message
        being printed without the traceback
    """
    pass


def notraceback_hook(kind, message, traceback):
    """
        Exception hook that reroutes all exceptions through this method
    
        Args:
            kind (type): the type of the exception
            message (obj): the exception instance
            traceback (traceback): traceback object
    """
   
    if issubclass(kind, NoTracebackException):
        # only print message
        eprint('ERROR: {}: {}'.format(kind.__name__, message))
    else:
        # print error type, message & traceback
        sys.__excepthook__(kind, message, traceback)  


def install_hook():
    """
        Route uncaught exceptions through notraceback_hook; called by
        the command line entry points only, so that importing the
        library leaves the interpreter's hook alone
    """

    sys.excepthook = notraceback_hook


def run_command(command, args):
    """
        Run a sub-command and map user facing errors to exit code 2

        Args:
            command (function): takes the parsed args, returns an exit
                code
            args (argparse.Namespace): parsed command line arguments

        Returns:
            int: the exit code
    """

    try:
        return command(args)
    except NoTracebackException as e:
        eprint('ERROR: {}: {}'.format(type(e).__name__, e))
        return 2
