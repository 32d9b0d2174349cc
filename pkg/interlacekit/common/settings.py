"""
    Package wide defaults and environment overrides
"""

import os

from fractions import Fraction

from interlacekit.common.errors import LatticeBoundError


# largest n for which the principal-submatrix lattice (2^n - 1 subsets)
# is enumerated
DEFAULT_LATTICE_BOUND = 10

LATTICE_BOUND_ENV = 'INTERLACE_KIT_LATTICE_BOUND'

# residual bound for the rational Perron vector approximation
PERRON_TOLERANCE = Fraction(1, 10**30)

# guard on bisection steps when separating algebraic numbers
MAX_REFINEMENT_STEPS = 2000

# cofactor expansion is used for polynomial entries up to this size
MAX_COFACTOR_SIZE = 8

SCHEMA_VERSION = '1.0'


def get_lattice_bound():
    """
        The subset lattice size cap, honouring the
        INTERLACE_KIT_LATTICE_BOUND environment variable

        Returns:
            int: maximum matrix size for lattice enumeration
    """

    value = os.environ.get(LATTICE_BOUND_ENV)
    if value is None or value.strip() == '':
        return DEFAULT_LATTICE_BOUND

    try:
        bound = int(value)
    except ValueError:
        raise LatticeBoundError(
            "{} must be an integer, got '{}'".format(
                LATTICE_BOUND_ENV, value))

    if bound < 1:
        raise LatticeBoundError(
            "{} must be positive, got {}".format(LATTICE_BOUND_ENV, bound))

    return bound
