"""
    Seeded random matrix generators for the property tests and the
    search harness. Every generator is a deterministic function of
    (seed, config): randomness comes from numpy's default_rng seeded
    with config.seed unless a Generator is passed in.
"""

import logging

import numpy as np

from fractions import Fraction

from interlacekit.common.classify import is_sk, is_stp
from interlacekit.common.errors import (DimensionError,
                                        GeneratorBudgetError,
                                        SingularMatrixError)
from interlacekit.common.matrix import DenseMatrix, permutation_matrix

TARGETS = ('positive', 'stp', 'sk', 'sjsk', 'arbitrary')


class GenConfig:
    """
        Parameters of a generator run

        Args:
            seed (int): seed of the numpy Generator
            n (int): matrix size
            magnitude (int): bound on the absolute value of entries /
                factor parameters
            max_denominator (int): denominators are drawn from
                1..max_denominator
            target (str): one of TARGETS
            budget (int): profile attempts for gen_sk_not_stp
    """

    def __init__(self, seed=0, n=4, magnitude=10, max_denominator=10,
                 target='stp', budget=20):
        if n < 1:
            raise DimensionError("matrix size must be positive")
        if target not in TARGETS:
            raise ValueError("unknown target '{}', expected one of "
                             "{}".format(target, ', '.join(TARGETS)))
        self.seed = int(seed)
        self.n = int(n)
        self.magnitude = int(magnitude)
        self.max_denominator = int(max_denominator)
        self.target = target
        self.budget = int(budget)

    def rng(self):
        return np.random.default_rng(self.seed)

    def to_dict(self):
        return {'seed': self.seed, 'n': self.n, 'magnitude': self.magnitude,
                'max_denominator': self.max_denominator,
                'target': self.target, 'budget': self.budget}

    def __repr__(self):
        return "GenConfig({})".format(self.to_dict())


def _positive_rational(rng, config):
    den = int(rng.integers(1, config.max_denominator + 1))
    num = int(rng.integers(1, config.magnitude * den + 1))
    return Fraction(num, den)


def _signed_rational(rng, config):
    den = int(rng.integers(1, config.max_denominator + 1))
    bound = config.magnitude * den
    return Fraction(int(rng.integers(-bound, bound + 1)), den)


def random_rational_matrix(config, rng=None):
    """ entries uniform over bounded rationals of either sign """
    rng = rng if rng is not None else config.rng()
    n = config.n
    return DenseMatrix([[_signed_rational(rng, config) for _ in range(n)]
                        for _ in range(n)])


def gen_positive(config, rng=None):
    rng = rng if rng is not None else config.rng()
    n = config.n
    return DenseMatrix([[_positive_rational(rng, config) for _ in range(n)]
                        for _ in range(n)])


def random_permutation(rng, n):
    """ 1-based permutation of 1..n """
    return [int(v) + 1 for v in rng.permutation(n)]


def random_sign_diagonal(rng, n):
    return [1 if v else -1 for v in rng.integers(0, 2, n)]


def _reduced_word(n):
    # (s_{n-1})(s_{n-2} s_{n-1}) ... (s_1 ... s_{n-1})
    return [j for i in range(n - 1, 0, -1) for j in range(i, n)]


def _elementary(n, j, t, lower):
    entries = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    if lower:
        entries[j][j - 1] = t
    else:
        entries[j - 1][j] = t
    return DenseMatrix(entries)


def stp_from_parameters(n, lower, diagonal, upper):
    """
        L D U from positive parameters: L and U are products of
        elementary bidiagonal factors along a reduced word of the
        longest permutation, D a positive diagonal

        Args:
            n (int): size
            lower (list): n(n-1)/2 positive parameters of L
            diagonal (list): n positive diagonal entries
            upper (list): n(n-1)/2 positive parameters of U

        Returns:
            DenseMatrix: strictly totally positive
    """

    word = _reduced_word(n)
    if len(lower) != len(word) or len(upper) != len(word) or \
            len(diagonal) != n:
        raise DimensionError("need {} bidiagonal parameters and {} "
                             "diagonal entries".format(len(word), n))
    if any(Fraction(v) <= 0 for v in list(lower) + list(diagonal) +
           list(upper)):
        raise DimensionError("all factor parameters must be positive")

    result = DenseMatrix.identity(n)
    for j, t in zip(word, lower):
        result = result @ _elementary(n, j, Fraction(t), True)
    result = result @ DenseMatrix.diagonal([Fraction(v) for v in diagonal])
    for j, t in zip(reversed(word), upper):
        result = result @ _elementary(n, j, Fraction(t), False)
    return result


def gen_stp(config, rng=None, check=True):
    """
        Random STP matrix from positive bidiagonal factor parameters

        Args:
            config (GenConfig): size and bounds
            rng (numpy.random.Generator): overrides the config seed
            check (bool): re-verify STP with the all-minors scan

        Returns:
            DenseMatrix
    """

    rng = rng if rng is not None else config.rng()
    n = config.n
    count = n * (n - 1) // 2
    lower = [_positive_rational(rng, config) for _ in range(count)]
    diagonal = [_positive_rational(rng, config) for _ in range(n)]
    upper = [_positive_rational(rng, config) for _ in range(count)]
    A = stp_from_parameters(n, lower, diagonal, upper)

    if check:
        holds, witness = is_stp(A)
        if not holds:
            raise GeneratorBudgetError("factor product is not STP: "
                                       "{}".format(witness))
    return A


def _toeplitz(profile, corner):
    n = len(profile)
    t = list(profile)
    t[n - 1] = corner
    return DenseMatrix([[t[abs(i - j)] for j in range(n)] for i in range(n)])


def _gaussian_profile(rng, n):
    # q^(k^2): sampled Gaussian kernel, an STP Toeplitz profile
    q = Fraction(int(rng.integers(3, 9)), 10)
    return [q ** (k * k) for k in range(n)]


def _linear_profile(n):
    # n-1, n-2, ..., 1 and a corner below 1, as in the SK example with
    # a negative minor
    return [Fraction(n - 1 - k) for k in range(n - 1)] + [Fraction(0)]


def gen_sk_not_stp(config, rng=None):
    """
        Symmetric Toeplitz matrix that is SK but not STP

        The corner entries a_1n = a_n1 are raised in ten steps from the
        profile's own corner towards t_(n-2) until STP breaks while SK
        survives. Random Gaussian-kernel profiles are tried first, then
        the linear profile (n-1, ..., 1, c). The accepted matrix is
        conjugated by a random positive diagonal, which keeps both
        verdicts.

        For n < 4 this falls back to gen_stp.

        Returns:
            DenseMatrix

        Raises:
            GeneratorBudgetError: no profile crossed the STP boundary
                while staying SK
    """

    rng = rng if rng is not None else config.rng()
    n = config.n
    if n < 4:
        return gen_stp(config, rng)

    profiles = [_gaussian_profile(rng, n) for _ in range(config.budget)]
    profiles.append(_linear_profile(n))

    for profile in profiles:
        low, high = profile[n - 1], profile[n - 2]
        for step in range(1, 11):
            corner = low + (high - low) * Fraction(step, 10)
            A = _toeplitz(profile, corner)
            if is_stp(A)[0]:
                continue
            if is_sk(A)[0]:
                scale = [_positive_rational(rng, config) for _ in range(n)]
                A = conjugate(A, list(range(1, n + 1)), scale)
                logging.debug("SK-not-STP matrix with corner {}".format(
                    corner))
                return A

    raise GeneratorBudgetError("no SK matrix with a negative minor found in "
                               "{} profiles".format(len(profiles)))


def conjugate(A, sigma, diagonal):
    """
        P D A D^-1 P^-1 for the permutation matrix P of sigma (1-based)
        and a nonsingular diagonal D

        Args:
            A (DenseMatrix): square matrix
            sigma (list): 1-based permutation
            diagonal (list): nonzero diagonal entries of D

        Returns:
            DenseMatrix
    """

    n = A.size
    diagonal = [Fraction(v) for v in diagonal]
    if len(diagonal) != n or len(sigma) != n:
        raise DimensionError("conjugation data does not match size {}".format(
            n))
    if any(v == 0 for v in diagonal):
        raise SingularMatrixError("diagonal similarity must be nonsingular")

    p = permutation_matrix(sigma)
    d = DenseMatrix.diagonal(diagonal)
    d_inv = DenseMatrix.diagonal([1 / v for v in diagonal])
    return p @ d @ A @ d_inv @ p.transpose()


def gen_sk(config, rng=None):
    """ SK matrices: STP or, with equal odds for n >= 4, SK-not-STP """
    rng = rng if rng is not None else config.rng()
    if config.n >= 4 and rng.integers(0, 2):
        return gen_sk_not_stp(config, rng)
    return gen_stp(config, rng)


def gen_sjsk_via_conjugation(config, rng=None):
    """ conjugate(SK, random P, random signed diagonal) """
    rng = rng if rng is not None else config.rng()
    A = gen_sk(config, rng)
    n = config.n
    sigma = random_permutation(rng, n)
    signs = random_sign_diagonal(rng, n)
    diagonal = [s * _positive_rational(rng, config) for s in signs]
    return conjugate(A, sigma, diagonal)


def generate(config, rng=None):
    """ dispatch on config.target """

    rng = rng if rng is not None else config.rng()
    if config.target == 'positive':
        return gen_positive(config, rng)
    if config.target == 'stp':
        return gen_stp(config, rng)
    if config.target == 'sk':
        return gen_sk(config, rng)
    if config.target == 'sjsk':
        return gen_sjsk_via_conjugation(config, rng)
    return random_rational_matrix(config, rng)
