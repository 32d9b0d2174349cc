"""
    Exact characteristic polynomials, real spectra, the l(.)
    functional and Perron root checks
"""

import logging

import numpy as np
import scipy.linalg

from collections import OrderedDict
from fractions import Fraction

from interlacekit.common.classify import is_positive
from interlacekit.common.errors import (ClassPreconditionError,
                                        InterlaceKitError)
from interlacekit.common.exact import (UniPoly, compare_root_to,
                                       compare_roots, format_exact,
                                       isolate_real_roots)
from interlacekit.common.matrix import (DenseMatrix, index_sets, inverse,
                                        laplace_det)
from interlacekit.common.settings import PERRON_TOLERANCE


class _Infinity:
    """ l(A) of a matrix without real eigenvalues """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INFINITY'

    def to_dict(self):
        return 'inf'


INFINITY = _Infinity()


def is_infinite(value):
    return value is INFINITY


def charpoly(A):
    """
        det(A - lambda I) by the Faddeev-LeVerrier recursion

        Args:
            A (DenseMatrix): square matrix with rational entries

        Returns:
            UniPoly: degree n, leading coefficient (-1)^n, constant
                term det A
    """

    n = A.size
    if A.is_polynomial:
        raise InterlaceKitError("charpoly needs rational entries")

    a = A.tolist()
    # c[i] is the coefficient of lambda^i in det(lambda I - A)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum((a[i][l] * m[l][j] for l in range(n)), Fraction(0))
               for j in range(n)] for i in range(n)]
        m = [[am[i][j] + (c[n - k + 1] if i == j else 0)
              for j in range(n)] for i in range(n)]
        trace = sum((a[i][l] * m[l][i] for i in range(n) for l in range(n)),
                    Fraction(0))
        c[n - k] = -trace / k

    return UniPoly(c) * (-1) ** n


def charpoly_cofactor(A):
    """ det(A - lambda I) by cofactor expansion of the lambda-matrix """
    return laplace_det(A.lambda_matrix())


def float_eigenvalues(A):
    """ floating point eigenvalues (scipy) for cross checks """
    return scipy.linalg.eigvals(A.to_numpy())


class Spectrum:
    """
        Real part of the spectrum of a matrix

        Attributes:
            charpoly (UniPoly): det(A - lambda I)
            real_roots (list): distinct real eigenvalues as
                IsolatedRoot, sorted decreasing
            has_nonreal (bool): some eigenvalue is not real
            l_value: smallest real eigenvalue or INFINITY
    """

    def __init__(self, charpoly, real_roots, has_nonreal):
        self.charpoly = charpoly
        self.real_roots = real_roots
        self.has_nonreal = has_nonreal
        self.l_value = real_roots[-1] if real_roots else INFINITY

    @property
    def real_count(self):
        """ real eigenvalues counted with multiplicity """
        return sum(r.multiplicity for r in self.real_roots)

    @property
    def all_real_simple(self):
        return not self.has_nonreal and \
            all(r.multiplicity == 1 for r in self.real_roots)

    def to_dict(self):
        return OrderedDict([
            ('charpoly', [format_exact(c)
                          for c in self.charpoly.coefficients]),
            ('real_roots', [r.to_dict() for r in self.real_roots]),
            ('has_nonreal', self.has_nonreal),
            ('l', self.l_value.to_dict())])


def spectrum(A):
    p = charpoly(A)
    roots = isolate_real_roots(p)
    real_count = sum(r.multiplicity for r in roots)
    return Spectrum(p, roots[::-1], real_count < A.size)


def l_of(A):
    """
        l(A): the smallest real eigenvalue, INFINITY when there is none
    """

    return spectrum(A).l_value


def positive_roots_simple(A):
    """
        Whether all n eigenvalues are real, positive and simple

        Returns:
            tuple: (bool, Spectrum)
    """

    spec = spectrum(A)
    ok = spec.all_real_simple and \
        all(r.sign() > 0 for r in spec.real_roots)
    return ok, spec


def _kernel_vector(A, rho):
    """
        x with x_1 = 1 solving rows 2..n of (A - rho I) x = 0
    """

    n = A.rows
    if n == 1:
        return [Fraction(1)]
    shifted = [[A[i, j] - (rho if i == j else 0) for j in range(n)]
               for i in range(n)]
    block = DenseMatrix([row[1:] for row in shifted[1:]])
    rhs = DenseMatrix([[-row[0]] for row in shifted[1:]])
    tail = inverse(block) @ rhs
    return [Fraction(1)] + [tail[i, 0] for i in range(n - 1)]


def _residual(A, x, rho):
    n = A.rows
    return max(abs(sum((A[i, j] * x[j] for j in range(n)), Fraction(0)) -
                   rho * x[i]) for i in range(n))


class PerronResult:
    """
        Perron root with rational eigenvector approximations

        Attributes:
            root (IsolatedRoot): rho(A)
            approximation (Fraction): the rational rho used for the
                vectors
            vector (list): right eigenvector approximation, x_1 = 1
            left_vector (list): left eigenvector approximation (from
                A^T)
            residual (Fraction): max norm of A x - rho x
    """

    def __init__(self, root, approximation, vector, left_vector, residual):
        self.root = root
        self.approximation = approximation
        self.vector = vector
        self.left_vector = left_vector
        self.residual = residual

    @property
    def vector_positive(self):
        return all(v > 0 for v in self.vector)

    @property
    def functional_positive(self):
        return all(v > 0 for v in self.left_vector)

    def to_dict(self):
        return OrderedDict([
            ('rho', self.root.to_dict()),
            ('vector', [float(v) for v in self.vector]),
            ('left_vector', [float(v) for v in self.left_vector]),
            ('residual', float(self.residual)),
            ('vector_positive', self.vector_positive),
            ('functional_positive', self.functional_positive)])


def spectral_radius_positive(A, tolerance=PERRON_TOLERANCE):
    """
        Perron root of an entrywise positive matrix with positive
        rational eigenvector approximations

        Args:
            A (DenseMatrix): positive square matrix
            tolerance (Fraction): bound on the eigenvector residual

        Returns:
            PerronResult
    """

    A.require_square()
    holds, witness = is_positive(A)
    if not holds:
        raise ClassPreconditionError(
            "Perron root needs a positive matrix (entry {} is {}); use "
            "spectrum() for the real roots of a general matrix".format(
                witness.rows + witness.cols, format_exact(witness.value)))

    root = spectrum(A).real_roots[0]
    transpose = A.transpose()
    width = tolerance
    while True:
        root = root.refine_to(width)
        rho = root.midpoint
        x = _kernel_vector(A, rho)
        residual = _residual(A, x, rho)
        if residual <= tolerance:
            break
        width = width / 2**20

    y = _kernel_vector(transpose, rho)
    logging.debug("Perron root {} with residual {:.3e}".format(
        float(root), float(residual)))
    return PerronResult(root, rho, x, y, residual)


def perron_lower_bound_check(A, x, alpha):
    """
        Strict lower bound rho(A) > alpha from a nonnegative x with
        0 != A x - alpha x >= 0

        Returns:
            bool: whether the premise holds; if it does the conclusion
                is checked against the isolated Perron root
    """

    n = A.size
    x = [Fraction(v) for v in x]
    alpha = Fraction(alpha)
    if len(x) != n or any(v < 0 for v in x) or all(v == 0 for v in x):
        return False

    diff = [sum((A[i, j] * x[j] for j in range(n)), Fraction(0)) -
            alpha * x[i] for i in range(n)]
    if any(d < 0 for d in diff) or all(d == 0 for d in diff):
        return False

    rho = spectral_radius_positive(A).root
    if compare_root_to(rho, alpha) <= 0:
        raise InterlaceKitError("rho(A) = {} does not exceed {}".format(
            float(rho), format_exact(alpha)))
    return True


def verify_submatrix_radius_bound(A):
    """
        rho(A(alpha)) <= rho(A) for every proper principal submatrix of
        a positive matrix; returns (holds, first failing alpha)
    """

    n = A.size
    rho = spectral_radius_positive(A).root
    for k in range(1, n):
        for alpha in index_sets(n, k):
            sub = spectrum(A.submatrix(alpha, alpha)).real_roots[0]
            cmp, sub, rho = compare_roots(sub, rho)
            if cmp > 0:
                return False, alpha
    return True, None


def float_spectral_radius(A):
    return float(np.max(np.abs(float_eigenvalues(A))))
