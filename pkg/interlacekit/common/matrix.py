"""
    This module contains the dense exact matrix type and the minor
    machinery built on top of it: compound matrices, Schur
    complements, the Sylvester bordered matrix, exact inverses and the
    complementation map J_k relating the k-th and (n-k)-th compounds

    Index convention: every IndexSet handed to a public function of
    this module is 1-based and strictly increasing (rows and columns of
    minors are always taken in natural increasing order). Direct entry
    access `A[i, j]` is 0-based. `IndexSet.zero_based()` is the single
    place where the two meet.

    Determinants of rational matrices use fraction-free (Bareiss)
    elimination; matrices with polynomial entries (A - lambda*I) use
    cofactor expansion with memoised sub-minors.
"""

import itertools
import numpy as np

from collections import OrderedDict
from fractions import Fraction
from math import comb

from interlacekit.common.errors import (DimensionError, InterlaceKitError,
                                        SingularMatrixError)
from interlacekit.common.exact import UniPoly, format_exact, to_exact
from interlacekit.common.settings import MAX_COFACTOR_SIZE


class IndexSet(tuple):
    """
        Strictly increasing tuple of 1-based indices
    """

    def __new__(cls, indices=()):
        indices = tuple(int(i) for i in indices)
        for a, b in zip(indices, indices[1:]):
            if not a < b:
                raise DimensionError(
                    "index set {} is not strictly increasing".format(
                        indices))
        if indices and indices[0] < 1:
            raise DimensionError(
                "index set {} contains indices below 1".format(indices))
        return super().__new__(cls, indices)

    def zero_based(self):
        return tuple(i - 1 for i in self)

    def complement(self, n):
        present = set(self)
        return IndexSet(i for i in range(1, n + 1) if i not in present)

    def union(self, other):
        return IndexSet(sorted(set(self) | set(other)))

    def check_bound(self, n):
        if self and self[-1] > n:
            raise DimensionError(
                "index set {} out of range for size {}".format(
                    tuple(self), n))
        return self


def index_sets(n, k):
    """
        All k-subsets of [n] in lexicographic order
    """

    return [IndexSet(c) for c in itertools.combinations(range(1, n + 1), k)]


def rank_of(index_set, n):
    """
        0-based lexicographic rank of a k-subset of [n]
    """

    k = len(index_set)
    rank = 0
    previous = 0
    for position, value in enumerate(index_set):
        for skipped in range(previous + 1, value):
            rank += comb(n - skipped, k - position - 1)
        previous = value
    return rank


def set_of_rank(n, k, rank):
    """
        Inverse of rank_of
    """

    if not 0 <= rank < comb(n, k):
        raise DimensionError("rank {} out of range for C({}, {})".format(
            rank, n, k))

    result = []
    value = 1
    for position in range(k):
        while True:
            block = comb(n - value, k - position - 1)
            if rank < block:
                break
            rank -= block
            value += 1
        result.append(value)
        value += 1
    return IndexSet(result)


def _coerce_entry(value):
    if isinstance(value, UniPoly):
        return value
    return to_exact(value)


def _is_zero(value):
    return value == 0


class DenseMatrix:
    """
        Immutable row-major dense matrix with exact entries

        Entries are Fractions, or UniPoly for lambda-matrices.
    """

    __slots__ = ('rows', 'cols', '_entries', '_minors')

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise DimensionError("a matrix needs at least one entry")

        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise DimensionError("ragged matrix rows: {} vs {}".format(
                    len(row), width))

        self.rows = len(entries)
        self.cols = width
        self._entries = tuple(tuple(_coerce_entry(v) for v in row)
                              for row in entries)
        self._minors = {}

    @classmethod
    def from_flat(cls, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionError("{} entries given for a {}x{} matrix".format(
                len(entries), rows, cols))
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_polynomial(self):
        return any(isinstance(v, UniPoly) for row in self._entries
                   for v in row)

    @property
    def size(self):
        """ n for a square matrix """
        self.require_square()
        return self.rows

    def require_square(self):
        if not self.is_square:
            raise DimensionError("expected a square matrix, got {}x{}".format(
                self.rows, self.cols))
        return self

    def __getitem__(self, position):
        i, j = position
        return self._entries[i][j]

    def row(self, i):
        return self._entries[i]

    def entries(self):
        """ flat row-major list """
        return [v for row in self._entries for v in row]

    def tolist(self):
        return [list(row) for row in self._entries]

    def to_numpy(self):
        """ floating point copy (rational entries only) """
        return np.array([[float(v) for v in row] for row in self._entries],
                        dtype=float)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        body = "; ".join(" ".join(
            str(v) if isinstance(v, UniPoly) else format_exact(v)
            for v in row) for row in self._entries)
        return "DenseMatrix([{}])".format(body)

    def map(self, fn):
        return DenseMatrix([[fn(v) for v in row] for row in self._entries])

    def transpose(self):
        return DenseMatrix([list(col) for col in zip(*self._entries)])

    T = property(transpose)

    def __add__(self, other):
        self._require_same_shape(other)
        return DenseMatrix([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self._entries, other._entries)])

    def __sub__(self, other):
        self._require_same_shape(other)
        return DenseMatrix([[a - b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self._entries, other._entries)])

    def __neg__(self):
        return self.map(lambda v: -v)

    def scale(self, scalar):
        if not isinstance(scalar, UniPoly):
            scalar = to_exact(scalar)
        return self.map(lambda v: v * scalar)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError("cannot multiply {}x{} by {}x{}".format(
                self.rows, self.cols, other.rows, other.cols))
        columns = list(zip(*other._entries))
        result = []
        for row in self._entries:
            result.append([sum((a * b for a, b in zip(row, col)),
                               Fraction(0)) for col in columns])
        return DenseMatrix(result)

    def _require_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch {} vs {}".format(
                self.shape, other.shape))

    def submatrix(self, rows, cols):
        """
            Rows and columns given by 1-based IndexSets, order kept
        """

        rows = IndexSet(rows).check_bound(self.rows).zero_based()
        cols = IndexSet(cols).check_bound(self.cols).zero_based()
        return DenseMatrix([[self._entries[i][j] for j in cols]
                            for i in rows])

    def lambda_matrix(self):
        """ A - lambda*I with UniPoly entries """

        self.require_square()
        lam = UniPoly.variable()
        return DenseMatrix([[v - lam if i == j else UniPoly.constant(v)
                             for j, v in enumerate(row)]
                            for i, row in enumerate(self._entries)])


def bareiss_det(entries):
    """
        Fraction-free Gaussian elimination with row pivoting

        Args:
            entries (list): square list of lists of Fractions

        Returns:
            Fraction: the determinant
    """

    m = [list(row) for row in entries]
    n = len(m)
    if n == 0:
        return Fraction(1)

    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous
        previous = m[k][k]

    return sign * m[n - 1][n - 1]


def laplace_det(A):
    """
        Cofactor expansion along successive rows, memoising the
        sub-minors by the set of columns still available

        Works for any entries supporting +, -, * (Fractions, UniPoly).

        Args:
            A (DenseMatrix): square matrix

        Returns:
            Fraction or UniPoly
    """

    A.require_square()
    n = A.rows
    polynomial = A.is_polynomial
    one = UniPoly.constant(1) if polynomial else Fraction(1)
    zero = UniPoly.constant(0) if polynomial else Fraction(0)
    memo = {}

    def expand(row, available):
        if row == n:
            return one
        key = available
        if key in memo:
            return memo[key]
        total = zero
        position = 0
        for j in range(n):
            if not available & (1 << j):
                continue
            entry = A[row, j]
            if not _is_zero(entry):
                term = entry * expand(row + 1, available & ~(1 << j))
                total = total - term if position % 2 else total + term
            position += 1
        memo[key] = total
        return total

    return expand(0, (1 << n) - 1)


def determinant(A):
    """
        Exact determinant of a square matrix
    """

    A.require_square()
    if A.is_polynomial:
        if A.rows > MAX_COFACTOR_SIZE:
            raise DimensionError(
                "polynomial determinants are limited to n <= {}".format(
                    MAX_COFACTOR_SIZE))
        return laplace_det(A)
    return bareiss_det(A.tolist())


def minor(A, rows, cols):
    """
        The minor A(rows; cols)

        Args:
            A (DenseMatrix): matrix (rational or polynomial entries)
            rows (IndexSet): 1-based row indices
            cols (IndexSet): 1-based column indices of the same size

        Returns:
            Fraction or UniPoly: exact determinant of the submatrix;
                the empty minor is 1 by convention
    """

    rows, cols = IndexSet(rows), IndexSet(cols)
    if len(rows) != len(cols):
        raise DimensionError("minor needs equal sized index sets, got "
                             "{} and {}".format(tuple(rows), tuple(cols)))
    rows.check_bound(A.rows)
    cols.check_bound(A.cols)

    key = (rows, cols)
    if key in A._minors:
        return A._minors[key]

    if not rows:
        value = UniPoly.constant(1) if A.is_polynomial else Fraction(1)
    else:
        value = determinant(A.submatrix(rows, cols))

    A._minors[key] = value
    return value


def det(A):
    n = A.size
    full = IndexSet(range(1, n + 1))
    return minor(A, full, full)


def compound(A, k):
    """
        The k-th compound matrix: all k x k minors, rows and columns
        indexed by k-subsets in lexicographic order

        Args:
            A (DenseMatrix): square n x n matrix
            k (int): 1 <= k <= n

        Returns:
            DenseMatrix: C(n, k) x C(n, k)
    """

    n = A.size
    if not 1 <= k <= n:
        raise DimensionError("compound order {} out of range 1..{}".format(
            k, n))

    subsets = index_sets(n, k)
    return DenseMatrix([[minor(A, rows, cols) for cols in subsets]
                        for rows in subsets])


def principal_submatrix(A, alpha):
    A.require_square()
    return A.submatrix(alpha, alpha)


def schur_signature(alpha, n):
    """
        Signs e_l = (-1)^#{a in alpha : a > l} for l in the complement
        of alpha, in increasing order

        diag(e) relates the natural order complement to the block one:
        A|A(alpha) = E (A22 - A21 A11^{-1} A12) E.
    """

    alpha = IndexSet(alpha).check_bound(n)
    return tuple((-1) ** sum(1 for a in alpha if a > l)
                 for l in alpha.complement(n))


def schur_complement(A, alpha):
    """
        Schur complement A|A(alpha) of a principal submatrix

        Entry (l, r) is A(alpha+l; alpha+r) / A(alpha; alpha) with both
        index sets in natural increasing order, so every entry is an
        almost-principal (or principal) minor ratio of A. After
        conjugation by diag(schur_signature(alpha, n)) this is the block
        formula A22 - A21 A11^{-1} A12.

        Args:
            A (DenseMatrix): square matrix
            alpha (IndexSet): nonempty proper subset of [n]

        Returns:
            DenseMatrix: indexed by the complement of alpha in
                increasing order
    """

    n = A.size
    alpha = IndexSet(alpha).check_bound(n)
    if not alpha or len(alpha) == n:
        raise DimensionError("Schur complement needs a nonempty proper "
                             "subset, got {}".format(tuple(alpha)))

    pivot = minor(A, alpha, alpha)
    if pivot == 0:
        raise SingularMatrixError(
            "principal submatrix {} is singular".format(tuple(alpha)))

    bordered = [alpha.union([l]) for l in alpha.complement(n)]
    return DenseMatrix([[minor(A, rows, cols) / pivot for cols in bordered]
                        for rows in bordered])


def sylvester_b_matrix(A, rows, cols):
    """
        The matrix B = {b_lr}, b_lr = A(rows+l; cols+r) with index
        sets in natural increasing order, l outside rows and r outside
        cols, both in increasing order

        For empty index sets B = A.
    """

    rows, cols = IndexSet(rows), IndexSet(cols)
    if len(rows) != len(cols):
        raise DimensionError("Sylvester matrix needs equal sized index "
                             "sets")
    rows.check_bound(A.rows)
    cols.check_bound(A.cols)
    if len(rows) >= min(A.rows, A.cols):
        raise DimensionError("index sets must be smaller than the matrix")

    if not rows:
        return A

    free_rows = rows.complement(A.rows)
    free_cols = cols.complement(A.cols)
    return DenseMatrix([[minor(A, rows.union([l]), cols.union([r]))
                         for r in free_cols] for l in free_rows])


def inverse(A):
    """
        Exact inverse by Gauss-Jordan elimination over the rationals
    """

    n = A.size
    if A.is_polynomial:
        raise InterlaceKitError("inverse of a polynomial matrix")

    m = [list(row) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A.tolist())]
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        m[k], m[pivot] = m[pivot], m[k]
        p = m[k][k]
        m[k] = [v / p for v in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                factor = m[i][k]
                m[i] = [a - factor * b for a, b in zip(m[i], m[k])]

    return DenseMatrix([row[n:] for row in m])


def permutation_matrix(sigma):
    """
        P with P e_j = e_sigma(j), for a 1-based permutation sigma,
        so that (P A P^T)[i, j] = A[sigma^-1(i), sigma^-1(j)]
    """

    n = len(sigma)
    return DenseMatrix([[1 if sigma[j] == i + 1 else 0 for j in range(n)]
                        for i in range(n)])


def permute(A, sigma):
    """
        Simultaneous row/column permutation: result[i, j] =
        A[sigma(i), sigma(j)] for a 1-based permutation sigma

        Equals P A P^T with P the matrix whose i-th row is
        e_sigma(i).
    """

    n = A.size
    if sorted(sigma) != list(range(1, n + 1)):
        raise DimensionError("{} is not a permutation of 1..{}".format(
            list(sigma), n))
    return DenseMatrix([[A[sigma[i] - 1, sigma[j] - 1] for j in range(n)]
                        for i in range(n)])


def reverse_permutation_matrix(m):
    return DenseMatrix([[1 if i + j == m - 1 else 0 for j in range(m)]
                        for i in range(m)])


def sign_diagonal(n):
    """ D_n = diag(1, -1, 1, ...) """
    return DenseMatrix.diagonal([(-1) ** i for i in range(n)])


def jk_map_signs(n, k):
    """
        The complementation map J_k on lexicographically ranked
        k-subsets of [n]

        Args:
            n (int): dimension
            k (int): 1 <= k < n

        Returns:
            tuple: (permutation, signs) where permutation[alpha] is the
                0-based lexicographic rank of the complement of the
                alpha-th k-subset among (n-k)-subsets and signs[alpha]
                is (-1)^(p+1) with p the sum of the subset's indices
    """

    if not 1 <= k < n:
        raise DimensionError("J_k needs 1 <= k < n, got k={} n={}".format(
            k, n))

    permutation = []
    signs = []
    for subset in index_sets(n, k):
        permutation.append(rank_of(subset.complement(n), n))
        signs.append((-1) ** (sum(subset) + 1))
    return tuple(permutation), tuple(signs)


def adjugate_compound(A, k):
    """
        D P_k (A^(n-k))^T P_k D, the k-th adjugate compound

        With D = diag((-1)^(p+1)) over ranked k-subsets and P_k the
        reverse permutation of [C(n, k)], this satisfies
        A^(k) . adjugate_compound(A, k) = det(A) I (Laplace expansion).
        For k = n - 1 ... 1 it is the matrix form of J_k; for k = 1 it
        is the classical adjugate.
    """

    n = A.size
    permutation, signs = jk_map_signs(n, k)
    other = compound(A, n - k)
    m = len(permutation)
    # (P M^T P)[a, b] = M[rank(b^c), rank(a^c)]
    return DenseMatrix([[signs[a] * signs[b] *
                         other[permutation[b], permutation[a]]
                         for b in range(m)] for a in range(m)])


def verify_inverse_compound(A, k):
    """
        (A^(k))^-1 = (1/det A) D P_k (A^(n-k))^T P_k D
    """

    n = A.size
    d = det(A)
    if d == 0:
        raise SingularMatrixError("identity needs a nonsingular matrix")
    lhs = compound(A, k) @ adjugate_compound(A, k)
    return lhs == DenseMatrix.identity(comb(n, k)).scale(d)


def verify_inverse_adjugate(A):
    """
        A^-1 = (1/det A) D_n P_1 (A^(n-1))^T P_1 D_n
    """

    d = det(A)
    if d == 0:
        raise SingularMatrixError("identity needs a nonsingular matrix")
    if A.size == 1:
        return inverse(A) == DenseMatrix([[1 / d]])
    return inverse(A) == adjugate_compound(A, 1).scale(1 / d)


def verify_inverse_second_compound(A):
    """
        (A^-1)^(2) = (1/det A) D P_2 (A^(n-2))^T P_2 D
    """

    n = A.size
    if n < 3:
        raise DimensionError("second compound inverse identity needs "
                             "n >= 3")
    d = det(A)
    if d == 0:
        raise SingularMatrixError("identity needs a nonsingular matrix")
    return compound(inverse(A), 2) == adjugate_compound(A, 2).scale(1 / d)


def verify_schur_formula(A, alpha):
    """ det A = det A(alpha) det(A|A(alpha)) """

    alpha = IndexSet(alpha)
    return det(A) == minor(A, alpha, alpha) * det(schur_complement(A, alpha))


def verify_inverse_schur(A, alpha):
    """
        (A|A(alpha))^-1 equals E A^-1(beta) E, beta the complement of
        alpha and E = diag(schur_signature(alpha, n))
    """

    alpha = IndexSet(alpha)
    beta = alpha.complement(A.size)
    e = DenseMatrix.diagonal(schur_signature(alpha, A.size))
    return inverse(schur_complement(A, alpha)) == \
        e @ principal_submatrix(inverse(A), beta) @ e


def verify_sylvester_identity(A, rows, cols, p):
    """
        Check B(L; R) = A(rows; cols)^(p-1) A(rows+L; cols+R) for every
        pair of p-subsets L, R of the free positions of B

        Returns:
            tuple: (bool, first failing (L, R) or None)
    """

    rows, cols = IndexSet(rows), IndexSet(cols)
    b = sylvester_b_matrix(A, rows, cols)
    pivot = minor(A, rows, cols)
    free_rows = rows.complement(A.rows)
    free_cols = cols.complement(A.cols)
    if p > len(free_rows):
        raise DimensionError("p = {} exceeds the size of B".format(p))

    for positions_l in index_sets(len(free_rows), p):
        for positions_r in index_sets(len(free_cols), p):
            left = minor(b, positions_l, positions_r)
            actual_l = [free_rows[i - 1] for i in positions_l]
            actual_r = [free_cols[j - 1] for j in positions_r]
            right = pivot ** (p - 1) * minor(A, rows.union(actual_l),
                                             cols.union(actual_r))
            if left != right:
                return False, (tuple(actual_l), tuple(actual_r))
    return True, None


def verify_identities(A):
    """
        Run the determinant identities on a square matrix

        The inverse identities need det A != 0 and are recorded as
        None otherwise; the Schur identities run for every proper
        principal alpha with A(alpha) nonsingular; Sylvester's identity
        runs on principal pivots with p = 1 and, when there is room,
        p = 2.

        Returns:
            OrderedDict: identity name -> True, False or None (skipped)
    """

    A.require_square()
    n = A.rows
    results = OrderedDict()
    nonsingular = det(A) != 0

    for k in range(1, n):
        name = 'inverse-compound-k{}'.format(k)
        results[name] = verify_inverse_compound(A, k) if nonsingular else None
    results['inverse-adjugate'] = \
        verify_inverse_adjugate(A) if nonsingular else None
    if n >= 3:
        results['inverse-second-compound'] = \
            verify_inverse_second_compound(A) if nonsingular else None

    for k in range(1, n):
        for alpha in index_sets(n, k):
            if minor(A, alpha, alpha) == 0:
                continue
            label = ''.join(str(i) for i in alpha)
            results['schur-formula-{}'.format(label)] = \
                verify_schur_formula(A, alpha)
            if nonsingular:
                results['inverse-schur-{}'.format(label)] = \
                    verify_inverse_schur(A, alpha)
            for p in (1, 2):
                if p <= n - k:
                    holds, _ = verify_sylvester_identity(A, alpha, alpha, p)
                    results['sylvester-{}-p{}'.format(label, p)] = holds
    return results
