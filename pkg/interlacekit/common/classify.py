"""
    Membership predicates for the Kotelyansky / sign-symmetric matrix
    hierarchy.

    Every predicate returns a `(holds, witness)` pair. On failure the
    witness is the lexicographically first violation: minors are
    scanned by order ascending, then by (rows, cols) in lexicographic
    order. A witness can be re-evaluated against the matrix with
    `Witness.confirms`.
"""

import itertools
import logging

import numpy as np

from collections import OrderedDict
from fractions import Fraction

from interlacekit.common.errors import (ClassPreconditionError,
                                        DimensionError)
from interlacekit.common.exact import format_exact, sign
from interlacekit.common.matrix import (DenseMatrix, IndexSet, compound,
                                        index_sets, inverse, minor,
                                        permutation_matrix,
                                        reverse_permutation_matrix,
                                        schur_complement, sign_diagonal)

# requirement names carried by witnesses
POSITIVE = 'positive'
NONNEGATIVE = 'nonnegative'
NONZERO = 'nonzero'
SIGN_CONSISTENT = 'sign-consistent'

CLASS_NAMES = ('positive', 'P', 'TP', 'STP', 'K', 'SK', 'JS', 'SJS', 'TJS',
               'STJS', 'JSK', 'SJSK')

# classes that are defined for rectangular input
RECTANGULAR_CLASSES = ('positive', 'TP', 'STP')


def _violates(value, requirement):
    if requirement == POSITIVE:
        return not value > 0
    if requirement == NONNEGATIVE:
        return value < 0
    if requirement == NONZERO:
        return value == 0
    raise ValueError("unknown requirement {}".format(requirement))


class Witness:
    """
        A concrete violation of a class condition

        kinds:
            'minor': the minor A(rows; cols) = value breaks `requirement`
            'entry': the entry at rows[0], cols[0] (1-based) breaks it
            'cycle': entries at the 1-based `cycle` positions whose
                sign product is negative, so no sign vector can make
                them all nonnegative
            'compound': the `order`-th compound of the principal
                submatrix on `subset` (or of A itself when subset is
                None) fails with the nested witness `inner`
    """

    def __init__(self, class_name, kind, requirement=None, rows=None,
                 cols=None, value=None, cycle=None, order=None, subset=None,
                 inner=None):
        self.class_name = class_name
        self.kind = kind
        self.requirement = requirement
        self.rows = rows
        self.cols = cols
        self.value = value
        self.cycle = cycle
        self.order = order
        self.subset = subset
        self.inner = inner

    def sort_key(self):
        return (len(self.rows), tuple(self.rows), tuple(self.cols))

    def confirms(self, A):
        """
            Re-evaluate the witness on A

            Returns:
                bool: True if the violation is reproduced exactly
        """

        if self.kind == 'minor':
            value = minor(A, self.rows, self.cols)
            return value == self.value and \
                _violates(value, self.requirement)

        if self.kind == 'entry':
            value = A[self.rows[0] - 1, self.cols[0] - 1]
            return value == self.value and \
                _violates(value, self.requirement)

        if self.kind == 'cycle':
            product = 1
            for i, j in self.cycle:
                product *= sign(A[i - 1, j - 1])
            return product < 0

        if self.kind == 'compound':
            target = A if self.subset is None else \
                A.submatrix(self.subset, self.subset)
            return self.inner.confirms(compound(target, self.order))

        return False

    def to_dict(self):
        result = OrderedDict([('class', self.class_name),
                              ('kind', self.kind)])
        if self.requirement is not None:
            result['requirement'] = self.requirement
        if self.rows is not None:
            result['rows'] = list(self.rows)
            result['cols'] = list(self.cols)
        if self.value is not None:
            result['value'] = format_exact(self.value)
        if self.cycle is not None:
            result['cycle'] = [list(p) for p in self.cycle]
        if self.order is not None:
            result['order'] = self.order
        if self.subset is not None:
            result['subset'] = list(self.subset)
        if self.inner is not None:
            result['inner'] = self.inner.to_dict()
        return result

    def __repr__(self):
        return "Witness({})".format(dict(self.to_dict()))


class SignPattern:
    """
        The J of a J-sign-symmetric matrix, canonicalised so that
        1 is in J
    """

    def __init__(self, n, J, consistent, strict=False):
        self.n = n
        self.J = IndexSet(J)
        self.consistent = consistent
        self.strict = strict

    def signs(self):
        """ the +-1 vector eps with eps_i = 1 on J """
        members = set(self.J)
        return [1 if i in members else -1 for i in range(1, self.n + 1)]

    def sign_diagonal(self):
        return DenseMatrix.diagonal(self.signs())

    def to_dict(self):
        return OrderedDict([('n', self.n), ('J', list(self.J)),
                            ('consistent', self.consistent),
                            ('strict', self.strict)])

    def __repr__(self):
        return "SignPattern(n={}, J={}, strict={})".format(
            self.n, tuple(self.J), self.strict)


class ClassReport:
    """
        Verdict per class with witnesses

        verdicts map class name to True, False or None (not
        applicable). witnesses map class name to a Witness, or to a
        list of them in exhaustive mode.
    """

    def __init__(self, matrix_id=None):
        self.matrix_id = matrix_id
        self.verdicts = OrderedDict()
        self.witnesses = OrderedDict()
        self.patterns = OrderedDict()
        self.findings = []

    def record(self, class_name, holds, witness=None):
        self.verdicts[class_name] = holds
        if witness:
            self.witnesses[class_name] = witness

    def __getitem__(self, class_name):
        return self.verdicts[class_name]

    def to_dict(self):
        witnesses = OrderedDict()
        for name, witness in self.witnesses.items():
            if isinstance(witness, list):
                witnesses[name] = [w.to_dict() for w in witness]
            else:
                witnesses[name] = witness.to_dict()

        return OrderedDict([
            ('matrix_id', self.matrix_id),
            ('verdicts', OrderedDict(
                (name, 'not-applicable' if v is None else
                 ('member' if v else 'non-member'))
                for name, v in self.verdicts.items())),
            ('witnesses', witnesses),
            ('sign_patterns', OrderedDict(
                (name, p.to_dict()) for name, p in self.patterns.items())),
            ('findings', list(self.findings))])


# ---------------------------------------------------------------------
# minor enumeration

def principal_pairs(n):
    """ principal index pairs by order, then lexicographically """
    for k in range(1, n + 1):
        for alpha in index_sets(n, k):
            yield alpha, alpha


def kotelyansky_pairs(n):
    """
        Principal and almost-principal (rows, cols) pairs, order
        ascending then lexicographic in (rows, cols)

        An almost-principal pair is (S - {i}, S - {j}), i != j.
    """

    for k in range(1, n + 1):
        pairs = [(alpha, alpha) for alpha in index_sets(n, k)]
        if k < n:
            for s in index_sets(n, k + 1):
                for i, j in itertools.permutations(s, 2):
                    pairs.append((IndexSet(x for x in s if x != i),
                                  IndexSet(x for x in s if x != j)))
        pairs.sort()
        for pair in pairs:
            yield pair


def all_minor_pairs(rows, cols):
    for k in range(1, min(rows, cols) + 1):
        for r in index_sets(rows, k):
            for c in index_sets(cols, k):
                yield r, c


def _minor_violations(A, pairs, class_name, requirement_of):
    for rows, cols in pairs:
        value = minor(A, rows, cols)
        requirement = requirement_of(rows, cols)
        if _violates(value, requirement):
            yield Witness(class_name, 'minor', requirement, rows=rows,
                          cols=cols, value=value)


def _decide(violations, exhaustive):
    if exhaustive:
        found = list(violations)
        return not found, found
    witness = next(violations, None)
    return witness is None, witness


def _require_square(A):
    if not A.is_square:
        raise DimensionError("class requires a square matrix, got "
                             "{}x{}".format(A.rows, A.cols))


# ---------------------------------------------------------------------
# entrywise classes

def _entry_violations(A, class_name, requirement):
    for i in range(A.rows):
        for j in range(A.cols):
            if _violates(A[i, j], requirement):
                yield Witness(class_name, 'entry', requirement,
                              rows=(i + 1,), cols=(j + 1,), value=A[i, j])


def is_positive(A, exhaustive=False):
    return _decide(_entry_violations(A, 'positive', POSITIVE), exhaustive)


def is_nonnegative(A, exhaustive=False):
    return _decide(_entry_violations(A, 'nonnegative', NONNEGATIVE),
                   exhaustive)


# ---------------------------------------------------------------------
# minor based classes

def is_p_matrix(A, exhaustive=False):
    """ all principal minors positive """
    _require_square(A)
    return _decide(_minor_violations(A, principal_pairs(A.rows), 'P',
                                     lambda r, c: POSITIVE), exhaustive)


def is_k(A, exhaustive=False):
    """
        K: principal minors positive, almost-principal minors
        nonnegative
    """

    _require_square(A)
    return _decide(_minor_violations(
        A, kotelyansky_pairs(A.rows), 'K',
        lambda r, c: POSITIVE if r == c else NONNEGATIVE), exhaustive)


def is_sk(A, exhaustive=False):
    """
        SK: principal and almost-principal minors positive
    """

    _require_square(A)
    return _decide(_minor_violations(A, kotelyansky_pairs(A.rows), 'SK',
                                     lambda r, c: POSITIVE), exhaustive)


def is_tp(A, exhaustive=False):
    """
        TP: every minor of every order nonnegative; rectangular input
        is accepted
    """

    return _decide(_minor_violations(A, all_minor_pairs(A.rows, A.cols),
                                     'TP', lambda r, c: NONNEGATIVE),
                   exhaustive)


def is_stp(A, exhaustive=False):
    return _decide(_minor_violations(A, all_minor_pairs(A.rows, A.cols),
                                     'STP', lambda r, c: POSITIVE),
                   exhaustive)


# ---------------------------------------------------------------------
# sign symmetry

class _ParityForest:
    """
        Union-find with parity plus the spanning edges, so that a
        conflicting constraint can be reported as an odd cycle
    """

    def __init__(self, n):
        self.parent = list(range(n))
        self.parity = [0] * n
        self.tree = [[] for _ in range(n)]

    def find(self, i):
        # returns (root, parity of i relative to root)
        parity = 0
        while self.parent[i] != i:
            parity ^= self.parity[i]
            i = self.parent[i]
        return i, parity

    def union(self, i, j, parity, position):
        """
            Impose part(i) xor part(j) = parity

            Returns:
                bool: False on a conflict with earlier constraints
        """

        root_i, parity_i = self.find(i)
        root_j, parity_j = self.find(j)
        if root_i == root_j:
            return parity_i ^ parity_j == parity
        self.parent[root_j] = root_i
        self.parity[root_j] = parity_i ^ parity_j ^ parity
        self.tree[i].append((j, position))
        self.tree[j].append((i, position))
        return True

    def tree_path(self, start, goal):
        """ positions on the spanning-tree path from start to goal """
        previous = {start: None}
        queue = [start]
        while queue:
            node = queue.pop(0)
            if node == goal:
                break
            for other, position in self.tree[node]:
                if other not in previous:
                    previous[other] = (node, position)
                    queue.append(other)

        path = []
        node = goal
        while previous[node] is not None:
            node, position = previous[node]
            path.append(position)
        return path[::-1]


def is_js(A, strict=False):
    """
        Decide J-sign-symmetry by parity propagation over the nonzero
        entries

        A nonzero a_ij asks i and j to lie in the same part (a_ij > 0)
        or in different parts (a_ij < 0); a negative diagonal entry can
        never be fixed. Components that no constraint ties to index 1
        join its part.

        Args:
            A (DenseMatrix): square matrix
            strict (bool): SJS, all entries nonzero as well

        Returns:
            tuple: (True, SignPattern) or (False, Witness)
    """

    _require_square(A)
    n = A.rows
    class_name = 'SJS' if strict else 'JS'
    forest = _ParityForest(n)

    for i in range(n):
        for j in range(n):
            value = A[i, j]
            if value == 0:
                if strict:
                    return False, Witness(class_name, 'entry', NONZERO,
                                          rows=(i + 1,), cols=(j + 1,),
                                          value=value)
                continue

            position = (i + 1, j + 1)
            if i == j:
                if value < 0:
                    return False, Witness(class_name, 'cycle',
                                          SIGN_CONSISTENT,
                                          cycle=[position])
                continue

            if not forest.union(i, j, 0 if value > 0 else 1, position):
                cycle = forest.tree_path(i, j) + [position]
                return False, Witness(class_name, 'cycle', SIGN_CONSISTENT,
                                      cycle=cycle)

    root_1, parity_1 = forest.find(0)
    J = []
    for i in range(n):
        root, parity = forest.find(i)
        if root == root_1:
            parity ^= parity_1
        if parity == 0:
            J.append(i + 1)

    return True, SignPattern(n, J, True, strict)


def js_brute_force(A, strict=False):
    """
        Scan all 2^(n-1) sign vectors with eps_1 = 1

        Returns:
            tuple: (bool, SignPattern or None)
    """

    _require_square(A)
    n = A.rows
    for tail in itertools.product((1, -1), repeat=n - 1):
        eps = (1,) + tail
        good = True
        for i in range(n):
            for j in range(n):
                value = eps[i] * eps[j] * A[i, j]
                if value < 0 or (strict and value == 0):
                    good = False
                    break
            if not good:
                break
        if good:
            J = [i + 1 for i in range(n) if eps[i] == 1]
            return True, SignPattern(n, J, True, strict)
    return False, None


def sign_symmetric_form(A, pattern):
    """
        D A D^-1 for D = diag(eps) of the pattern; nonnegative (positive
        for SJS) exactly when A is J-sign-symmetric for this J
    """

    d = pattern.sign_diagonal()
    return d @ A @ d


def _compound_violation(A, k, strict, class_name, subset=None):
    holds, result = is_js(compound(A, k), strict)
    if holds:
        return None, result
    return Witness(class_name, 'compound', order=k, subset=subset,
                   inner=result), None


def is_tjs(A, strict=False, exhaustive=False):
    """
        Every compound A^(j), j = 1..n, is JS (SJS when strict)

        Returns:
            tuple: (bool, witness); on success the witness slot holds
                the list of SignPatterns, one per order
    """

    _require_square(A)
    class_name = 'STJS' if strict else 'TJS'
    patterns = []
    failures = []
    for j in range(1, A.rows + 1):
        witness, pattern = _compound_violation(A, j, strict, class_name)
        if witness is not None:
            if not exhaustive:
                return False, witness
            failures.append(witness)
        else:
            patterns.append(pattern)
    if failures:
        return False, failures
    return True, patterns


def is_stjs(A, exhaustive=False):
    return is_tjs(A, strict=True, exhaustive=exhaustive)


def _sub_compound(A, alpha, k):
    """ compound(A(alpha), k) built from the cached minors of A """
    subsets = [IndexSet(c) for c in itertools.combinations(alpha, k)]
    return DenseMatrix([[minor(A, rows, cols) for cols in subsets]
                        for rows in subsets])


def is_jsk(A, strict=False, exhaustive=False):
    """
        JSK: all principal minors positive and compound(A(alpha), j-1)
        JS for every j-subset alpha, j = 2..n. SJSK: det A > 0 and
        those compounds SJS.
    """

    _require_square(A)
    n = A.rows
    class_name = 'SJSK' if strict else 'JSK'
    failures = []

    if strict:
        full = IndexSet(range(1, n + 1))
        value = minor(A, full, full)
        if not value > 0:
            witness = Witness(class_name, 'minor', POSITIVE, rows=full,
                              cols=full, value=value)
            if not exhaustive:
                return False, witness
            failures.append(witness)
    else:
        holds, witness = is_p_matrix(A, exhaustive)
        if not holds:
            if not exhaustive:
                witness.class_name = class_name
                return False, witness
            for w in witness:
                w.class_name = class_name
            failures.extend(witness)

    for j in range(2, n + 1):
        for alpha in index_sets(n, j):
            holds, result = is_js(_sub_compound(A, alpha, j - 1), strict)
            if not holds:
                witness = Witness(class_name, 'compound', order=j - 1,
                                  subset=alpha, inner=result)
                if not exhaustive:
                    return False, witness
                failures.append(witness)

    if failures:
        return False, failures
    return True, None


def is_sjsk(A, exhaustive=False):
    return is_jsk(A, strict=True, exhaustive=exhaustive)


# ---------------------------------------------------------------------
# characterizations, closure properties, factorisation witnesses

def _observation_violations(A, strict):
    """
        Minors flagged by the compound-of-principal-submatrix
        characterization: compound(A(alpha), j-1) positive (SK) or
        nonnegative (K) for every j-subset alpha, together with
        positivity of every principal minor det A(alpha) (K) or of
        det A alone (SK)
    """

    n = A.rows
    found = {}
    full = IndexSet(range(1, n + 1))

    def flag(rows, cols, requirement):
        value = minor(A, rows, cols)
        if _violates(value, requirement):
            found[(rows, cols)] = Witness('SK' if strict else 'K', 'minor',
                                          requirement, rows=rows, cols=cols,
                                          value=value)

    flag(full, full, POSITIVE)
    for j in range(2, n + 1):
        for alpha in index_sets(n, j):
            sub = _sub_compound(A, alpha, j - 1)
            subsets = [IndexSet(c)
                       for c in itertools.combinations(alpha, j - 1)]
            for a, rows in enumerate(subsets):
                for b, cols in enumerate(subsets):
                    requirement = POSITIVE if strict or rows == cols \
                        else NONNEGATIVE
                    if _violates(sub[a, b], requirement):
                        found[(rows, cols)] = Witness(
                            'SK' if strict else 'K', 'minor', requirement,
                            rows=rows, cols=cols, value=sub[a, b])
    if not strict:
        # det A(alpha) > 0 for j = 1..n (j = 1 covers n = 1)
        for j in range(1, n + 1):
            for alpha in index_sets(n, j):
                flag(alpha, alpha, POSITIVE)

    return sorted(found.values(), key=Witness.sort_key)


def verify_observation_characterizations(A):
    """
        Compare the direct minor definitions of K and SK with their
        characterizations through compounds of principal submatrices

        Returns:
            tuple: (agree, details) with details holding the four
                verdicts and the first witness of each path
    """

    _require_square(A)
    details = OrderedDict()
    agree = True
    for class_name, strict, direct in (('SK', True, is_sk),
                                       ('K', False, is_k)):
        direct_holds, direct_witness = direct(A)
        violations = _observation_violations(A, strict)
        observed_witness = violations[0] if violations else None
        same = direct_holds == (not violations)
        if same and not direct_holds:
            same = direct_witness.sort_key() == observed_witness.sort_key()
        agree = agree and same
        details[class_name] = OrderedDict([
            ('direct', direct_holds),
            ('characterization', not violations),
            ('direct_witness', direct_witness),
            ('characterization_witness', observed_witness)])
        if not same:
            logging.warning("{} characterization disagrees with the "
                            "definition".format(class_name))
    return agree, details


class ClosureReport:
    def __init__(self, class_name):
        self.class_name = class_name
        self.entries = []

    def add(self, name, holds, witness=None):
        self.entries.append((name, holds, witness))

    @property
    def holds(self):
        return all(holds for _, holds, _ in self.entries)

    def to_dict(self):
        return OrderedDict([
            ('class', self.class_name),
            ('holds', self.holds),
            ('properties', [OrderedDict([
                ('property', name), ('holds', holds),
                ('witness', None if witness is None else witness.to_dict())])
                for name, holds, witness in self.entries])])


def proposition1_closure_suite(A, diagonal=None, seed=0):
    """
        Check that the K/SK class of A survives transposition, positive
        diagonal similarity, the alternating-sign inverse, reverse
        permutation similarity, passing to principal submatrices and
        Schur complements of principal submatrices

        Args:
            A (DenseMatrix): a K or SK matrix
            diagonal (list): positive diagonal for the similarity; drawn
                from seed when None
            seed (int): seed for the random diagonal

        Returns:
            ClosureReport
    """

    _require_square(A)
    n = A.rows
    if is_sk(A)[0]:
        class_name, predicate = 'SK', is_sk
    elif is_k(A)[0]:
        class_name, predicate = 'K', is_k
    else:
        raise ClassPreconditionError("closure suite needs a K or SK matrix")

    if diagonal is None:
        rng = np.random.default_rng(seed)
        diagonal = [Fraction(int(v), int(w)) for v, w in
                    zip(rng.integers(1, 11, n), rng.integers(1, 11, n))]
    diagonal = [Fraction(d) for d in diagonal]
    if any(d <= 0 for d in diagonal):
        raise ClassPreconditionError("similarity diagonal must be positive")

    report = ClosureReport(class_name)
    report.add('transpose', *predicate(A.transpose()))

    d = DenseMatrix.diagonal(diagonal)
    d_inv = DenseMatrix.diagonal([1 / v for v in diagonal])
    report.add('positive-diagonal-similarity', *predicate(d @ A @ d_inv))

    alternating = sign_diagonal(n)
    report.add('alternating-inverse',
               *predicate(alternating @ inverse(A) @ alternating))

    p = reverse_permutation_matrix(n)
    report.add('reverse-permutation-similarity',
               *predicate(p @ A @ p.transpose()))

    holds, witness = True, None
    for k in range(1, n + 1):
        for alpha in index_sets(n, k):
            ok, w = predicate(A.submatrix(alpha, alpha))
            if not ok:
                holds, witness = False, w
                break
        if not holds:
            break
    report.add('principal-submatrices', holds, witness)

    holds, witness = True, None
    for k in range(1, n):
        for alpha in index_sets(n, k):
            ok, w = predicate(schur_complement(A, alpha))
            if not ok:
                holds, witness = False, w
                break
        if not holds:
            break
    report.add('schur-complements', holds, witness)

    return report


def verify_lemma1_witness(A, signs, sigma):
    """
        Check a supplied factorisation A = D P B P^T D^-1 with D a +-1
        diagonal, P the permutation matrix of sigma, B and B^(2)
        positive

        Args:
            A (DenseMatrix): square matrix
            signs (list): the diagonal of D, entries +-1
            sigma (list): 1-based permutation defining P

        Returns:
            tuple: (bool, Witness or None) the witness refers to B
                (kind 'entry') or to B^(2) (kind 'compound')
    """

    _require_square(A)
    n = A.rows
    if len(signs) != n or any(s not in (1, -1) for s in signs):
        raise DimensionError("D must be a +-1 diagonal of size {}".format(n))

    d = DenseMatrix.diagonal(signs)
    p = permutation_matrix(sigma)
    b = p.transpose() @ d @ A @ d @ p

    holds, witness = is_positive(b)
    if not holds:
        return False, witness
    if n >= 2:
        holds, witness = is_positive(compound(b, 2))
        if not holds:
            return False, Witness('lemma1', 'compound', order=2,
                                  inner=witness)
    return True, None


# ---------------------------------------------------------------------
# the whole hierarchy

def classify_all(A, matrix_id=None, exhaustive=False):
    """
        Run every class predicate

        Args:
            A (DenseMatrix): matrix, rectangular input only gets the
                entrywise and total positivity classes
            matrix_id (str): label carried into the report
            exhaustive (bool): collect every violation instead of the
                first one

        Returns:
            ClassReport
    """

    report = ClassReport(matrix_id)
    square = A.is_square

    report.record('positive', *is_positive(A, exhaustive))
    if square:
        report.record('P', *is_p_matrix(A, exhaustive))
    else:
        report.record('P', None)
    report.record('TP', *is_tp(A, exhaustive))
    report.record('STP', *is_stp(A, exhaustive))

    if not square:
        for name in CLASS_NAMES:
            if name not in report.verdicts:
                report.record(name, None)
        return report

    report.record('K', *is_k(A, exhaustive))
    report.record('SK', *is_sk(A, exhaustive))

    for name, strict in (('JS', False), ('SJS', True)):
        holds, result = is_js(A, strict)
        if holds:
            report.record(name, True)
            report.patterns[name] = result
        else:
            report.record(name, False, [result] if exhaustive else result)

    for name, strict in (('TJS', False), ('STJS', True)):
        holds, result = is_tjs(A, strict, exhaustive)
        report.record(name, holds, None if holds else result)

    report.record('JSK', *is_jsk(A, False, exhaustive))
    report.record('SJSK', *is_jsk(A, True, exhaustive))

    if report['SJSK'] and not report['P']:
        finding = ("SJSK matrix with a non-positive principal minor "
                   "(matrix {})".format(matrix_id))
        logging.warning(finding)
        report.findings.append(finding)

    logging.debug("classified {}: {}".format(
        matrix_id, ", ".join(name for name, v in report.verdicts.items()
                             if v)))
    return report
