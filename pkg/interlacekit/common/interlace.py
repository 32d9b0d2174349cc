"""
    Verifiers for eigenvalue monotonicity and interlacing: the
    tau / strict tau lattice property, the extreme-eigenvalue
    inequalities for one deleted index, border-index interlacing of SK
    matrices and Kotelyansky's sign condition on the pencil
    A_lambda = A - lambda I.

    All comparisons between eigenvalues are exact (isolating intervals
    plus a gcd test for equality).
"""

import itertools
import logging
import multiprocessing as mp

import numpy as np

from collections import OrderedDict, namedtuple
from fractions import Fraction
from functools import lru_cache

from tqdm import tqdm

from interlacekit.common.classify import is_sk
from interlacekit.common.errors import (ClassPreconditionError,
                                        GeneratorBudgetError,
                                        LatticeBoundError,
                                        ZeroPolynomialError)
from interlacekit.common.exact import (compare_root_to,
                                       compare_roots, count_real_roots,
                                       descartes_sign_variations,
                                       format_exact, isolate_real_roots,
                                       sign)
from interlacekit.common.gen import generate
from interlacekit.common.matrix import IndexSet, index_sets, minor, permute
from interlacekit.common.settings import get_lattice_bound
from interlacekit.common.spectral import is_infinite, spectrum


class InterlaceReport:
    """
        Verdict of one verified property

        Attributes:
            property_name (str): e.g. 'tau-strict', 'theorem10'
            holds (bool): whether the property holds
            counterexample (dict): first violation, None if it holds
            checked_pairs (int): number of comparisons made
            details (dict): property specific extras
    """

    def __init__(self, property_name, holds=True, counterexample=None,
                 checked_pairs=0, details=None):
        self.property_name = property_name
        self.holds = holds
        self.counterexample = counterexample
        self.checked_pairs = checked_pairs
        self.details = details if details is not None else OrderedDict()

    def fail(self, counterexample):
        """ record the first violation only """
        if self.holds:
            self.holds = False
            self.counterexample = counterexample

    def to_dict(self):
        return OrderedDict([('property', self.property_name),
                            ('holds', self.holds),
                            ('counterexample', jsonable(self.counterexample)),
                            ('checked_pairs', self.checked_pairs),
                            ('details', jsonable(self.details))])

    def __repr__(self):
        return "InterlaceReport({}, holds={})".format(self.property_name,
                                                      self.holds)


def jsonable(value):
    """ recursively turn roots, index sets and rationals into JSON data """

    if value is None or isinstance(value, (bool, int, str, float)):
        return value
    if isinstance(value, Fraction):
        return format_exact(value)
    if isinstance(value, IndexSet):
        return list(value)
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, dict):
        return OrderedDict((str(k), jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


# ---------------------------------------------------------------------
# the pencil A - lambda I

@lru_cache(maxsize=64)
def _lambda_matrix(A):
    return A.lambda_matrix()


def lambda_minor(A, rows, cols):
    """
        The minor A_lambda(rows; cols) of A - lambda I as a polynomial

        Args:
            A (DenseMatrix): square rational matrix
            rows (IndexSet): 1-based rows
            cols (IndexSet): 1-based columns, same size as rows

        Returns:
            UniPoly
    """

    A.require_square()
    return minor(_lambda_matrix(A), rows, cols)


def _trailing(k, n):
    return IndexSet(range(k, n + 1))


class LambdaMinorSequence:
    """
        The enclosed minors A_lambda^k = A_lambda(k..n; k..n), k = 1..n

        A_lambda^k has degree n - k + 1 and leading coefficient
        (-1)^(n - k + 1).
    """

    def __init__(self, A):
        self.n = A.size
        self.minors = [lambda_minor(A, _trailing(k, self.n),
                                    _trailing(k, self.n))
                       for k in range(1, self.n + 1)]

    def __getitem__(self, k):
        """ 1-based access, A_lambda^k """
        return self.minors[k - 1]

    def __len__(self):
        return self.n

    def degrees_consistent(self):
        for k, p in enumerate(self.minors, start=1):
            degree = self.n - k + 1
            if p.degree != degree or \
                    p.leading_coefficient != (-1) ** degree:
                return False
        return True


def zigzag_permutation(n):
    """ sigma = (1, n, 2, n - 1, ...) """

    sigma = []
    lo, hi = 1, n
    while lo <= hi:
        sigma.append(lo)
        if lo != hi:
            sigma.append(hi)
        lo, hi = lo + 1, hi - 1
    return sigma


def zigzag(A):
    """ A~ = P A P^T, entries A[sigma(i), sigma(j)] """
    return permute(A, zigzag_permutation(A.size))


# ---------------------------------------------------------------------
# exact comparisons of eigenvalue lists

def _abs_root(root):
    return root.negated() if root.sign() < 0 else root


def _extreme_by_modulus(roots, largest):
    """ real root of largest (smallest) modulus; ties prefer positive """

    best = None
    for root in roots:
        if best is None:
            best = root
            continue
        cmp, _, _ = compare_roots(_abs_root(root), _abs_root(best))
        if (largest and cmp > 0) or (not largest and cmp < 0) or \
                (cmp == 0 and root.sign() > best.sign()):
            best = root
    return best


def interlacing_chain(outer, inner):
    """
        Check outer_j > inner_j > outer_(j+1), j = 1..len(inner), for
        lists sorted decreasing

        Returns:
            tuple: (holds, j, triple, equality) with the first
                violated position (1-based) when holds is False
    """

    for j in range(len(inner)):
        upper, middle = outer[j], inner[j]
        lower = outer[j + 1] if j + 1 < len(outer) else None

        cmp, upper, middle = compare_roots(upper, middle)
        if cmp <= 0:
            return False, j + 1, (upper, middle, lower), cmp == 0
        if lower is not None:
            cmp, middle, lower = compare_roots(middle, lower)
            if cmp <= 0:
                return False, j + 1, (upper, middle, lower), cmp == 0
    return True, None, None, False


def _simple_real_roots(p):
    """ distinct real roots sorted decreasing and whether they are n simple """
    roots = isolate_real_roots(p)[::-1]
    simple = all(r.multiplicity == 1 for r in roots) and \
        len(roots) == p.degree
    return roots, simple


# ---------------------------------------------------------------------
# tau and strict tau

def verify_tau(A, strict=False, all_pairs=False, lattice_bound=None,
               progress=False):
    """
        Check l(A(alpha)) <= l(A(beta)) for nested beta in alpha over
        the lattice of principal submatrices

        Covering pairs (beta = alpha minus one index) suffice by
        transitivity; `all_pairs` compares every nested pair instead.

        Args:
            A (DenseMatrix): square matrix
            strict (bool): the strict variant (l(A) > 0 and strict
                inequalities)
            all_pairs (bool): quadratic cross validation mode
            lattice_bound (int): max n, defaults to get_lattice_bound()
            progress (bool): show a tqdm bar over the subsets

        Returns:
            InterlaceReport
    """

    n = A.size
    bound = lattice_bound if lattice_bound is not None else \
        get_lattice_bound()
    if n > bound:
        raise LatticeBoundError("n = {} exceeds the lattice bound {}".format(
            n, bound))

    name = 'tau-strict' if strict else 'tau'
    report = InterlaceReport(name)

    subsets = [alpha for k in range(1, n + 1) for alpha in index_sets(n, k)]
    l_values = {}
    for alpha in tqdm(subsets, disable=not progress, desc='l(A(alpha))'):
        l_values[alpha] = spectrum(A.submatrix(alpha, alpha)).l_value

    for alpha in subsets:
        if is_infinite(l_values[alpha]):
            report.fail(OrderedDict([('reason', 'no-real-eigenvalue'),
                                     ('subset', alpha)]))
            report.details['l'] = _l_table(l_values)
            return report

    full = IndexSet(range(1, n + 1))
    sign_l = l_values[full].sign()
    if sign_l < 0 or (strict and sign_l == 0):
        report.fail(OrderedDict([('reason', 'l(A) not positive' if strict
                                  else 'l(A) negative'),
                                 ('l', l_values[full])]))
        report.details['l'] = _l_table(l_values)
        return report

    for alpha in subsets:
        if len(alpha) < 2:
            continue
        if all_pairs:
            smaller = [IndexSet(c) for k in range(1, len(alpha))
                       for c in itertools.combinations(alpha, k)]
        else:
            smaller = [IndexSet(x for x in alpha if x != i) for i in alpha]

        for beta in smaller:
            cmp, l_values[alpha], l_values[beta] = compare_roots(
                l_values[alpha], l_values[beta])
            report.checked_pairs += 1
            if cmp > 0 or (strict and cmp == 0):
                report.fail(OrderedDict([
                    ('alpha', alpha), ('beta', beta),
                    ('l_alpha', l_values[alpha]), ('l_beta', l_values[beta]),
                    ('equality', cmp == 0)]))
                report.details['l'] = _l_table(l_values)
                return report

    report.details['l'] = _l_table(l_values)
    logging.debug("{}: {} pairs checked".format(name, report.checked_pairs))
    return report


def _l_table(l_values):
    return [OrderedDict([('subset', list(alpha)), ('l', l.to_dict())])
            for alpha, l in l_values.items()]


# ---------------------------------------------------------------------
# extreme eigenvalues after deleting one index

def verify_weak_interlacing(A):
    """
        lambda_1 > mu_1^(k) and mu_(n-1)^(k) > lambda_n for every
        deleted index k, where lambda_1, lambda_n (mu_1, mu_(n-1)) are
        the real eigenvalues of largest and smallest modulus of A (of
        A with row and column k deleted)

        Returns:
            InterlaceReport: counterexample holds k, the inequality
                ('4' or '5'), both roots and an equality flag
    """

    n = A.size
    if n < 2:
        raise ClassPreconditionError("weak interlacing needs n >= 2")

    report = InterlaceReport('weak')
    roots = spectrum(A).real_roots
    if not roots:
        report.fail(OrderedDict([('reason', 'nonreal'), ('k', None)]))
        return report

    lam_1 = _extreme_by_modulus(roots, largest=True)
    lam_n = _extreme_by_modulus(roots, largest=False)
    report.details['lambda_1'] = lam_1
    report.details['lambda_n'] = lam_n

    full = IndexSet(range(1, n + 1))
    for k in range(1, n + 1):
        keep = IndexSet(i for i in full if i != k)
        sub_roots = spectrum(A.submatrix(keep, keep)).real_roots
        if not sub_roots:
            report.fail(OrderedDict([('reason', 'nonreal'), ('k', k)]))
            return report
        mu_1 = _extreme_by_modulus(sub_roots, largest=True)
        mu_last = _extreme_by_modulus(sub_roots, largest=False)

        cmp, lam_1, mu_1 = compare_roots(lam_1, mu_1)
        report.checked_pairs += 1
        if cmp <= 0:
            report.fail(OrderedDict([('k', k), ('inequality', '4'),
                                     ('lambda_1', lam_1), ('mu_1', mu_1),
                                     ('equality', cmp == 0)]))
            return report

        cmp, mu_last, lam_n = compare_roots(mu_last, lam_n)
        report.checked_pairs += 1
        if cmp <= 0:
            report.fail(OrderedDict([('k', k), ('inequality', '5'),
                                     ('mu_last', mu_last),
                                     ('lambda_n', lam_n),
                                     ('equality', cmp == 0)]))
            return report

    return report


# ---------------------------------------------------------------------
# interlacing for one deleted index

def deleted_index_chain(A, r, eigenvalues=None):
    """
        Evaluate lambda_j > mu_j^(r) > lambda_(j+1), j = 1..n-1

        Args:
            A (DenseMatrix): square matrix
            r (int): 1-based deleted index
            eigenvalues (list): distinct real eigenvalues of A, sorted
                decreasing (computed when None)

        Returns:
            OrderedDict: 'holds', and on failure 'j', 'triple',
                'equality' or a 'reason'; 'chain' lists the roots
                interleaved when it holds
    """

    n = A.size
    if eigenvalues is None:
        eigenvalues, simple = _simple_real_roots(spectrum(A).charpoly)
        if not simple:
            return OrderedDict([('r', r), ('holds', False),
                                ('reason', 'eigenvalues not real simple')])

    keep = IndexSet(i for i in range(1, n + 1) if i != r)
    mus, simple = _simple_real_roots(
        spectrum(A.submatrix(keep, keep)).charpoly)
    if not simple:
        return OrderedDict([('r', r), ('holds', False),
                            ('reason', 'submatrix eigenvalues not real '
                             'simple')])

    holds, j, triple, equality = interlacing_chain(list(eigenvalues), mus)
    result = OrderedDict([('r', r), ('holds', holds)])
    if holds:
        chain = []
        for index, lam in enumerate(eigenvalues):
            chain.append(lam)
            if index < len(mus):
                chain.append(mus[index])
        result['chain'] = chain
    else:
        result['j'] = j
        result['triple'] = list(triple)
        result['equality'] = equality
    return result


def verify_theorem10(A, check_class=True):
    """
        Border-index interlacing of an SK matrix

        All eigenvalues must be real, positive and simple, and the
        chains for r = 1 and r = n must hold strictly. Interior r are
        evaluated and recorded in details['interior'] without affecting
        the verdict.

        Returns:
            InterlaceReport
    """

    n = A.size
    if check_class:
        holds, witness = is_sk(A)
        if not holds:
            raise ClassPreconditionError(
                "border interlacing needs an SK matrix: {}".format(witness))

    report = InterlaceReport('theorem10')
    p = spectrum(A).charpoly
    eigenvalues, simple = _simple_real_roots(p)
    positive = all(root.sign() > 0 for root in eigenvalues)
    report.details['eigenvalues'] = eigenvalues
    if not (simple and positive):
        report.fail(OrderedDict([('reason', 'eigenvalues not positive '
                                  'simple')]))
        return report

    borders = sorted({1, n})
    report.details['border'] = []
    report.details['interior'] = []
    for r in range(1, n + 1):
        if n == 1:
            break
        result = deleted_index_chain(A, r, eigenvalues)
        report.checked_pairs += 2 * (n - 1)
        if r in borders:
            report.details['border'].append(result)
            if not result['holds']:
                report.fail(result)
        else:
            report.details['interior'].append(result)
            if not result['holds']:
                logging.info("interior index r = {} breaks interlacing at "
                             "j = {}".format(r, result.get('j')))
    return report


# ---------------------------------------------------------------------
# Kotelyansky's theorem

def choose_alpha_beta(A, nonnegative=False):
    """
        Rational alpha < beta with A_alpha^k > 0 and
        (-1)^deg A_beta^k > 0 for every enclosed minor

        Starts from B = 1 + max absolute row sum and doubles until the
        sign conditions hold. With `nonnegative` alpha = 0 is tried
        first.

        Returns:
            tuple: (alpha, beta) as Fractions
    """

    n = A.size
    sequence = LambdaMinorSequence(A)
    bound = 1 + max(sum(abs(A[i, j]) for j in range(n)) for i in range(n))

    def alpha_ok(alpha):
        return all(p(alpha) > 0 for p in sequence.minors)

    def beta_ok(beta):
        return all((-1) ** p.degree * p(beta) > 0 for p in sequence.minors)

    alpha = None
    if nonnegative and alpha_ok(Fraction(0)):
        alpha = Fraction(0)
    if alpha is None:
        alpha = -bound
        while not alpha_ok(alpha):
            alpha *= 2

    beta = bound
    while not beta_ok(beta):
        beta *= 2

    return Fraction(alpha), Fraction(beta)


def kotelyansky_pairs(n):
    """
        (rows, cols) of the paired almost-principal lambda-minors:
        rows = (k, k+2..n), cols = (k+1, k+2..n), k = 1..n-1
    """

    for k in range(1, n):
        tail = list(range(k + 2, n + 1))
        yield k, IndexSet([k] + tail), IndexSet([k + 1] + tail)


def kotelyansky_products(A):
    """ p_k = A_lambda(rows; cols) * A_lambda(cols; rows) """
    return [(k, lambda_minor(A, rows, cols) * lambda_minor(A, cols, rows))
            for k, rows, cols in kotelyansky_pairs(A.size)]


def check_kotelyansky_hypothesis(A, alpha, beta):
    """
        Whether every paired product p_k stays strictly positive on
        the closed interval [alpha, beta]

        Decided exactly: no root of p_k in [alpha, beta] (Sturm count)
        and p_k positive at the midpoint. An identically zero product
        fails.

        Returns:
            tuple: (bool, witness) witness is a dict with k and reason
    """

    alpha, beta = Fraction(alpha), Fraction(beta)
    mid = (alpha + beta) / 2
    for k, p in kotelyansky_products(A):
        if p.is_zero:
            return False, OrderedDict([('k', k), ('reason', 'zero')])
        roots = count_real_roots(p, alpha, beta, closed=True)
        if roots:
            return False, OrderedDict([('k', k), ('reason', 'root'),
                                       ('roots', roots)])
        if not p(mid) > 0:
            return False, OrderedDict([('k', k), ('reason', 'negative')])
    return True, None


def grid_sign_sampler(p, lo, hi, points=1000):
    """
        Signs of p on an evenly spaced rational grid over [lo, hi]

        Returns:
            tuple: (all positive, number of sign changes, minimum sign)
    """

    lo, hi = Fraction(lo), Fraction(hi)
    step = (hi - lo) / (points - 1)
    signs = [sign(p(lo + i * step)) for i in range(points)]
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)
    return all(s > 0 for s in signs), changes, min(signs)


def verify_theorem9_conclusion(A, alpha, beta, check_hypothesis=True):
    """
        Real simple roots of every trailing principal lambda-minor
        inside (alpha, beta), strictly interlacing between consecutive
        minors

        Returns:
            InterlaceReport
    """

    n = A.size
    alpha, beta = Fraction(alpha), Fraction(beta)
    if check_hypothesis:
        holds, witness = check_kotelyansky_hypothesis(A, alpha, beta)
        if not holds:
            raise ClassPreconditionError(
                "Kotelyansky hypothesis fails on [{}, {}]: {}".format(
                    format_exact(alpha), format_exact(beta), dict(witness)))

    report = InterlaceReport('theorem9-conclusion')
    sequence = LambdaMinorSequence(A)
    all_roots = []
    for k in range(1, n + 1):
        p = sequence[k]
        roots, simple = _simple_real_roots(p)
        all_roots.append(roots)
        if not simple:
            report.fail(OrderedDict([('k', k), ('reason',
                                                'roots not real simple')]))
            break
        for root in roots:
            report.checked_pairs += 2
            if compare_root_to(root, alpha) <= 0 or \
                    compare_root_to(root, beta) >= 0:
                report.fail(OrderedDict([('k', k), ('reason',
                                                    'root outside'),
                                         ('root', root)]))
                break

    if report.holds:
        for k in range(1, n):
            holds, j, triple, equality = interlacing_chain(
                all_roots[k - 1], all_roots[k])
            report.checked_pairs += 2 * len(all_roots[k])
            if not holds:
                report.fail(OrderedDict([('k', k), ('j', j),
                                         ('triple', list(triple)),
                                         ('equality', equality)]))
                break

    report.details['roots'] = OrderedDict(
        (k + 1, roots) for k, roots in enumerate(all_roots))
    return report


def verify_theorem9(A, alpha=None, beta=None, zigzag_first=False):
    """
        Bracket, check the hypothesis, then the conclusion

        The property holds when the hypothesis fails (the report says
        so in details['vacuous']) or when the conclusion is confirmed.

        Args:
            A (DenseMatrix): square matrix
            alpha, beta: bracketing interval; chosen by
                choose_alpha_beta(nonnegative=True) when None
            zigzag_first (bool): run on P A P^T for the zigzag
                permutation instead of A

        Returns:
            InterlaceReport
    """

    if zigzag_first:
        A = zigzag(A)

    if alpha is None or beta is None:
        auto_alpha, auto_beta = choose_alpha_beta(A, nonnegative=True)
        alpha = auto_alpha if alpha is None else Fraction(alpha)
        beta = auto_beta if beta is None else Fraction(beta)

    report = InterlaceReport('theorem9')
    report.details['alpha'] = Fraction(alpha)
    report.details['beta'] = Fraction(beta)
    report.details['zigzag'] = zigzag_first

    holds, witness = check_kotelyansky_hypothesis(A, alpha, beta)
    report.details['hypothesis'] = holds
    report.details['hypothesis_witness'] = witness
    if not holds:
        report.details['vacuous'] = True
        return report

    report.details['vacuous'] = False
    conclusion = verify_theorem9_conclusion(A, alpha, beta,
                                            check_hypothesis=False)
    report.details['conclusion'] = conclusion.to_dict()
    report.checked_pairs = conclusion.checked_pairs
    if not conclusion.holds:
        logging.critical("hypothesis holds but the conclusion fails: "
                         "{}".format(conclusion.counterexample))
        report.fail(conclusion.counterexample)
    return report


def border_product_descartes(A):
    """
        Coefficient signs of the border lambda-minors
        A_lambda(1..m-1; 2..m) and A_lambda(2..m; 1..m-1) of every
        contiguous principal submatrix A(i..j), m = j - i + 1 >= 2

        Every coefficient is a sum of almost-principal minors of A, so
        for an SK matrix all of them are positive (zero sign variations)
        and neither minor has a positive root.

        Returns:
            InterlaceReport
    """

    n = A.size
    report = InterlaceReport('border-descartes')
    report.details['intervals'] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            sub = A.submatrix(range(i, j + 1), range(i, j + 1))
            m = j - i + 1
            upper = IndexSet(range(1, m))
            lower = IndexSet(range(2, m + 1))
            entry = OrderedDict([('interval', [i, j])])
            for name, rows, cols in (('upper', upper, lower),
                                     ('lower', lower, upper)):
                p = lambda_minor(sub, rows, cols)
                try:
                    variations = descartes_sign_variations(p)
                except ZeroPolynomialError:
                    variations = None
                positive = variations == 0 and p.leading_coefficient > 0
                entry[name] = OrderedDict([
                    ('coefficients', [format_exact(c)
                                      for c in p.coefficients]),
                    ('variations', variations), ('positive', positive)])
                report.checked_pairs += 1
                if not positive:
                    report.fail(OrderedDict([('interval', [i, j]),
                                             ('minor', name),
                                             ('variations', variations)]))
            report.details['intervals'].append(entry)
    return report


# ---------------------------------------------------------------------
# searching for an interior-index failure

def evaluate_interior(A):
    """
        Chains for every r of a matrix whose eigenvalues are real and
        simple

        Returns:
            tuple: (border results, interior results), or (None, None)
                if the eigenvalues are not real and simple
    """

    n = A.size
    eigenvalues, simple = _simple_real_roots(spectrum(A).charpoly)
    if not simple:
        return None, None
    border, interior = [], []
    for r in range(1, n + 1):
        result = deleted_index_chain(A, r, eigenvalues)
        (border if r in (1, n) else interior).append(result)
    return border, interior


def reverify_hit(A, r, j):
    """ recompute the chain for (r, j) from scratch """
    result = deleted_index_chain(A, r)
    return not result['holds'] and result.get('j') == j


InteriorHit = namedtuple(
    'InteriorHit', ['matrix', 'r', 'j', 'roots', 'index', 'seed'])


def instance_rng(seed, index):
    return np.random.default_rng([seed, index])


def _evaluate_instance(config, index):
    """ generate instance `index` of a search and evaluate every r """

    record = OrderedDict([('index', index), ('seed', config.seed),
                          ('n', config.n), ('status', 'ok'), ('r', None),
                          ('j', None), ('border_failure', False)])
    try:
        A = generate(config, instance_rng(config.seed, index))
    except GeneratorBudgetError as e:
        record['status'] = 'generator-error'
        logging.debug("instance {}: {}".format(index, e))
        return record, None

    border, interior = evaluate_interior(A)
    if border is None:
        record['status'] = 'not-simple'
        return record, None

    record['border_failure'] = not all(result['holds'] for result in border)
    if record['border_failure']:
        logging.warning("instance {} breaks border interlacing".format(index))
    for result in interior:
        if not result['holds'] and 'j' in result:
            record['status'] = 'hit'
            record['r'] = result['r']
            record['j'] = result['j']
            return record, (A, result)
    return record, None


def _evaluate_chunk(args):
    config, indices = args
    records = []
    for index in indices:
        record, hit = _evaluate_instance(config, index)
        records.append(record)
        if hit is not None:
            return records, (index, hit)
    return records, None


def _chunks(budget, size):
    for start in range(0, budget, size):
        yield range(start, min(start + size, budget))


def search_interior_counterexample(config, budget, workers=1, progress=False,
                                   records=None, chunk_size=50):
    """
        Sample generator instances and return the first one where an
        interior deleted index r breaks lambda_j > mu_j^(r) > lambda_(j+1)

        Instance i is generated from default_rng([config.seed, i]), so
        the outcome depends only on (config, budget); with several
        workers the index range is sharded into ordered chunks and the
        smallest hitting index wins.

        Args:
            config (GenConfig): generator configuration, usually target
                'stp' or 'sk'
            budget (int): number of instances
            workers (int): processes in the pool
            progress (bool): show a tqdm bar over the instances
            records (list): if given, per-instance records (dicts) are
                appended to it up to and including the hit
            chunk_size (int): instances per shard

        Returns:
            InteriorHit or None
    """

    if budget <= 0:
        return None

    log = records if records is not None else []
    tasks = ((config, indices) for indices in _chunks(budget, chunk_size))
    found = None
    with tqdm(total=budget, disable=not progress, desc='search') as bar:
        if workers > 1:
            pool = mp.Pool(workers)
            results = pool.imap(_evaluate_chunk, tasks)
        else:
            pool = None
            results = map(_evaluate_chunk, tasks)
        try:
            for chunk_records, hit in results:
                log.extend(chunk_records)
                bar.update(len(chunk_records))
                if hit is not None:
                    found = hit
                    break
        finally:
            if pool is not None:
                pool.terminate()
                pool.join()

    if found is None:
        logging.info("no interior interlacing failure in {} instances".format(
            budget))
        return None

    index, (A, result) = found
    if not reverify_hit(A, result['r'], result['j']):
        logging.error("instance {} did not re-verify".format(index))
        log[-1]['status'] = 'unverified'
        return None

    logging.info("interior failure at instance {}: r = {}, j = {}".format(
        index, result['r'], result['j']))
    return InteriorHit(A, result['r'], result['j'], result['triple'], index,
                       config.seed)
