import pytest

from interlacekit.common import fixtures
from interlacekit.common.classify import is_sjsk, is_sk
from interlacekit.common.errors import (ClassPreconditionError,
                                        LatticeBoundError)
from interlacekit.common.exact import UniPoly, isolate_real_roots
from interlacekit.common.gen import GenConfig, generate
from interlacekit.common.interlace import (LambdaMinorSequence,
                                           border_product_descartes,
                                           check_kotelyansky_hypothesis,
                                           choose_alpha_beta,
                                           grid_sign_sampler, instance_rng,
                                           interlacing_chain,
                                           kotelyansky_products,
                                           search_interior_counterexample,
                                           verify_tau, verify_theorem10,
                                           verify_theorem9,
                                           verify_theorem9_conclusion,
                                           verify_weak_interlacing, zigzag,
                                           zigzag_permutation)
from interlacekit.common.matrix import DenseMatrix
from interlacekit.common.settings import LATTICE_BOUND_ENV
from interlacekit.common.spectral import charpoly


def _roots(values):
    """ isolated roots of prod (x - v), decreasing """
    return isolate_real_roots(UniPoly.from_roots(values))[::-1]


def test_zigzag_permutation():
    assert zigzag_permutation(1) == [1]
    assert zigzag_permutation(4) == [1, 4, 2, 3]
    assert zigzag_permutation(5) == [1, 5, 2, 4, 3]


def test_zigzag_matrix(example1):
    B = zigzag(example1)
    assert B[0, 1] == example1[0, 3]
    assert B[1, 2] == example1[3, 1]
    assert B[3, 3] == example1[2, 2]


def test_tau_identity():
    I = DenseMatrix.identity(2)
    report = verify_tau(I)
    assert report.holds

    report = verify_tau(I, strict=True)
    assert not report.holds
    assert list(report.counterexample['alpha']) == [1, 2]
    assert list(report.counterexample['beta']) == [2]
    assert report.counterexample['equality']


def test_tau_strict_positive_definite():
    report = verify_tau(DenseMatrix([[2, 1], [1, 2]]), strict=True)
    assert report.holds
    assert report.checked_pairs == 2


def test_tau_covering_and_all_pairs(example1):
    report = verify_tau(example1)
    assert report.holds
    assert report.checked_pairs == 28
    assert len(report.details['l']) == 15

    report = verify_tau(example1, all_pairs=True)
    assert report.holds
    assert report.checked_pairs == 50


def test_tau_without_real_eigenvalues():
    report = verify_tau(DenseMatrix([[0, -1], [1, 0]]))
    assert not report.holds
    assert report.counterexample['reason'] == 'no-real-eigenvalue'
    assert list(report.counterexample['subset']) == [1, 2]


def test_tau_lattice_bound(monkeypatch):
    with pytest.raises(LatticeBoundError):
        verify_tau(DenseMatrix.identity(3), lattice_bound=2)

    monkeypatch.setenv(LATTICE_BOUND_ENV, '2')
    with pytest.raises(LatticeBoundError):
        verify_tau(DenseMatrix.identity(3))

    monkeypatch.setenv(LATTICE_BOUND_ENV, 'many')
    with pytest.raises(LatticeBoundError):
        verify_tau(DenseMatrix.identity(2))


def test_weak_interlacing():
    report = verify_weak_interlacing(DenseMatrix([[2, 1], [1, 2]]))
    assert report.holds
    assert report.checked_pairs == 4

    report = verify_weak_interlacing(DenseMatrix([[1, 0], [0, 2]]))
    assert not report.holds
    assert report.counterexample['k'] == 1
    assert report.counterexample['inequality'] == '4'
    assert report.counterexample['equality']

    with pytest.raises(ClassPreconditionError):
        verify_weak_interlacing(DenseMatrix([[3]]))


def test_interlacing_chain():
    outer = _roots([3, 1])
    holds, j, triple, equality = interlacing_chain(outer, _roots([2]))
    assert holds
    assert j is None

    holds, j, triple, equality = interlacing_chain(outer, _roots([3]))
    assert not holds
    assert j == 1
    assert equality

    holds, j, triple, equality = interlacing_chain(outer, _roots([0]))
    assert not holds
    assert not equality


def test_theorem10_border_chains(example1):
    report = verify_theorem10(example1)
    assert report.holds
    assert [c['r'] for c in report.details['border']] == [1, 4]
    assert [c['r'] for c in report.details['interior']] == [2, 3]
    assert all(len(c['chain']) == 7 for c in report.details['border'])
    assert report.to_dict()['details']['border'][0]['holds']


def test_theorem10_needs_sk():
    with pytest.raises(ClassPreconditionError):
        verify_theorem10(DenseMatrix([[1, 2], [3, 1]]))


def test_lambda_minor_sequence(example1):
    sequence = LambdaMinorSequence(example1)
    assert len(sequence) == 4
    assert sequence.degrees_consistent()
    assert sequence[1] == charpoly(example1)
    assert sequence[4] == UniPoly([3, -1])


def test_choose_alpha_beta():
    assert choose_alpha_beta(DenseMatrix.identity(2)) == (-2, 2)
    assert choose_alpha_beta(DenseMatrix([[5]])) == (-6, 6)
    alpha, beta = choose_alpha_beta(DenseMatrix.identity(2),
                                    nonnegative=True)
    assert alpha == 0
    assert beta == 2


def test_kotelyansky_zero_product():
    products = kotelyansky_products(DenseMatrix.identity(2))
    assert len(products) == 1
    assert products[0][1].is_zero

    holds, witness = check_kotelyansky_hypothesis(DenseMatrix.identity(2),
                                                  -2, 2)
    assert not holds
    assert witness['k'] == 1
    assert witness['reason'] == 'zero'


def test_theorem9_raw_and_zigzag(example1):
    report = verify_theorem9(example1)
    assert report.holds
    assert report.details['vacuous']
    assert not report.details['hypothesis']

    report = verify_theorem9(example1, zigzag_first=True)
    assert report.holds
    assert not report.details['vacuous']
    assert report.details['alpha'] == 0
    assert report.details['conclusion']['holds']


def test_theorem9_conclusion_needs_hypothesis(example1):
    alpha, beta = choose_alpha_beta(example1, nonnegative=True)
    with pytest.raises(ClassPreconditionError):
        verify_theorem9_conclusion(example1, alpha, beta)

    B = zigzag(example1)
    alpha, beta = choose_alpha_beta(B, nonnegative=True)
    report = verify_theorem9_conclusion(B, alpha, beta)
    assert report.holds
    assert sorted(report.details['roots']) == [1, 2, 3, 4]
    assert len(report.details['roots'][1]) == 4


def test_grid_sign_sampler():
    positive, changes, lowest = grid_sign_sampler(UniPoly([-1, 1]), 0, 2,
                                                  points=4)
    assert not positive
    assert changes == 1
    assert lowest == -1

    positive, changes, lowest = grid_sign_sampler(UniPoly([1, 0, 1]), -1, 1)
    assert positive
    assert changes == 0
    assert lowest == 1


def test_border_product_descartes_sk(example1):
    report = border_product_descartes(example1)
    assert report.holds
    assert report.checked_pairs == 12
    # A(123;234) + (A(13;34) + A(12;24)) lambda + a_14 lambda^2
    full = report.details['intervals'][2]
    assert full['interval'] == [1, 4]
    assert full['upper']['coefficients'] == ['1', '2/5', '3/5']


def test_border_product_descartes():
    report = border_product_descartes(DenseMatrix([[1, 1], [1, 1]]))
    assert report.holds
    assert report.checked_pairs == 2

    report = border_product_descartes(DenseMatrix.identity(2))
    assert not report.holds
    assert report.counterexample['minor'] == 'upper'
    assert report.counterexample['variations'] is None

    # A(12;23) of A - lambda I is lambda - 1, a positive root
    A = DenseMatrix([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    report = border_product_descartes(A)
    assert not report.holds
    assert report.counterexample['interval'] == [1, 3]
    assert report.counterexample['variations'] == 1
    assert len(report.details['intervals']) == 3


def test_instance_rng_is_reproducible():
    a = instance_rng(7, 3).integers(0, 1000, 5)
    b = instance_rng(7, 3).integers(0, 1000, 5)
    c = instance_rng(7, 4).integers(0, 1000, 5)
    assert list(a) == list(b)
    assert list(a) != list(c)


def test_search_zero_budget():
    assert search_interior_counterexample(GenConfig(n=3), 0) is None


def test_search_is_deterministic():
    config = GenConfig(seed=11, n=3, magnitude=5, target='stp')
    first, second = [], []
    hit_1 = search_interior_counterexample(config, 4, records=first)
    hit_2 = search_interior_counterexample(config, 4, records=second)

    assert first == second
    assert 1 <= len(first) <= 4
    assert [r['index'] for r in first] == list(range(len(first)))
    assert not any(r['border_failure'] for r in first)
    assert (hit_1 is None) == (hit_2 is None)
    if hit_1 is not None:
        assert (hit_1.index, hit_1.r, hit_1.j) == \
            (hit_2.index, hit_2.r, hit_2.j)


def test_search_workers_match_sequential():
    config = GenConfig(seed=5, n=3, magnitude=5, target='stp')
    sequential, parallel = [], []
    search_interior_counterexample(config, 4, records=sequential,
                                   chunk_size=2)
    search_interior_counterexample(config, 4, workers=2, records=parallel,
                                   chunk_size=2)
    assert sequential == parallel


def test_search_hit_is_interior():
    config = GenConfig(seed=2, n=4, magnitude=5, target='sk')
    records = []
    hit = search_interior_counterexample(config, 3, records=records)
    if hit is not None:
        assert hit.r in (2, 3)
        assert hit.index == records[-1]['index']
        assert records[-1]['status'] == 'hit'
    else:
        assert all(r['status'] != 'hit' for r in records)


@pytest.mark.parametrize('seed', range(100))
def test_generated_sk_matrices(seed):
    A = generate(GenConfig(seed=seed, n=4, magnitude=5, target='sk'))
    assert is_sk(A)[0]
    assert verify_tau(A, strict=True).holds
    assert verify_weak_interlacing(A).holds
    assert verify_theorem10(A).holds
    assert border_product_descartes(A).holds

    report = verify_theorem9(A, zigzag_first=True)
    assert report.holds
    assert not report.details['vacuous']


@pytest.mark.parametrize('seed', range(100))
def test_generated_sjsk_matrices(seed):
    A = generate(GenConfig(seed=seed, n=4, magnitude=5, target='sjsk'))
    assert is_sjsk(A)[0]
    assert verify_tau(A, strict=True).holds
    assert verify_weak_interlacing(A).holds


def test_sjsk_examples_tau_strict(example2, example3):
    assert verify_tau(example3, strict=True).holds
    assert verify_tau(example2, strict=True).holds
    assert verify_weak_interlacing(example3).holds


TAU_TARGETS = ('stp', 'sk', 'sjsk', 'arbitrary')
TAU_CASES = [(target, seed, n) for target in TAU_TARGETS
             for seed in range(3) for n in (2, 3, 4, 5)]
TAU_CASES += [('stp', 0, 6), ('sk', 1, 6)]


@pytest.mark.parametrize('target,seed,n', TAU_CASES)
def test_tau_covering_pairs_agree_with_all_pairs(target, seed, n):
    A = generate(GenConfig(seed=seed, n=n, magnitude=5, target=target))
    for strict in (False, True):
        covering = verify_tau(A, strict=strict)
        every = verify_tau(A, strict=strict, all_pairs=True)
        assert covering.holds == every.holds
        if covering.holds:
            assert covering.checked_pairs <= every.checked_pairs


def _kotelyansky_cases():
    cases = [('example1', fixtures.EXAMPLE_1),
             ('example1-zigzag', zigzag(fixtures.EXAMPLE_1)),
             ('identity', DenseMatrix.identity(3))]
    for seed in range(10):
        A = generate(GenConfig(seed=seed, n=4, magnitude=5, target='sk'))
        cases.append(('sk-{}'.format(seed), zigzag(A)))
        B = generate(GenConfig(seed=seed, n=4, magnitude=5,
                               target='positive'))
        cases.append(('positive-{}'.format(seed), B))
    return cases


@pytest.mark.parametrize('name,A', _kotelyansky_cases())
def test_kotelyansky_hypothesis_agrees_with_grid(name, A):
    alpha, beta = choose_alpha_beta(A, nonnegative=True)
    holds, _ = check_kotelyansky_hypothesis(A, alpha, beta)
    grid = [grid_sign_sampler(p, alpha, beta, points=1000)[0]
            for _, p in kotelyansky_products(A)]
    # exact positivity on the interval implies positivity on the grid,
    # a nonpositive grid point refutes it
    if holds:
        assert all(grid)
    if not all(grid):
        assert not holds
