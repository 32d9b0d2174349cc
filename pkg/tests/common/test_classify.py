import itertools

import numpy as np
import pytest

from fractions import Fraction

from interlacekit.common import fixtures
from interlacekit.common.classify import (classify_all, is_js, is_jsk,
                                          is_k, is_p_matrix, is_positive,
                                          is_sjsk, is_sk, is_stjs, is_stp,
                                          is_tjs, is_tp, js_brute_force,
                                          proposition1_closure_suite,
                                          sign_symmetric_form,
                                          verify_lemma1_witness,
                                          verify_observation_characterizations)
from interlacekit.common.errors import ClassPreconditionError, DimensionError
from interlacekit.common.gen import (GenConfig, conjugate, gen_positive,
                                     gen_stp, generate, random_permutation,
                                     random_rational_matrix,
                                     random_sign_diagonal)
from interlacekit.common.matrix import (DenseMatrix, compound, index_sets,
                                        minor, permutation_matrix,
                                        schur_complement)


def _brute_force_sk(A):
    """ every principal and almost principal minor, no shortcuts """
    n = A.rows
    for k in range(1, n + 1):
        for s in itertools.combinations(range(1, n + 1), k):
            if minor(A, s, s) <= 0:
                return False
    for k in range(2, n + 1):
        for s in itertools.combinations(range(1, n + 1), k):
            for i, j in itertools.permutations(s, 2):
                rows = [x for x in s if x != i]
                cols = [x for x in s if x != j]
                if minor(A, rows, cols) <= 0:
                    return False
    return True


def test_example1_is_sk_not_stp(example1):
    assert is_sk(example1)[0]
    assert is_k(example1)[0]
    assert is_p_matrix(example1)[0]

    holds, witness = is_stp(example1)
    assert not holds
    assert witness.rows == (1, 2)
    assert witness.cols == (3, 4)
    assert witness.value == Fraction(-1, 5)
    assert witness.confirms(example1)

    assert not is_tp(example1)[0]


def test_example2_is_stjs(example2):
    holds, patterns = is_stjs(example2)
    assert holds
    assert len(patterns) == 4
    assert patterns[1].J == tuple(range(1, 7))
    assert patterns[2].J == (1, 2, 3)


def test_example3_is_sjsk(example3):
    assert is_sjsk(example3)[0]
    assert is_jsk(example3)[0]

    holds, pattern = is_js(compound(example3, 3), strict=True)
    assert holds
    assert pattern.J == (1, 2)

    sub = fixtures.EXAMPLE_3_SUBCOMPOUNDS[(1, 2, 3)]
    holds, pattern = is_js(sub, strict=True)
    assert holds
    assert pattern.J == (1,)
    assert is_positive(sign_symmetric_form(sub, pattern))[0]


def test_identity_boundaries():
    I = DenseMatrix.identity(2)
    assert is_k(I)[0]

    holds, witness = is_sk(I)
    assert not holds
    assert witness.rows == (1,)
    assert witness.cols == (2,)
    assert witness.value == 0

    assert is_tp(I)[0]
    assert not is_stp(I)[0]
    assert is_tjs(I)[0]
    assert not is_stjs(I)[0]


def test_exhaustive_collects_every_violation():
    holds, witnesses = is_sk(DenseMatrix.identity(3), exhaustive=True)
    assert not holds
    assert len(witnesses) == 12
    assert all(w.value == 0 for w in witnesses)

    assert is_k(DenseMatrix.identity(3), exhaustive=True) == (True, [])


def test_not_k_witness_is_determinant():
    A = DenseMatrix([[1, 2], [3, 1]])
    holds, witness = is_k(A)
    assert not holds
    assert witness.rows == (1, 2)
    assert witness.value == -5


def test_js_odd_cycle_witness():
    A = DenseMatrix([[1, -1], [1, 1]])
    holds, witness = is_js(A)
    assert not holds
    assert witness.kind == 'cycle'
    assert witness.cycle == [(1, 2), (2, 1)]
    assert witness.confirms(A)

    holds, witness = is_js(DenseMatrix([[-1, 0], [0, 1]]))
    assert not holds
    assert witness.cycle == [(1, 1)]


def test_sjs_needs_nonzero_entries():
    A = DenseMatrix([[1, 0], [0, 1]])
    assert is_js(A)[0]
    holds, witness = is_js(A, strict=True)
    assert not holds
    assert witness.requirement == 'nonzero'


@pytest.mark.parametrize('seed', range(8))
def test_js_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    config = GenConfig(seed=seed, n=4, magnitude=5)
    positive = gen_positive(config, rng)
    signs = random_sign_diagonal(rng, 4)
    D = DenseMatrix.diagonal(signs)
    A = D @ positive @ D

    holds, pattern = is_js(A, strict=True)
    assert holds
    expected = [i + 1 for i in range(4) if signs[i] == signs[0]]
    assert list(pattern.J) == expected
    assert js_brute_force(A, strict=True)[1].J == pattern.J

    # a random matrix almost never is, both methods must agree
    B = random_rational_matrix(config, rng)
    assert is_js(B)[0] == js_brute_force(B)[0]


@pytest.mark.parametrize('seed', range(5))
def test_sk_matches_brute_force(seed):
    config = GenConfig(seed=seed, n=4, magnitude=4, max_denominator=3)
    A = random_rational_matrix(config)
    assert is_sk(A)[0] == _brute_force_sk(A)
    S = gen_stp(config)
    assert is_sk(S)[0] and _brute_force_sk(S)


def test_observation_characterizations(example1, example3):
    for A in (example1, example3, DenseMatrix.identity(3),
              DenseMatrix([[1, 2], [3, 1]])):
        agree, details = verify_observation_characterizations(A)
        assert agree

    agree, details = verify_observation_characterizations(example1)
    assert details['SK']['direct']
    assert details['SK']['characterization']


def test_proposition1_closures(example1):
    report = proposition1_closure_suite(example1)
    assert report.class_name == 'SK'
    assert report.holds
    names = [name for name, _, _ in report.entries]
    assert 'schur-complements' in names
    assert 'alternating-inverse' in names

    report = proposition1_closure_suite(DenseMatrix.identity(3))
    assert report.class_name == 'K'
    assert report.holds

    with pytest.raises(ClassPreconditionError):
        proposition1_closure_suite(DenseMatrix([[1, 2], [3, 1]]))


def test_lemma1_witness():
    B = gen_stp(GenConfig(seed=3, n=3))
    sigma = [2, 3, 1]
    signs = [1, -1, 1]
    D = DenseMatrix.diagonal(signs)
    P = permutation_matrix(sigma)
    A = D @ P @ B @ P.transpose() @ D

    assert verify_lemma1_witness(A, signs, sigma) == (True, None)

    holds, witness = verify_lemma1_witness(A, [1, 1, 1], sigma)
    assert not holds
    assert witness.kind == 'entry'

    with pytest.raises(DimensionError):
        verify_lemma1_witness(A, [1, 2, 1], sigma)


def test_classify_all_examples(example1, example2, example3):
    report = classify_all(example1, matrix_id='example1')
    assert report['SK'] and not report['STP']
    assert report.witnesses['STP'].value == Fraction(-1, 5)
    assert report['JS'] and report['SJS']
    assert report.to_dict()['verdicts']['STP'] == 'non-member'

    assert classify_all(example2)['STJS']

    report = classify_all(example3)
    assert report['SJSK']
    assert report['P']
    assert report.findings == []


def test_classify_all_rectangular():
    A = DenseMatrix([[1, 2, 3], [4, 5, 6]])
    report = classify_all(A)
    assert report['positive']
    assert report['P'] is None
    assert report['SK'] is None
    assert report.to_dict()['verdicts']['SJSK'] == 'not-applicable'

    with pytest.raises(DimensionError):
        is_sk(A)


def test_k_hierarchy_on_principal_subsets(example1):
    # every principal submatrix of an SK matrix is SK
    for k in range(1, 5):
        for alpha in index_sets(4, k):
            assert is_sk(example1.submatrix(alpha, alpha))[0]


def _schur_complements_are_sk(A):
    n = A.size
    for k in range(1, n):
        for alpha in index_sets(n, k):
            holds, witness = is_sk(schur_complement(A, alpha))
            assert holds, (alpha, witness)


def test_schur_complements_of_example1_are_sk(example1):
    _schur_complements_are_sk(example1)
    report = proposition1_closure_suite(example1)
    assert ('schur-complements', True, None) in report.entries


@pytest.mark.parametrize('seed', range(20))
def test_schur_complements_of_generated_sk_are_sk(seed):
    A = generate(GenConfig(seed=seed, n=4, magnitude=5, target='sk'))
    _schur_complements_are_sk(A)
    assert proposition1_closure_suite(A, seed=seed).holds


@pytest.mark.parametrize('seed', range(100))
def test_generated_class_hierarchy(seed):
    stp = generate(GenConfig(seed=seed, n=4, magnitude=5, target='stp'))
    assert is_stp(stp)[0]
    assert is_sk(stp)[0]
    assert is_sjsk(stp)[0]
    assert is_stjs(stp)[0]

    sk = generate(GenConfig(seed=seed, n=4, magnitude=5, target='sk'))
    assert is_sk(sk)[0]
    assert is_sjsk(sk)[0]


@pytest.mark.parametrize('seed', range(100))
def test_sjsk_verdict_is_invariant_under_conjugation(seed):
    rng = np.random.default_rng(seed)
    signs = random_sign_diagonal(rng, 4)
    diagonal = [s * Fraction(int(rng.integers(1, 9)),
                             int(rng.integers(1, 9))) for s in signs]

    sjsk = generate(GenConfig(seed=seed, n=4, magnitude=5, target='sjsk'))
    assert is_sjsk(sjsk)[0]
    assert is_sjsk(conjugate(sjsk, random_permutation(rng, 4), diagonal))[0]

    example = conjugate(fixtures.EXAMPLE_1, random_permutation(rng, 4),
                        random_sign_diagonal(rng, 4))
    assert is_sjsk(example)[0]

    A = random_rational_matrix(GenConfig(seed=seed, n=3, magnitude=5,
                                         target='arbitrary'))
    B = conjugate(A, random_permutation(rng, 3), diagonal[:3])
    assert is_sjsk(A)[0] == is_sjsk(B)[0]
    assert is_jsk(A)[0] == is_jsk(B)[0]
