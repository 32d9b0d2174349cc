import json

import pytest

from interlacekit.cli.main import main
from interlacekit.cli.verify import verify_main


def _verify(capsys, path, *options):
    code = main(['verify', '-q', path] + list(options))
    captured = capsys.readouterr()
    document = json.loads(captured.out) if captured.out else None
    return code, document


@pytest.fixture
def write_matrix(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def test_theorem10_example1(capsys, example_files):
    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'theorem10')
    assert code == 0
    payload = document['payload']
    assert payload['holds']
    result = payload['result']
    assert [c['r'] for c in result['details']['border']] == [1, 4]
    assert document['input']['property'] == 'theorem10'


def test_theorem10_single_index(capsys, example_files):
    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'theorem10', '--r', '4')
    assert code == 0
    details = document['payload']['result']['details']
    assert details['r'] == 4
    assert details['border_index']
    assert len(details['chain']['chain']) == 7
    assert document['input']['r'] == 4

    code, _ = _verify(capsys, example_files['example1'],
                      '--property', 'theorem10', '--r', '9')
    assert code == 2


def test_theorem10_requires_sk(capsys, write_matrix):
    path = write_matrix('notk.txt', "1 2\n3 1\n")
    code, document = _verify(capsys, path, '--property', 'theorem10')
    assert code == 2
    assert document is None


def test_tau_identity(capsys, write_matrix):
    path = write_matrix('identity.txt', "1 0\n0 1\n")
    code, _ = _verify(capsys, path, '--property', 'tau')
    assert code == 0

    code, document = _verify(capsys, path, '--property', 'tau-strict')
    assert code == 1
    counterexample = document['payload']['result']['counterexample']
    assert counterexample['alpha'] == [1, 2]
    assert counterexample['beta'] == [2]


def test_tau_all_pairs(capsys, example_files):
    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'tau', '--all-pairs')
    assert code == 0
    assert document['payload']['result']['checked_pairs'] == 50
    assert document['input']['all_pairs']


def test_weak_violation(capsys, write_matrix):
    path = write_matrix('diag.txt', "1 0\n0 2\n")
    code, document = _verify(capsys, path, '--property', 'weak')
    assert code == 1
    counterexample = document['payload']['result']['counterexample']
    assert counterexample['k'] == 1
    assert counterexample['inequality'] == '4'


def test_kotelyansky_needs_zigzag(capsys, example_files):
    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'kotelyansky')
    assert code == 1

    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'kotelyansky', '--zigzag')
    assert code == 0
    details = document['payload']['result']['details']
    assert details['alpha'] == '0'
    assert details['zigzag']
    assert len(details['products']) == 3


def test_kotelyansky_bad_interval(capsys, example_files):
    code, _ = _verify(capsys, example_files['example1'],
                      '--property', 'kotelyansky', '--alpha', '2',
                      '--beta', '1')
    assert code == 2
    code, _ = _verify(capsys, example_files['example1'],
                      '--property', 'kotelyansky', '--alpha', 'one',
                      '--beta', '3')
    assert code == 2


def test_theorem9(capsys, example_files):
    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'theorem9')
    assert code == 0
    assert document['payload']['result']['details']['vacuous']

    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'theorem9', '--zigzag')
    assert code == 0
    assert not document['payload']['result']['details']['vacuous']


def test_identities(capsys, example_files):
    code, document = _verify(capsys, example_files['example2'],
                             '--property', 'identities')
    assert code == 0
    payload = document['payload']['result']
    assert payload['failed'] == []
    assert payload['identities']['inverse-adjugate'] is True


def test_perron(capsys, example_files, write_matrix):
    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'perron')
    assert code == 0
    result = document['payload']['result']
    assert result['perron']['vector_positive']
    assert result['submatrix_radius_bound']
    assert result['lower_bound']

    path = write_matrix('identity.txt', "1 0\n0 1\n")
    code, _ = _verify(capsys, path, '--property', 'perron')
    assert code == 2


def test_proposition1(capsys, example_files, write_matrix):
    code, document = _verify(capsys, example_files['example1'],
                             '--property', 'proposition1', '--seed', '3')
    assert code == 0
    assert document['payload']['result']['class'] == 'SK'

    path = write_matrix('notk.txt', "1 2\n3 1\n")
    code, _ = _verify(capsys, path, '--property', 'proposition1')
    assert code == 2


def test_border_descartes(capsys, write_matrix, example_files):
    code, _ = _verify(capsys, example_files['example1'], '--property',
                      'border-descartes')
    assert code == 0

    path = write_matrix('three.txt', "2 1 1\n1 2 1\n1 1 2\n")
    code, document = _verify(capsys, path, '--property', 'border-descartes')
    assert code == 1
    assert document['payload']['result']['counterexample']['interval'] == \
        [1, 3]


def test_verify_input_errors(capsys, write_matrix, example_files):
    path = write_matrix('wide.txt', "1 2 3\n4 5 6\n")
    code, _ = _verify(capsys, path, '--property', 'tau')
    assert code == 2

    code, _ = _verify(capsys, example_files['example1'],
                      '--property', 'spectral-gap')
    assert code == 2

    with pytest.raises(SystemExit):
        verify_main(['-q', example_files['example1']])


def test_verify_entry_point(capsys, example_files):
    assert verify_main(['-q', example_files['example2'], '-p',
                        'identities']) == 0
    assert json.loads(capsys.readouterr().out)['command'] == 'verify'
