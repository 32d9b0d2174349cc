import json
import os

import pandas as pd

from interlacekit.cli.main import main
from interlacekit.cli.matrixio import parse_json
from interlacekit.cli.search import search_main
from interlacekit.common.classify import is_stp


def _search(capsys, *options):
    code = main(['search', '-q'] + list(options))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_interior_search(capsys):
    code, document = _search(capsys, '--seed', '3', '--budget', '2',
                             '--n', '3', '--magnitude', '5')
    assert code == 0
    payload = document['payload']
    assert payload['target'] == 'interior-counterexample'
    assert payload['outcome'] in ('hit', 'none')
    assert 1 <= payload['instances_checked'] <= 2
    assert payload['border_failures'] == 0
    assert document['input']['config']['target'] == 'stp'
    if payload['outcome'] == 'hit':
        assert payload['hit']['reverified']
    else:
        assert payload['hit'] is None


def test_generator_target_is_reproducible(capsys):
    options = ('--target', 'stp', '--seed', '8', '--budget', '2', '--n', '3')
    code, first = _search(capsys, *options)
    assert code == 0
    _, second = _search(capsys, *options)

    assert first['payload'] == second['payload']
    assert first['input_digest'] == second['input_digest']
    instances = first['payload']['instances']
    assert [i['index'] for i in instances] == [0, 1]
    for instance in instances:
        A = parse_json(json.dumps(instance['matrix']))
        assert is_stp(A)[0]

    _, other = _search(capsys, '--target', 'stp', '--seed', '9', '--budget',
                       '2', '--n', '3')
    assert other['input_digest'] != first['input_digest']


def test_search_output_dir(capsys, tmp_path):
    code, document = _search(capsys, '--target', 'positive', '--seed', '1',
                             '--budget', '3', '--n', '2', '--output-dir',
                             str(tmp_path))
    assert code == 0

    with open(os.path.join(str(tmp_path), 'search_config.json')) as f:
        config = json.load(f)
    assert config['budget'] == 3
    assert config['config']['seed'] == 1

    log = pd.read_csv(os.path.join(str(tmp_path), 'search_log.csv'))
    assert list(log['index']) == [0, 1, 2]
    assert set(log['status']) == {'generated'}

    with open(os.path.join(str(tmp_path), 'search_hits.json')) as f:
        hits = json.load(f)
    assert hits == document['payload']['instances']


def test_search_errors(capsys, tmp_path):
    code, _ = _search(capsys, '--seed', '1', '--budget', '0')
    assert code == 2
    code, _ = _search(capsys, '--seed', '1', '--budget', '2', '--workers',
                      '0')
    assert code == 2
    code, _ = _search(capsys, '--seed', '1', '--budget', '1', '--n', '2',
                      '--target', 'stp', '--output-dir',
                      str(tmp_path / 'missing'))
    assert code == 2
    code, _ = _search(capsys, '--budget', '2')
    assert code == 2
    code, _ = _search(capsys, '--seed', '1', '--budget', '2', '--target',
                      'hermitian')
    assert code == 2


def test_search_entry_point(capsys):
    assert search_main(['-q', '--target', 'arbitrary', '--seed', '0',
                        '--budget', '1', '--n', '2']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['payload']['outcome'] == 'generated'
