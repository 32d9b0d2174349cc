import pytest

from interlacekit.common import fixtures
from interlacekit.common.matrix import DenseMatrix


@pytest.fixture
def example1():
    return fixtures.EXAMPLE_1


@pytest.fixture
def example2():
    return fixtures.EXAMPLE_2


@pytest.fixture
def example3():
    return fixtures.EXAMPLE_3


@pytest.fixture
def identity2():
    return DenseMatrix.identity(2)


@pytest.fixture
def example_files(tmp_path):
    """ the three examples written as text matrix files """

    paths = {}
    for name, A in fixtures.EXAMPLES.items():
        path = tmp_path / '{}.txt'.format(name)
        rows = [' '.join(str(v) for v in row) for row in A.tolist()]
        path.write_text('# {}\n'.format(name) + '\n'.join(rows) + '\n')
        paths[name] = str(path)
    return paths
