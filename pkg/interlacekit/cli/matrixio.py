"""
    Reading and writing matrix files, and the JSON report document
    every sub-command prints

    Text format: one row per line, entries separated by whitespace,
    each entry a decimal literal ("0.6", "-3.3928") or "p/q". Anything
    after '#' is a comment; blank lines are skipped.

    JSON format: either a list of rows or an object with a "matrix"
    key holding one. Entries may be strings in the text syntax or JSON
    numbers.
"""

import hashlib
import json
import logging
import os

from collections import OrderedDict

from interlacekit import __version__
from interlacekit.common.errors import MatrixParseError
from interlacekit.common.exact import format_exact, to_exact
from interlacekit.common.matrix import DenseMatrix
from interlacekit.common.settings import SCHEMA_VERSION

TEXT_FORMAT = 'text'
JSON_FORMAT = 'json'


class MatrixFile:
    """
        A parsed matrix together with where it came from

        Attributes:
            path (str): the file path
            matrix (DenseMatrix): exact rational entries
            source_format (str): 'text' or 'json'
    """

    def __init__(self, path, matrix, source_format):
        self.path = path
        self.matrix = matrix
        self.source_format = source_format

    @property
    def name(self):
        return os.path.basename(self.path)

    def __repr__(self):
        return "MatrixFile({}, {}x{}, {})".format(
            self.path, self.matrix.rows, self.matrix.cols,
            self.source_format)


def _parse_entry(token, where):
    try:
        return to_exact(token)
    except (TypeError, ValueError):
        raise MatrixParseError("{}: '{}' is not a decimal or p/q "
                               "literal".format(where, token))


def _check_rectangular(rows, source):
    if not rows:
        raise MatrixParseError("{}: no matrix rows found".format(source))
    width = len(rows[0])
    for i, row in enumerate(rows, start=1):
        if len(row) != width:
            raise MatrixParseError(
                "{}: row {} has {} entries, expected {}".format(
                    source, i, len(row), width))
    return DenseMatrix(rows)


def parse_text(text, source='<text>'):
    """
        Parse the whitespace separated text format

        Args:
            text (str): file contents
            source (str): name used in error messages

        Returns:
            DenseMatrix
    """

    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        where = "{}:{}".format(source, lineno)
        rows.append([_parse_entry(token, where) for token in line.split()])
    return _check_rectangular(rows, source)


def parse_json(text, source='<json>'):
    """ Parse a JSON list of rows or an object with a "matrix" key """

    try:
        data = json.loads(text)
    except ValueError as e:
        raise MatrixParseError("{}: invalid JSON ({})".format(source, e))

    if isinstance(data, dict):
        if 'matrix' not in data:
            raise MatrixParseError("{}: JSON object has no 'matrix' "
                                   "key".format(source))
        data = data['matrix']

    if not isinstance(data, list) or \
            not all(isinstance(row, list) for row in data):
        raise MatrixParseError("{}: expected a list of rows".format(source))

    rows = []
    for i, row in enumerate(data, start=1):
        where = "{} row {}".format(source, i)
        rows.append([_parse_entry(entry, where) for entry in row])
    return _check_rectangular(rows, source)


def _looks_like_json(path, text):
    return path.lower().endswith('.json') or text.lstrip()[:1] in ('[', '{')


def read_matrix(path):
    """
        Read a matrix file in either format

        Args:
            path (str): path to the file

        Returns:
            MatrixFile

        Raises:
            MatrixParseError: unreadable file or bad contents
    """

    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise MatrixParseError("cannot read {}: {}".format(path, e.strerror))

    if _looks_like_json(path, text):
        matrix, fmt = parse_json(text, path), JSON_FORMAT
    else:
        matrix, fmt = parse_text(text, path), TEXT_FORMAT

    logging.debug("read {}x{} matrix from {} ({})".format(
        matrix.rows, matrix.cols, path, fmt))
    return MatrixFile(path, matrix, fmt)


def matrix_to_rows(A, decimal=False):
    """ entries as strings, p/q unless decimal """
    return [[format_exact(v, decimal=decimal) for v in row]
            for row in A.tolist()]


def format_text(A, decimal=False):
    """ text format with right aligned columns """

    rows = matrix_to_rows(A, decimal)
    widths = [max(len(row[j]) for row in rows) for j in range(A.cols)]
    return '\n'.join(' '.join(entry.rjust(width)
                              for entry, width in zip(row, widths))
                     for row in rows) + '\n'


def format_json(A, decimal=False):
    return json.dumps({'matrix': matrix_to_rows(A, decimal)}, indent=2) + '\n'


def write_matrix(A, path, source_format=TEXT_FORMAT, decimal=False):
    with open(path, 'w') as f:
        if source_format == JSON_FORMAT:
            f.write(format_json(A, decimal))
        else:
            f.write(format_text(A, decimal))


def input_digest(data):
    """
        SHA-256 over the canonical JSON form of data (sorted keys, no
        whitespace)
    """

    canonical = json.dumps(data, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


class ReportDocument:
    """
        Top level JSON document printed by the sub-commands

        Attributes:
            command (str): the sub-command name
            input (dict): canonical description of the input (matrix
                rows as p/q strings, or a generator config)
            payload (dict): command specific results
            timing (dict): wall clock seconds per phase; excluded from
                the digest
    """

    def __init__(self, command, input, payload=None, timing=None):
        self.command = command
        self.input = input
        self.payload = payload if payload is not None else OrderedDict()
        self.timing = timing if timing is not None else OrderedDict()

    @property
    def digest(self):
        # the path does not change what was computed
        canonical = {k: v for k, v in self.input.items() if k != 'path'}
        return input_digest({'command': self.command, 'input': canonical})

    def to_dict(self):
        return OrderedDict([('schema_version', SCHEMA_VERSION),
                            ('tool', 'interlace-kit'),
                            ('version', __version__),
                            ('command', self.command),
                            ('input_digest', self.digest),
                            ('input', self.input),
                            ('payload', self.payload),
                            ('timing', self.timing)])

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def matrix_input(matrix_file):
    """ canonical input section for a matrix read from disk """
    return OrderedDict([('path', matrix_file.path),
                        ('format', matrix_file.source_format),
                        ('matrix', matrix_to_rows(matrix_file.matrix))])
