"""
    The three worked 4 x 4 examples of the Kotelyansky hierarchy with
    their printed compound matrices, as exact rationals

    EXAMPLE_1: SK but not STP (A(12;34) = -0.2)
    EXAMPLE_2: STJS, positive, third compound SJS with J = {1,2,3}
    EXAMPLE_3: SJSK, third compound SJS with J = {1,2}
"""

from interlacekit.common.matrix import DenseMatrix


def _matrix(rows):
    return DenseMatrix([[str(v) for v in row] for row in rows])


EXAMPLE_1 = _matrix([
    ['3', '2', '1', '0.6'],
    ['2', '3', '2', '1'],
    ['1', '2', '3', '2'],
    ['0.6', '1', '2', '3']])

EXAMPLE_1_COMPOUND_2 = _matrix([
    ['5', '4', '1.8', '1', '0.2', '-0.2'],
    ['4', '8', '5.4', '4', '2.8', '0.2'],
    ['1.8', '5.4', '8.64', '3', '5.4', '1.8'],
    ['1', '4', '3', '5', '4', '1'],
    ['0.2', '2.8', '5.4', '4', '8', '4'],
    ['-0.2', '0.2', '1.8', '1', '4', '5']])

EXAMPLE_1_COMPOUND_3 = _matrix([
    ['8', '6.6', '2.4', '1'],
    ['6.6', '13.32', '8.28', '2.4'],
    ['2.4', '8.28', '13.32', '6.6'],
    ['1', '2.4', '6.6', '8']])

EXAMPLE_1_DET = '12.6'

EXAMPLE_2 = _matrix([
    ['5.6', '1.2', '0.7', '0.5'],
    ['6.6', '6.2', '4.1', '8.1'],
    ['4.4', '4.4', '3.5', '8'],
    ['1', '3.8', '3.4', '9']])

EXAMPLE_2_COMPOUND_2 = _matrix([
    ['26.8', '18.34', '42.06', '0.58', '6.62', '3.62'],
    ['19.36', '16.52', '42.6', '1.12', '7.4', '3.85'],
    ['20.08', '18.34', '49.9', '1.42', '8.9', '4.6'],
    ['1.76', '5.06', '17.16', '3.66', '13.96', '4.45'],
    ['18.88', '18.34', '51.3', '5.5', '25.02', '9.36'],
    ['12.32', '11.46', '31.6', '1.66', '9.2', '4.3']])

EXAMPLE_2_COMPOUND_3 = _matrix([
    ['15.656', '58.464', '15.438', '-2.602'],
    ['22.008', '87.992', '25.676', '-3.532'],
    ['4.168', '19.76', '7.69', '-0.45'],
    ['-9.584', '-35.408', '-8.354', '2.386']])

EXAMPLE_2_DET = '3.3928'

EXAMPLE_3 = _matrix([
    ['7', '8', '7', '3'],
    ['4.5', '8', '4', '4'],
    ['3.5', '3', '9', '4'],
    ['2.5', '5.5', '8', '7']])

EXAMPLE_3_COMPOUND_2 = _matrix([
    ['20', '-3.5', '14.5', '-24', '8', '16'],
    ['-7', '38.5', '17.5', '51', '23', '1'],
    ['18.5', '38.5', '41.5', '25.5', '39.5', '25'],
    ['-14.5', '26.5', '4', '60', '20', '-20'],
    ['4.75', '26', '21.5', '42', '34', '-4'],
    ['11.75', '5.5', '14.5', '-25.5', '-1', '31']])

EXAMPLE_3_COMPOUND_3 = _matrix([
    ['106.5', '64.5', '-88.5', '-120'],
    ['119.25', '80.25', '-100.5', '-144'],
    ['-140.25', '-87.75', '132', '178.5'],
    ['-111.75', '-73.5', '103.5', '150']])

# second compounds of the 3 x 3 principal submatrices
EXAMPLE_3_SUBCOMPOUNDS = {
    (1, 2, 3): _matrix([['20', '-3.5', '-24'],
                        ['-7', '38.5', '51'],
                        ['-14.5', '26.5', '60']]),
    (1, 2, 4): _matrix([['20', '14.5', '8'],
                        ['18.5', '41.5', '39.5'],
                        ['4.75', '21.5', '34']]),
    (1, 3, 4): _matrix([['38.5', '17.5', '1'],
                        ['38.5', '41.5', '25'],
                        ['5.5', '14.5', '31']]),
    (2, 3, 4): _matrix([['60', '20', '-20'],
                        ['42', '34', '-4'],
                        ['-25.5', '-1', '31']])}

EXAMPLE_3_DET = '42.75'

EXAMPLES = {'example1': EXAMPLE_1, 'example2': EXAMPLE_2,
            'example3': EXAMPLE_3}
