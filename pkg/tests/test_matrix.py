import json

import pytest
from gmpy2 import mpq

from gdinv.matrix import Matrix, MatrixFormatError, block, blockdiag
from gdinv.scalar import gaussian


def test_product_and_power():
    A = Matrix([[1, 1], [0, 1]])
    assert A @ A == Matrix([[1, 2], [0, 1]])
    assert A ** 3 == Matrix([[1, 3], [0, 1]])
    assert A ** 0 == Matrix.identity(2)


def test_shape_errors():
    with pytest.raises(ValueError):
        Matrix([[1, 2]]) @ Matrix([[1, 2]])
    with pytest.raises(ValueError):
        Matrix([[1, 2]]) + Matrix([[1], [2]])
    with pytest.raises(MatrixFormatError):
        Matrix([[1, 2], [3]])


def test_conjugate_transpose():
    M = Matrix([[gaussian(1, 2), 3], [0, gaussian(0, -1)]])
    assert M.H == Matrix([[gaussian(1, -2), 0], [3, gaussian(0, 1)]])
    assert M.T.T == M
    assert not M.is_real and Matrix([[1]]).is_real


def test_empty_shapes():
    E = Matrix.zeros(2, 0)
    assert (E @ Matrix.zeros(0, 3)) == Matrix.zeros(2, 3)
    assert blockdiag(Matrix.zeros(0, 0), Matrix([[5]])) == Matrix([[5]])


def test_block_assembly():
    I = Matrix.identity(1)
    M = block([[I, Matrix([[2]])], [Matrix([[3]]), I]])
    assert M == Matrix([[1, 2], [3, 1]])
    assert M.submatrix(slice(0, 1), slice(1, 2)) == Matrix([[2]])


def test_json_roundtrip_exact():
    M = Matrix([[mpq(1, 3), gaussian(0, 1)], [-2, gaussian(mpq(-1, 2), 5)]])
    assert Matrix.from_json(M.to_json()) == M


def test_json_integer_entries_accepted():
    M = Matrix.from_json(json.dumps({"rows": 1, "cols": 2, "entries": [[1, "2/4"]]}))
    assert M == Matrix([[1, mpq(1, 2)]])


@pytest.mark.parametrize(
    "doc",
    [
        "[1, 2]",
        '{"rows": 1, "cols": 2, "entries": [["1"]]}',
        '{"rows": 1, "cols": 1, "entries": [["0.5"]]}',
        '{"rows": -1, "cols": 1, "entries": []}',
        '{"rows": 1, "cols": 1}',
    ],
)
def test_json_rejects_malformed(doc):
    with pytest.raises(MatrixFormatError):
        Matrix.from_json(doc)


def test_hash_and_equality():
    assert hash(Matrix([[1, 0]])) == hash(Matrix([[mpq(2, 2), 0]]))
    assert Matrix([[1]]) != Matrix([[1, 0]])
