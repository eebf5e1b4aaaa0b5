import pytest

from univfn.tables import FinTable, ShapeError


def test_row_major_layout():
    T = FinTable.from_nested([[1, 2, 3], [4, 5, 6]])
    assert T.dims == (2, 3)
    assert T.values == (1, 2, 3, 4, 5, 6)
    assert T[1, 0] == 4
    assert list(T.cells())[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]


def test_from_function():
    T = FinTable.from_function((2, 2, 2), lambda x, y, z: 4 * x + 2 * y + z)
    assert T.values == tuple(range(8))


@pytest.mark.parametrize(
    "dims,values",
    [((2, 2), [0, 0, 0]), ((0,), []), ((2,), [1, -1]), ((1,), [1.0]), ((1,), [True])],
)
def test_invalid_tables(dims, values):
    with pytest.raises(ValueError):
        FinTable(dims, values)


def test_shape_error_is_value_error():
    assert issubclass(ShapeError, ValueError)


def test_bad_coordinates():
    T = FinTable((2, 2), [0] * 4)
    with pytest.raises(IndexError):
        T[2, 0]
    with pytest.raises(ShapeError):
        T[0]


def test_zero_dimensional_constant():
    T = FinTable((), [9])
    assert T[()] == 9 and list(T.cells()) == [()]
