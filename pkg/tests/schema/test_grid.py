import numpy as np
import pytest

from morphocube.schema import Grid


def test_grid_construction():
    grid = Grid.from_rows([[0, 1, 1], [0, 0, 1]])

    assert (grid.width, grid.height) == (3, 2)
    assert grid.shape == (2, 3)
    assert grid.total_cells == 6
    assert grid.built_count == 3
    assert grid.open_count == 3
    assert grid.cells.dtype == np.uint8
    assert grid.to_rows() == [[0, 1, 1], [0, 0, 1]]

    assert Grid.from_array(np.array([[True, False]])) == Grid.from_rows([[1, 0]])


def test_grid_is_immutable():
    source = np.array([[0, 1], [1, 0]])
    grid = Grid.from_array(source)

    # The grid owns a copy of the caller's buffer
    source[0, 0] = 1
    assert grid.cells[0, 0] == 0

    with pytest.raises(ValueError):
        grid.cells[0, 0] = 1


def test_homogeneous_grids():
    assert Grid.empty(4, 3).is_homogeneous
    assert Grid.full(4, 3).is_homogeneous
    assert Grid.full(4, 3).built_count == 12
    assert not Grid.from_rows([[0, 1]]).is_homogeneous


def test_grid_equality_and_hash():
    a = Grid.from_rows([[0, 1], [1, 0]])
    b = Grid.from_rows([[0, 1], [1, 0]])

    assert a == b
    assert hash(a) == hash(b)
    assert a != Grid.from_rows([[0, 1, 1, 0]])
    assert a != "grid"


@pytest.mark.parametrize("cells", [[[0, 2]], [0, 1], np.zeros((0, 3))])
def test_invalid_grids(cells):
    with pytest.raises(ValueError):
        Grid(cells=cells)
