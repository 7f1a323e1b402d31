import numpy as np
import pytest

from morphocube.blocks import (
    EmptySettlementError,
    block_statistics,
    convex_hull,
    convex_hull_area,
    extract_blocks,
    shoelace_area,
)
from morphocube.schema import Grid
from tests.util import edge_count_blocks, random_grid

SAMPLE = Grid.from_rows(
    [
        [1, 1, 0, 0],
        [1, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ]
)


def test_extract_blocks_areas_and_interior_perimeters():
    blocks = extract_blocks(SAMPLE)

    assert [block.id for block in blocks] == [1, 2]
    assert [block.area for block in blocks] == [4, 1]

    # Edges on the grid boundary are not perimeter
    assert [block.perimeter for block in blocks] == [4, 3]

    assert sorted(map(tuple, blocks[0].cells.tolist())) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert blocks[1].cells.tolist() == [[2, 3]]


def test_extract_blocks_empty_and_full():
    assert extract_blocks(Grid.empty(5, 5)) == []

    (block,) = extract_blocks(Grid.full(5, 5))
    assert block.area == 25
    assert block.perimeter == 0


def test_diagonal_cells_are_separate_blocks():
    grid = Grid.from_rows([[1, 0], [0, 1]])

    assert [block.area for block in extract_blocks(grid)] == [1, 1]


def test_extract_blocks_partition_built_cells():
    for seed in range(10):
        grid = random_grid(seed, 23, 17, p=0.55)
        blocks = extract_blocks(grid)

        covered = np.concatenate([block.cells for block in blocks])
        assert len(covered) == grid.built_count
        assert len({tuple(cell) for cell in covered.tolist()}) == grid.built_count
        assert all(grid.cells[r, c] == 1 for r, c in covered.tolist())


def test_extract_blocks_matches_flood_fill_oracle():
    for seed in range(20):
        grid = random_grid(100 + seed, 19, 21, p=0.5)

        expected = sorted((b["area"], b["perimeter"]) for b in edge_count_blocks(grid))
        actual = sorted((b.area, b.perimeter) for b in extract_blocks(grid))

        assert actual == expected


def test_block_statistics():
    stats = block_statistics(SAMPLE)

    assert stats.count == 2
    assert stats.weighted_perimeter == 4 * 4 + 3 * 1
    assert stats.built_area == 5

    assert block_statistics(Grid.empty(4, 4)).count == 0


def test_convex_hull_and_shoelace():
    square = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0)]

    hull = convex_hull(square)

    assert sorted(hull) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert shoelace_area(hull) == 4.0


def test_convex_hull_area_single_cell_is_one():
    cells = np.zeros((10, 10), dtype=np.uint8)
    cells[4, 6] = 1

    assert convex_hull_area(Grid(cells=cells)) == 1.0
    assert convex_hull_area(Grid.full(3, 5)) == 15.0


def test_convex_hull_area_of_sample():
    # Bounding rectangle of 12 minus two corner triangles of 2 and 1.5
    assert convex_hull_area(SAMPLE) == 8.5


def test_convex_hull_area_of_empty_grid():
    with pytest.raises(EmptySettlementError, match="empty settlement"):
        convex_hull_area(Grid.empty(4, 4))
