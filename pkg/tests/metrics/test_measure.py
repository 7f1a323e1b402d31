import numpy as np
import pytest

from morphocube.metrics import measure
from morphocube.schema import Grid
from tests.util import checkerboard


def test_measure_all_open_grid():
    point = measure(Grid.empty(20, 20), label="empty")

    assert point.label == "empty"
    assert point.coordinates() == (0.0, 1.0, 1.0)


def test_measure_hull_mode():
    cells = np.zeros((5, 5), dtype=np.uint8)
    cells[2, 2] = 1

    point = measure(Grid(cells=cells), density_mode="hull", label="tiny", population=120, category="proto-urban")

    assert point.De == 1.0
    assert point.population == 120
    assert point.category == "proto-urban"


def test_measure_checkerboard():
    point = measure(checkerboard(8, 8))

    assert point.De == 0.5
    assert point["De"] == 0.5
    assert 0.0 <= point.iPe <= 1.0
    assert point.I > 0.9


def test_measure_rejects_unknown_density_mode():
    with pytest.raises(ValueError):
        measure(Grid.empty(8, 8), density_mode="local")
