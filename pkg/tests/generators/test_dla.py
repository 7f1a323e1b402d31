import pytest

from morphocube.generators import GenerationError, gen_dla
from morphocube.metrics import box_counting_dimension
from morphocube.schema import GenSpec
from tests.util import flood_fill_components


def test_single_particle_is_the_center_seed():
    result = gen_dla(GenSpec.square("dla", 101, particles=1))

    assert result.placed == 1
    assert result.completed
    assert result.grid.built_count == 1
    assert result.grid.cells[50, 50] == 1


def test_cluster_is_connected_and_complete():
    result = gen_dla(GenSpec.square("dla", 101, particles=300, seed=11))

    assert result.completed
    assert result.placed == 300
    assert result.grid.built_count == 300
    assert len(flood_fill_components(result.grid.cells == 1)) == 1


def test_dla_is_deterministic_per_seed():
    spec = GenSpec.square("dla", 81, particles=200, seed=5)

    assert gen_dla(spec).grid == gen_dla(spec).grid
    assert gen_dla(spec).grid != gen_dla(spec.model_copy(update={"seed": 6})).grid


def test_dla_halts_when_launch_circle_leaves_grid(caplog):
    with caplog.at_level("WARNING"):
        result = gen_dla(GenSpec.square("dla", 21, particles=400, seed=2))

    assert result.halted == "launch-circle"
    assert not result.completed
    assert result.placed < 400
    assert result.grid.built_count == result.placed
    assert "grid edge" in caplog.text


def test_dla_budget_checks():
    with pytest.raises(GenerationError):
        gen_dla(GenSpec.square("dla", 10, particles=0))

    with pytest.raises(GenerationError):
        gen_dla(GenSpec.square("dla", 10, particles=101))


@pytest.mark.slow
def test_dla_is_fractal():
    result = gen_dla(GenSpec.square("dla", 1000, particles=20_000, seed=1984))

    assert result.completed
    assert 1.5 <= box_counting_dimension(result.grid) <= 1.9
