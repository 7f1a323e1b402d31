import numpy as np
import pytest

from morphocube.schema import Block, BandSpec, MorphoDataset, MorphoPoint, WindowHistogram


def test_morpho_point_utilities():
    point = MorphoPoint(label="x", De=0.25, iPe=0.5, I=0.75)

    assert point.coordinates() == (0.25, 0.5, 0.75)
    assert point["iPe"] == 0.5

    with pytest.raises(KeyError):
        point["Pe"]

    # Test out of bounds
    with pytest.raises(ValueError):
        MorphoPoint(label="x", De=1.5, iPe=0.5, I=0.5)

    with pytest.raises(ValueError):
        MorphoPoint(label="x", De=0.5, iPe=0.5, I=0.5, population=-1)

    with pytest.raises(ValueError):
        MorphoPoint(label="x", De=0.5, iPe=0.5, I=0.5, category="village")


def test_band_spec_utilities():
    band = BandSpec(name="mid", De=(0.25, 0.75), iPe=(0.25, 0.75), I=(0.25, 0.75))

    assert MorphoPoint(label="in", De=0.5, iPe=0.25, I=0.75) in band
    assert MorphoPoint(label="out", De=0.5, iPe=0.2, I=0.75) not in band

    # Test overlaps, touching counts
    assert band.overlaps(BandSpec(name="touch", De=(0.75, 1), iPe=(0, 1), I=(0, 1)))
    assert not band.overlaps(BandSpec(name="apart", De=(0.8, 1), iPe=(0, 1), I=(0, 1)))


def test_dataset_utilities():
    dataset = MorphoDataset()
    dataset.add(MorphoPoint(label="a", De=0.1, iPe=0.2, I=0.3), "a.pgm")
    dataset.add(MorphoPoint(label="b", De=0.4, iPe=0.5, I=0.6))

    assert len(dataset) == 2
    assert dataset[1].label == "b"
    assert list(dataset.items())[0][1] == "a.pgm"
    assert dataset.coordinates().tolist() == [[0.1, 0.2, 0.3], [0.4, 0.5, 0.6]]
    assert MorphoDataset().coordinates().shape == (0, 3)

    # Test unique labels
    with pytest.raises(ValueError):
        dataset.add(MorphoPoint(label="a", De=0.1, iPe=0.2, I=0.3))

    with pytest.raises(ValueError):
        MorphoDataset(points=[dataset[0], dataset[0]], provenance=["", ""])

    with pytest.raises(ValueError):
        MorphoDataset(points=[dataset[0]], provenance=[])


def test_window_histogram_utilities():
    counts = np.zeros(1 << 16, dtype=np.int64)
    counts[[3, 7]] = [5, 2]

    histogram = WindowHistogram(counts=counts, windows=9)

    assert histogram.total == 7
    assert histogram.skipped == 2
    assert histogram.distinct == len(histogram) == 2
    assert histogram[3] == 5
    assert histogram.to_dict() == {3: 5, 7: 2}
    assert histogram.probabilities() == {3: 5 / 7, 7: 2 / 7}

    # Test the validation
    counts[0] = 1
    with pytest.raises(ValueError):
        WindowHistogram(counts=counts, windows=10)

    with pytest.raises(ValueError):
        WindowHistogram(counts=np.zeros(16), windows=0)

    with pytest.raises(ValueError):
        WindowHistogram(counts=np.zeros(1 << 16), windows=-1)

    counts[0] = 0
    with pytest.raises(ValueError):
        WindowHistogram(counts=counts, windows=3)


def test_block_perimeter_bound():
    Block(id=1, area=1, perimeter=4, cells=np.array([[0, 0]]))

    with pytest.raises(ValueError):
        Block(id=1, area=1, perimeter=5, cells=np.array([[0, 0]]))
