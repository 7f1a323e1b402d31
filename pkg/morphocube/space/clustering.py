import logging
import warnings
from typing import Dict, List

from sklearn.cluster import KMeans
from sklearn.exceptions import ConvergenceWarning

from morphocube.schema.generation import DEFAULT_SEED
from morphocube.schema.layout import MorphoDataset

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 100
TOLERANCE = 1e-9


class ClusterCountError(ValueError):
    pass


def _first_seen_labels(raw: List[int]) -> List[int]:
    """Renumbers clusters in order of their first member"""
    mapping: Dict[int, int] = {}

    for label in raw:
        mapping.setdefault(label, len(mapping))

    return [mapping[label] for label in raw]


def cluster(dataset: MorphoDataset, k: int, seed: int = DEFAULT_SEED) -> List[int]:
    """
    k-means over the (De, iPe, I) coordinates of a dataset.

    Centers are initialized k-means++ style from the seed, refined for at most 100
    iterations with a 1e-9 tolerance. Cluster ids are numbered by first appearance in the
    dataset, so point 0 is always in cluster 0.

    Args:
        dataset: The points to cluster.
        k: Number of clusters, between 1 and the number of points.
        seed: 64 bit seed of the initialization.

    Returns:
        The cluster id of every point, in dataset order.
    """
    if not 1 <= k <= len(dataset):
        raise ClusterCountError(f"k must be between 1 and {len(dataset)}, got {k}")

    model = KMeans(
        n_clusters=k,
        init="k-means++",
        n_init=1,
        max_iter=MAX_ITERATIONS,
        tol=TOLERANCE,
        random_state=seed % (1 << 32),
    )

    with warnings.catch_warnings():
        # Duplicate points can leave fewer distinct centers than k
        warnings.simplefilter("ignore", ConvergenceWarning)
        raw = model.fit_predict(dataset.coordinates())

    logger.info("Clustered %d points into %d clusters in %d iterations", len(dataset), k, model.n_iter_)

    return _first_seen_labels([int(label) for label in raw])
