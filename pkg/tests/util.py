"""
Independent brute-force oracles the production code is checked against. They favour
obviousness over speed and share no code with the package.
"""

import math
from collections import Counter, deque
from typing import Dict, List, Tuple

import numpy as np

from morphocube.schema.grid import Grid

NEIGHBOURS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def random_grid(seed: int, width: int, height: int, p: float = 0.5) -> Grid:
    rng = np.random.default_rng(seed)
    return Grid(cells=rng.random((height, width)) < p)


def checkerboard(width: int, height: int) -> Grid:
    rows = np.arange(height)[:, None]
    cols = np.arange(width)[None, :]
    return Grid(cells=(rows + cols) % 2 == 0)


def brute_force_pattern_counts(grid: Grid) -> Counter:
    """Counts of every non-homogeneous 4x4 window, keyed by its raw bytes"""
    cells = grid.cells
    counts: Counter = Counter()

    for r in range(grid.height - 3):
        for c in range(grid.width - 3):
            window = cells[r : r + 4, c : c + 4]
            total = int(window.sum())
            if 0 < total < 16:
                counts[window.tobytes()] += 1

    return counts


def brute_force_entropy(grid: Grid) -> float:
    counts = brute_force_pattern_counts(grid)
    total = sum(counts.values())

    if total == 0:
        return 0.0

    return -math.fsum((n / total) * math.log2(n / total) for n in counts.values())


def flood_fill_components(mask: np.ndarray) -> List[List[Tuple[int, int]]]:
    """4-connected components of the True cells, found by breadth-first search"""
    height, width = mask.shape
    seen = np.zeros_like(mask, dtype=bool)
    components = []

    for r in range(height):
        for c in range(width):
            if not mask[r, c] or seen[r, c]:
                continue

            component = []
            queue = deque([(r, c)])
            seen[r, c] = True

            while queue:
                y, x = queue.popleft()
                component.append((y, x))

                for dy, dx in NEIGHBOURS:
                    ny, nx = y + dy, x + dx
                    if 0 <= ny < height and 0 <= nx < width and mask[ny, nx] and not seen[ny, nx]:
                        seen[ny, nx] = True
                        queue.append((ny, nx))

            components.append(component)

    return components


def edge_count_blocks(grid: Grid) -> List[Dict[str, int]]:
    """Area and interior built/open edge count of every block, in scan order"""
    cells = grid.cells
    blocks = []

    for component in flood_fill_components(cells == 1):
        perimeter = 0

        for y, x in component:
            for dy, dx in NEIGHBOURS:
                ny, nx = y + dy, x + dx
                if 0 <= ny < grid.height and 0 <= nx < grid.width and cells[ny, nx] == 0:
                    perimeter += 1

        blocks.append({"area": len(component), "perimeter": perimeter})

    return blocks


def brute_force_permeability(grid: Grid) -> float:
    open_area = grid.total_cells - grid.built_count
    weighted = sum(block["area"] * block["perimeter"] for block in edge_count_blocks(grid))

    if open_area == 0:
        return 0.0

    if weighted == 0:
        return 1.0

    return min(1.0, max(0.0, 1.0 - (weighted / open_area) / (4 * (grid.total_cells - 1))))


def brute_force_box_count(grid: Grid, size: int) -> int:
    occupied = set()

    for r, c in zip(*np.nonzero(grid.cells)):
        occupied.add((int(r) // size, int(c) // size))

    return len(occupied)
