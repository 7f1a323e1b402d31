"""
Standalone SVG scatter plots of morphospace projections.
"""

import logging
import math
from typing import Dict, List, Optional, Tuple

from jinja2 import Template

from morphocube.schema.layout import AXES, Axis, Category, MorphoDataset, MorphoPoint
from morphocube.utils.util import PathOrUrl, write_bytes_to_path

logger = logging.getLogger(__name__)

CANVAS = 480
MARGIN = 60
PLOT = CANVAS - 2 * MARGIN
TICKS = (0.0, 0.25, 0.5, 0.75, 1.0)
LEGEND_COLUMNS = 3
LEGEND_SPACING = 120

DEFAULT_RADIUS = 3.0
MIN_RADIUS = 1.0
# A settlement of one million people gets a radius of 10 units
POPULATION_RADIUS_SCALE = 0.01

UNCATEGORIZED = "uncategorized"

CATEGORY_COLORS: Dict[str, str] = {
    "city": "#d62728",
    "proto-urban": "#ff7f0e",
    "non-urban": "#2ca02c",
    "theoretical": "#1f77b4",
    UNCATEGORIZED: "#7f7f7f",
}

AXIS_TITLES: Dict[Axis, str] = {
    "De": "Density (De)",
    "iPe": "Permeability (iPe)",
    "I": "Information (I)",
}

PAIRWISE_AXES: Tuple[Tuple[Axis, Axis], ...] = (("De", "iPe"), ("De", "I"), ("iPe", "I"))

SCATTER_TEMPLATE = Template(
    """<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{{ canvas }}" height="{{ canvas }}" viewBox="0 0 {{ canvas }} {{ canvas }}">
<rect x="0" y="0" width="{{ canvas }}" height="{{ canvas }}" fill="#ffffff"/>
<g id="axes" stroke="#000000" stroke-width="1" fill="none">
<rect x="{{ left }}" y="{{ top }}" width="{{ plot }}" height="{{ plot }}"/>
{%- for tick in ticks %}
<line class="x-tick" x1="{{ tick.x }}" y1="{{ bottom }}" x2="{{ tick.x }}" y2="{{ bottom + 5 }}"/>
<line class="y-tick" x1="{{ left - 5 }}" y1="{{ tick.y }}" x2="{{ left }}" y2="{{ tick.y }}"/>
{%- endfor %}
</g>
<g id="tick-labels" font-family="sans-serif" font-size="11" fill="#000000">
{%- for tick in ticks %}
<text class="x-tick-label" x="{{ tick.x }}" y="{{ bottom + 18 }}" text-anchor="middle">{{ tick.label }}</text>
<text class="y-tick-label" x="{{ left - 8 }}" y="{{ tick.y }}" text-anchor="end" dominant-baseline="middle">{{ tick.label }}</text>
{%- endfor %}
</g>
<g id="axis-titles" font-family="sans-serif" font-size="13" fill="#000000">
<text id="x-title" x="{{ center }}" y="{{ canvas - 15 }}" text-anchor="middle">{{ x_title }}</text>
<text id="y-title" x="15" y="{{ center }}" text-anchor="middle" transform="rotate(-90 15 {{ center }})">{{ y_title }}</text>
</g>
<g id="points" stroke="#000000" stroke-width="0.5" fill-opacity="0.8">
{%- for circle in circles %}
<circle cx="{{ circle.cx }}" cy="{{ circle.cy }}" r="{{ circle.r }}" fill="{{ circle.color }}" data-category="{{ circle.category }}"><title>{{ circle.label }}</title></circle>
{%- endfor %}
</g>
<g id="legend" font-family="sans-serif" font-size="11">
{%- for entry in legend %}
<circle cx="{{ entry.x }}" cy="{{ entry.y }}" r="4" fill="{{ entry.color }}"/>
<text x="{{ entry.x + 8 }}" y="{{ entry.y }}" dominant-baseline="middle" fill="#000000">{{ entry.name }}</text>
{%- endfor %}
</g>
</svg>
""",
    autoescape=True,
    keep_trailing_newline=True,
)


class AxisError(ValueError):
    pass


def _number(value: float) -> str:
    return f"{value:.3f}"


def plot_x(value: float) -> float:
    return MARGIN + value * PLOT


def plot_y(value: float) -> float:
    return MARGIN + (1.0 - value) * PLOT


def point_radius(population: Optional[int]) -> float:
    """Dot area grows with population; points without one get a fixed radius"""
    if population is None:
        return DEFAULT_RADIUS

    return max(MIN_RADIUS, POPULATION_RADIUS_SCALE * math.sqrt(population))


def _category_name(category: Optional[Category]) -> str:
    return category if category is not None else UNCATEGORIZED


def _circle(point: MorphoPoint, x_axis: Axis, y_axis: Axis) -> dict:
    category = _category_name(point.category)

    return {
        "cx": _number(plot_x(point[x_axis])),
        "cy": _number(plot_y(point[y_axis])),
        "r": _number(point_radius(point.population)),
        "color": CATEGORY_COLORS[category],
        "category": category,
        "label": point.label,
    }


def _legend(dataset: MorphoDataset) -> List[dict]:
    present = {_category_name(point.category) for point in dataset.points}
    names = [name for name in CATEGORY_COLORS if name in present]

    # Rows of LEGEND_COLUMNS entries across the top margin, clear of the plot area
    return [
        {
            "name": name,
            "color": CATEGORY_COLORS[name],
            "x": MARGIN + LEGEND_SPACING * (i % LEGEND_COLUMNS),
            "y": 20 + 18 * (i // LEGEND_COLUMNS),
        }
        for i, name in enumerate(names)
    ]


def render_svg_scatter(dataset: MorphoDataset, x_axis: Axis, y_axis: Axis) -> str:
    if x_axis not in AXES or y_axis not in AXES:
        raise AxisError(f"Axes must be among {', '.join(AXES)}")

    if x_axis == y_axis:
        raise AxisError(f"Can't plot {x_axis} against itself")

    ticks = [{"x": _number(plot_x(t)), "y": _number(plot_y(t)), "label": f"{t:.2f}"} for t in TICKS]

    return SCATTER_TEMPLATE.render(
        canvas=CANVAS,
        plot=PLOT,
        left=MARGIN,
        top=MARGIN,
        bottom=MARGIN + PLOT,
        center=CANVAS // 2,
        ticks=ticks,
        x_title=AXIS_TITLES[x_axis],
        y_title=AXIS_TITLES[y_axis],
        circles=[_circle(point, x_axis, y_axis) for point in dataset.points],
        legend=_legend(dataset),
    )


def emit_svg_scatter(dataset: MorphoDataset, x_axis: Axis, y_axis: Axis, path: PathOrUrl, **kwargs) -> PathOrUrl:
    """
    Writes a scatter plot of two morphospace axes, both spanning [0, 1].

    Circles are colored by category and sized by population when it is known. Identical
    datasets always produce identical bytes.

    Raises:
        AxisError: The axes are the same or not morphospace axes.
    """
    svg = render_svg_scatter(dataset, x_axis, y_axis)
    write_bytes_to_path(path, svg.encode("utf-8"), **kwargs)

    logger.info("Wrote %s-%s scatter of %d points to %s", x_axis, y_axis, len(dataset), path)

    return path


def emit_pairwise_svgs(dataset: MorphoDataset, directory: PathOrUrl, **kwargs) -> List[str]:
    """Writes ``De-iPe.svg``, ``De-I.svg`` and ``iPe-I.svg`` into ``directory``"""
    paths = []

    for x_axis, y_axis in PAIRWISE_AXES:
        path = f"{str(directory).rstrip('/')}/{x_axis}-{y_axis}.svg"
        paths.append(str(emit_svg_scatter(dataset, x_axis, y_axis, path, **kwargs)))

    return paths
