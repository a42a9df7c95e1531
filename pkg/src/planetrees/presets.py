"""Named inputs: figure coordinate sets, choice presets, builtin trees.

The figure point sets are pinned coordinate lists (rotated into the
orientation that makes the canonical labeling the identity, so edge
lists can be read straight off the drawings). fig7 and fig8 share one
14-point set. The choice presets reproduce the drawn construction
variants; fig7/fig8 run on the exact Wheel{7} with seed angle pi/13,
whose labeling matches the drawn set but whose halving-line structure
is exact at every order.
"""
from __future__ import annotations

import math

from .errors import InvalidParameter
from .geom_core import PointSet, make_wheel
from .halving_partition import ConstructionChoices

POINT_PRESETS = ("fig2", "fig4", "fig5", "fig6", "fig7", "fig8")
CHOICES_PRESETS = {
    "fig6": ConstructionChoices(star_side="high", extend_side=("right",), line=(1, 5)),
    "fig7": ConstructionChoices(star_side="low", extend_side=("right",),
                                type4="Type1", line=(8, 12)),
    "fig8": ConstructionChoices(star_side="high", extend_side=("left",),
                                type4="Type2", line=(8, 12)),
}
# preset name -> (theorem, r)
PRESET_RUNS = {"fig6": (3, 2), "fig7": (4, 3), "fig8": (4, 3)}

# lemma6 roles in fig4: the halving line runs u to v; w1, w2 are the picks
FIG4_ROLES = {"u": 1, "v": 7, "w1": 10, "w2": 5}

_FIG4_RAW = (
    (2.5, -1.4), (1, 0), (1, 1), (-1.5, 2.5), (0, 2.2), (-0.85, 1.3),
    (-2.6, 1.7), (-1.4, 0), (-1.6, -1), (-1.5, -2.6), (0.2, -1.5), (1.15, -2.3),
)
_FIG4_LABELS = ("v0", "u", "v2", "v3", "v4", "w2", "v6", "v", "v8", "v9", "w1", "v11")
_FIG5_RAW = (
    (0.75, -1.1), (2.6, -1.5), (1.5, 2.6), (0.35, 1.2),
    (-0.75, 1.1), (-2.6, 1.5), (-1.5, -2.6), (-0.35, -1.3),
)
_FIG6_RAW = (
    (2.6, -1.5), (1.9, 0), (1.3, 0.75), (1.5, 2.6), (0, 1.9), (-0.75, 1.3),
    (-2.6, 1.5), (-1.9, 0), (-1.3, -0.75), (-1.5, -2.6), (0, -1.9), (0.75, -1.3),
)
_FIG7_RAW = (
    (0.22, -1.5), (1.44, -2.06), (2, -1.05), (1.3, 0), (1.55, 0.82), (1.44, 2.06),
    (0, 1.24), (-0.62, 1.63), (-0.75, 0.85), (-2.44, 0.6), (-1.57, -0.5),
    (-1.88, -1.65), (-0.24, -1.4), (0.0, 0.0),
)
_FIG7_LABELS = tuple(f"v{i}" for i in range(13)) + ("w",)


def _rotated(raw, degrees: float) -> tuple[tuple[float, float], ...]:
    a = math.radians(degrees)
    c, s = math.cos(a), math.sin(a)
    return tuple((x * c - y * s, x * s + y * c) for x, y in raw)


def figure_pointset(name: str) -> PointSet:
    """Pinned coordinates of a drawn figure, canonical labeling = identity."""
    if name == "fig2":
        return make_wheel(3, 2.5)
    if name == "fig4":
        return PointSet(_rotated(_FIG4_RAW, 75), "general", _FIG4_LABELS)
    if name == "fig5":
        return PointSet(_rotated(_FIG5_RAW, 75), "general")
    if name == "fig6":
        return PointSet(_rotated(_FIG6_RAW, 31), "general")
    if name in ("fig7", "fig8"):
        return PointSet(_rotated(_FIG7_RAW, 82.66), "general", _FIG7_LABELS)
    raise InvalidParameter(f"unknown figure preset {name!r}; have {POINT_PRESETS}")


def construction_pointset(name: str) -> PointSet:
    """Point set the named choices preset is meant to run on."""
    if name == "fig6":
        return figure_pointset("fig6")
    if name in ("fig7", "fig8"):
        return make_wheel(7, seed_angle=math.pi / 13)
    raise InvalidParameter(f"no construction preset {name!r}; have {sorted(CHOICES_PRESETS)}")


def builtin_tree(name: str, n: int) -> tuple[tuple[int, int], ...]:
    """Abstract input trees for the wheel builder, addressable from the CLI."""
    if name == "fig2i":
        if n != 3:
            raise InvalidParameter("builtin:fig2i is a tree on 6 vertices (n=3)")
        return ((0, 4), (1, 4), (1, 5), (2, 3), (2, 4))
    if name == "doublestar":
        if n < 2:
            raise InvalidParameter(f"n must be >= 2, got {n}")
        edges = [(0, 1)]
        edges += [(0, i) for i in range(2, n + 1)]
        edges += [(1, i) for i in range(n + 1, 2 * n)]
        return tuple(edges)
    raise InvalidParameter(f"unknown builtin tree {name!r}; have fig2i, doublestar")
