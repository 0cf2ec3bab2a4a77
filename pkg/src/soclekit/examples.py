"""Named graphs and ideals from the worked examples, used by tests, scripts and fixtures."""
from __future__ import annotations

from .graphs import SimpleGraph, edge_ideal
from .monomial import MonomialIdeal, Ring
from .polymatroid import VeroneseType

# two triangles sharing vertex 3, with pendant edges at 1, 2, 4, 5
BOWTIE_PENDANT_EDGES = ((1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (1, 7), (2, 6), (4, 8), (5, 9))

JOINED_TRIANGLE_NAMES = ("x1", "x2", "x3", "y1", "y2", "y3", "z")


def bowtie_with_pendants() -> SimpleGraph:
    return SimpleGraph(9, BOWTIE_PENDANT_EDGES)


def joined_triangles_graph() -> SimpleGraph:
    """Triangles x1x2x3 and y1y2y3 joined by the path x1 - z - y1."""
    return SimpleGraph(7, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 7), (4, 7)))


def joined_triangles_ideal() -> MonomialIdeal:
    return MonomialIdeal(Ring(7, JOINED_TRIANGLE_NAMES), edge_ideal(joined_triangles_graph()).gens)


def triangle_ideal(names=("x1", "x2", "x3")) -> MonomialIdeal:
    return MonomialIdeal(Ring(3, tuple(names)), ((1, 1, 0), (1, 0, 1), (0, 1, 1)))


def c5_with_chord() -> SimpleGraph:
    """5-cycle plus the chord x1x3."""
    return SimpleGraph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)))


def c5_with_pendant_path() -> SimpleGraph:
    """5-cycle with the path 1 - 6 - 7 attached at vertex 1."""
    return SimpleGraph(7, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (6, 7)))


def late_socle_ideal(t: int) -> MonomialIdeal:
    """(x^t, x y^(t-2) z, y^(t-1) z) in K[x, y, z]."""
    return MonomialIdeal(Ring(3, ("x", "y", "z")), ((t, 0, 0), (1, t - 2, 1), (0, t - 1, 1)))


VERONESE_3312_6 = VeroneseType((3, 3, 1, 2), 6)
SQUAREFREE_QUADRICS = VeroneseType((1, 1, 1), 2)
