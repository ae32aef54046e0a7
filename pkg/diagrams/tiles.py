from django.db import models


class Tile(models.TextChoices):
    """
    Cell contents. The value doubles as the render character.
    """

    BLANK = ".", "Blank"
    HORIZONTAL = "-", "Horizontal"
    CROSS = "+", "Cross"
    ELBOW_WN = "J", "ElbowWN"
    ELBOW_SE = "r", "ElbowSE"
    BUMP = "b", "Bump"
    MARKED_SE = "R", "MarkedSE"


class DiagramKind(models.TextChoices):
    PD = "PD", "pipe dream"
    MVPD = "MVPD", "marked vertical-less pipe dream"
    BVPD = "BVPD", "bumpless vertical-less pipe dream"


class Side(models.TextChoices):
    NORTH = "N", "North"
    EAST = "E", "East"
    SOUTH = "S", "South"
    WEST = "W", "West"


class Region(models.TextChoices):
    FULL = "full", "inside the staircase"
    ANTI_DIAGONAL = "anti", "anti-diagonal"
    OUTSIDE = "outside", "beyond the anti-diagonal"


WEST_IN = frozenset({Tile.HORIZONTAL, Tile.CROSS, Tile.ELBOW_WN, Tile.BUMP})
SOUTH_IN = frozenset({Tile.CROSS, Tile.ELBOW_SE, Tile.BUMP, Tile.MARKED_SE})
NORTH_OUT = frozenset({Tile.CROSS, Tile.ELBOW_WN, Tile.BUMP})
EAST_OUT = frozenset({Tile.HORIZONTAL, Tile.CROSS, Tile.ELBOW_SE, Tile.BUMP, Tile.MARKED_SE})

ALPHABET = {
    DiagramKind.PD: frozenset({Tile.CROSS, Tile.BUMP, Tile.ELBOW_WN, Tile.BLANK}),
    DiagramKind.MVPD: frozenset(Tile),
    DiagramKind.BVPD: frozenset(
        {Tile.BLANK, Tile.HORIZONTAL, Tile.CROSS, Tile.ELBOW_WN, Tile.ELBOW_SE}
    ),
}

REGION_TILES = {
    (DiagramKind.PD, Region.FULL): frozenset({Tile.CROSS, Tile.BUMP}),
    (DiagramKind.PD, Region.ANTI_DIAGONAL): frozenset({Tile.ELBOW_WN}),
    (DiagramKind.MVPD, Region.FULL): ALPHABET[DiagramKind.MVPD],
    (DiagramKind.MVPD, Region.ANTI_DIAGONAL): frozenset({Tile.ELBOW_WN, Tile.BLANK}),
    (DiagramKind.BVPD, Region.FULL): ALPHABET[DiagramKind.BVPD],
    (DiagramKind.BVPD, Region.ANTI_DIAGONAL): frozenset({Tile.ELBOW_WN, Tile.BLANK}),
}


def grid_shape(kind, n):
    if kind == DiagramKind.BVPD:
        return n, n - 1
    return n, n


def region(kind, n, i, j):
    # the BVPD staircase is the MVPD one with its first column deleted
    reach = n - 1 if kind == DiagramKind.BVPD else n
    if i + j <= reach:
        return Region.FULL
    if i + j == reach + 1:
        return Region.ANTI_DIAGONAL
    return Region.OUTSIDE


def allowed_tiles(kind, n, i, j):
    where = region(kind, n, i, j)
    if where == Region.OUTSIDE:
        return frozenset({Tile.BLANK})
    return REGION_TILES[(kind, where)]


def outputs(tile, west, south, crossed):
    """
    Route the West and South labels through ``tile``.

    Returns ``(north, east, real_pair)`` where ``real_pair`` is the sorted
    label pair when the tile is a Cross whose pipes have not crossed before.
    """
    if tile == Tile.CROSS:
        pair = (west, south) if west < south else (south, west)
        if pair in crossed:
            return west, south, None
        return south, west, pair
    if tile == Tile.BUMP:
        return west, south, None
    if tile == Tile.HORIZONTAL:
        return 0, west, None
    if tile == Tile.ELBOW_WN:
        return west, 0, None
    if tile == Tile.ELBOW_SE or tile == Tile.MARKED_SE:
        return 0, south, None
    return 0, 0, None
