"""
Label propagation through a grid of tiles.

Rows are processed bottom to top and each row left to right, so every cell
sees its West and South labels before it is routed. The set of pairs that
have already crossed is the only state carried between cells: a Cross whose
pipes meet for the first time is a real crossing (labels pass straight
through), otherwise it is fake and the labels bounce.
"""
import itertools
import logging
from dataclasses import dataclass, field

from django.utils.translation import gettext_lazy as _

from permutations.permutation import Code, CodeRole

from .exceptions import MalformedDiagram
from .tiles import SOUTH_IN, WEST_IN, Side, Tile, outputs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathStep:
    cell: tuple
    entry: str
    exit: str


@dataclass(frozen=True)
class Crossing:
    cell: tuple
    west: int
    south: int
    real: bool

    @property
    def pair(self):
        return (min(self.west, self.south), max(self.west, self.south))


@dataclass(frozen=True)
class TraceResult:
    top_reading: tuple
    code: Code
    pipe_paths: dict
    crossings: tuple
    crossed_pairs: frozenset
    arcs: dict = field(repr=False)
    row_entries: dict = field(repr=False)

    def arcs_at(self, i, j):
        return self.arcs.get((i, j), ())

    def label_leaving(self, i, j, side):
        for label, _entry, exit_side in self.arcs_at(i, j):
            if exit_side == side:
                return label
        return 0

    def label_entering(self, i, j, side):
        for label, entry, _exit in self.arcs_at(i, j):
            if entry == side:
                return label
        return 0

    def crossing_at(self, i, j):
        for crossing in self.crossings:
            if crossing.cell == (i, j):
                return crossing
        return None

    def have_crossed(self, a, b):
        return (min(a, b), max(a, b)) in self.crossed_pairs


def _arcs(tile, west, south, real):
    W, E, N, S = Side.WEST, Side.EAST, Side.NORTH, Side.SOUTH
    if tile == Tile.CROSS:
        if real:
            return ((west, W, E), (south, S, N))
        return ((west, W, N), (south, S, E))
    if tile == Tile.BUMP:
        return ((west, W, N), (south, S, E))
    if tile == Tile.HORIZONTAL:
        return ((west, W, E),)
    if tile == Tile.ELBOW_WN:
        return ((west, W, N),)
    if tile in (Tile.ELBOW_SE, Tile.MARKED_SE):
        return ((south, S, E),)
    return ()


def propagate(tiles, cols, record=True):
    """
    Push labels through ``tiles`` and return
    ``(top_reading, crossed, crossings, arcs, row_entries)``.

    With ``record=False`` only the top reading and crossed pairs are
    computed; the enumeration sweep relies on that fast path.
    """
    below = [0] * cols
    crossed = set()
    crossings, arcs, row_entries = [], {}, {}
    for i in range(len(tiles), 0, -1):
        row = tiles[i - 1]
        if record:
            row_entries[i] = tuple(label for label in below if label)
        west = 0
        for j in range(1, cols + 1):
            tile = row[j - 1]
            if j == 1 and tile in WEST_IN:
                west = i
            south = below[j - 1]
            if bool(west) != (tile in WEST_IN) or bool(south) != (tile in SOUTH_IN):
                raise MalformedDiagram(
                    _("Tile %(tile)s at (%(i)s,%(j)s) does not match its neighbours.")
                    % {"tile": tile.value, "i": i, "j": j}
                )
            north, east, pair = outputs(tile, west, south, crossed)
            if pair is not None:
                crossed.add(pair)
            if record:
                if tile == Tile.CROSS:
                    crossings.append(Crossing((i, j), west, south, pair is not None))
                cell_arcs = _arcs(tile, west, south, pair is not None)
                if cell_arcs:
                    arcs[(i, j)] = cell_arcs
            below[j - 1] = north
            west = east
        if west:
            raise MalformedDiagram(
                _("Pipe %(label)s leaves row %(i)s through the right edge.")
                % {"label": west, "i": i}
            )
    return tuple(below), crossed, crossings, arcs, row_entries


def trace(diagram):
    top, crossed, crossings, arcs, row_entries = propagate(diagram.tiles, diagram.cols)
    paths = {}
    # trace order is compatible with every pipe's own order of cells
    for i in range(diagram.rows, 0, -1):
        for j in range(1, diagram.cols + 1):
            for label, entry, exit_side in arcs.get((i, j), ()):
                paths.setdefault(label, []).append(PathStep((i, j), entry, exit_side))
    return TraceResult(
        top_reading=top,
        code=Code(top, diagram.n, CodeRole.COLUMN_TO_ROW),
        pipe_paths={label: tuple(steps) for label, steps in sorted(paths.items())},
        crossings=tuple(crossings),
        crossed_pairs=frozenset(crossed),
        arcs=arcs,
        row_entries=row_entries,
    )


def column_to_row_code(diagram):
    return trace(diagram).code


def max_rule_holds(result):
    """Every real crossing sends the larger label out of the top."""
    return all(crossing.south > crossing.west for crossing in result.crossings if crossing.real)


def three_pipe_rule_holds(result):
    """
    For pipes a, b, c entering a row from below in that order: if {a, b}
    have not crossed but {a, c} have, then {b, c} have crossed too.
    """
    for i, labels in result.row_entries.items():
        crossed = {crossing.pair for crossing in result.crossings if crossing.real and crossing.cell[0] > i}
        for a, b, c in itertools.combinations(labels, 3):
            ab, ac, bc = tuple(sorted((a, b))), tuple(sorted((a, c))), tuple(sorted((b, c)))
            if ab not in crossed and ac in crossed and bc not in crossed:
                logger.debug("pipes %s %s %s break the three pipe rule in row %s", a, b, c, i)
                return False
    return True


def paths_are_monotone(result):
    """Each pipe moves only North or East and leaves through the top edge."""
    for steps in result.pipe_paths.values():
        for step, following in zip(steps, steps[1:]):
            (i, j), (k, l) = step.cell, following.cell
            if step.exit == Side.NORTH and ((k, l) != (i - 1, j) or following.entry != Side.SOUTH):
                return False
            if step.exit == Side.EAST and ((k, l) != (i, j + 1) or following.entry != Side.WEST):
                return False
        last = steps[-1]
        if last.exit != Side.NORTH or last.cell[0] != 1:
            return False
    return True
