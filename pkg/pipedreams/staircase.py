"""
Fillings of the staircase region.

``sweep`` walks every Cross/Bump choice of a pipe dream grid and reads
its top edge. ``fill`` is the backtracking generator shared by the PD,
MVPD and BVPD engines: cells are visited in trace order and a branch is
cut as soon as a pipe overshoots the column it must exit from.
"""
import logging
from concurrent.futures import ProcessPoolExecutor

from diagrams.tiles import DiagramKind, Region, Tile, grid_shape, outputs, region
from diagrams.tracing import propagate

logger = logging.getLogger(__name__)


def choice_cells(n):
    return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n)


def pd_tiles(n, bits):
    """Bit k of ``bits`` set puts a Cross on the k-th choice cell (row-major)."""
    grid = [
        [Tile.ELBOW_WN if i + j == n + 1 else Tile.BLANK for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    for k, (i, j) in enumerate(choice_cells(n)):
        grid[i - 1][j - 1] = Tile.CROSS if bits >> k & 1 else Tile.BUMP
    return tuple(tuple(row) for row in grid)


def scan(n, start, stop):
    """(bits, w) for fillings ``start <= bits < stop``; w is the inverse of the top reading."""
    found = []
    for bits in range(start, stop):
        top = propagate(pd_tiles(n, bits), n, record=False)[0]
        w = [0] * n
        for column, label in enumerate(top, start=1):
            w[label - 1] = column
        found.append((bits, tuple(w)))
    return found


def sweep(n, workers=1):
    total = 1 << len(choice_cells(n))
    if workers <= 1 or total < 1024:
        return scan(n, 0, total)
    step = -(-total // workers)
    bounds = [(start, min(start + step, total)) for start in range(0, total, step)]
    logger.info("sweeping %s fillings of n=%s over %s workers", total, n, len(bounds))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(scan, [n] * len(bounds), *zip(*bounds))
        return [pair for chunk in chunks for pair in chunk]


def _candidates(kind, n, i, j, west, south):
    where = region(kind, n, i, j)
    if where == Region.OUTSIDE:
        return () if west or south else (Tile.BLANK,)
    if where == Region.ANTI_DIAGONAL:
        if south:
            return ()
        if west:
            return (Tile.ELBOW_WN,)
        return () if kind == DiagramKind.PD else (Tile.BLANK,)
    if kind == DiagramKind.PD:
        return (Tile.CROSS, Tile.BUMP) if west and south else ()
    if west and south:
        return (Tile.CROSS, Tile.BUMP) if kind == DiagramKind.MVPD else (Tile.CROSS,)
    if west:
        return (Tile.HORIZONTAL, Tile.ELBOW_WN)
    if south:
        return (Tile.ELBOW_SE,)
    return (Tile.BLANK,)


def fill(kind, n, top):
    """
    Yield every tile grid of ``kind`` whose top reading is ``top``.

    Pipes enter at the rows listed in ``top``. MVPD grids come out
    unmarked; marking is left to the caller.
    """
    rows, cols = grid_shape(kind, n)
    top = tuple(top)
    target = {label: column for column, label in enumerate(top, start=1) if label}
    grid = [[Tile.BLANK] * cols for _ in range(rows)]
    below = [0] * cols
    crossed = set()
    order = [(i, j) for i in range(rows, 0, -1) for j in range(1, cols + 1)]

    def place(k, west):
        if k == len(order):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = order[k]
        if j == 1:
            west = i if i in target else 0
        south = below[j - 1]
        for tile in _candidates(kind, n, i, j, west, south):
            north, east, pair = outputs(tile, west, south, crossed)
            if east and (j == cols or j + 1 > target[east]):
                continue
            if north and j > target[north]:
                continue
            if i == 1 and north != top[j - 1]:
                continue
            grid[i - 1][j - 1] = tile
            below[j - 1] = north
            if pair is not None:
                crossed.add(pair)
            yield from place(k + 1, east)
            if pair is not None:
                crossed.discard(pair)
            below[j - 1] = south
            grid[i - 1][j - 1] = Tile.BLANK

    if cols == 0:
        yield tuple(() for _ in range(rows))
        return
    yield from place(0, 0)
