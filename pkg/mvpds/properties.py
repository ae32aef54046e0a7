"""
Structural facts every MVPD of a permutation is expected to satisfy.

Each predicate returns ``True`` when the fact holds so sweeps can collect
the diagrams where it does not.
"""
from diagrams.tiles import Side, Tile


def every_pipe_has_horizontal(diagram, result):
    """Each pipe of the MVPD runs through at least one Horizontal tile."""
    for steps in result.pipe_paths.values():
        if not any(diagram.tile(*step.cell) == Tile.HORIZONTAL for step in steps):
            return False
    return True


def first_column_is_plain(diagram):
    return all(
        diagram.tile(i, 1) in (Tile.BLANK, Tile.HORIZONTAL) for i in range(1, diagram.rows + 1)
    )


def no_right_turn_before_real_crossing(diagram, result):
    """No cell routing South to East sits directly West of a real crossing."""
    for crossing in result.crossings:
        if not crossing.real:
            continue
        i, j = crossing.cell
        if j == 1:
            continue
        if any(entry == Side.SOUTH and exit_side == Side.EAST for _label, entry, exit_side in result.arcs_at(i, j - 1)):
            return False
    return True
