"""
Marked vertical-less pipe dreams.

``phi`` deletes the logical paths of the pipes that are left-to-right
maxima of w^-1 from a pipe dream of w; what is left of each cell decides
its tile. The inverse is a cell-local rewrite back onto the staircase.
"""
import itertools
import logging
from dataclasses import dataclass

from django.utils.translation import gettext_lazy as _

from diagrams.diagram import Diagram, pipe_has_horizontal_below, validate
from diagrams.exceptions import InvariantBreach, MalformedDiagram
from diagrams.tiles import DiagramKind, Region, Side, Tile, region
from diagrams.tracing import trace
from pipedreams.bounds import check_bound
from pipedreams.engine import pd_set, sign
from pipedreams.staircase import fill
from polynomials.polynomial import signed_accumulate, weight_factor_product, weight_monomial

logger = logging.getLogger(__name__)

WEIGHTY = (Tile.HORIZONTAL, Tile.CROSS, Tile.MARKED_SE)

W, E, N, S = Side.WEST, Side.EAST, Side.NORTH, Side.SOUTH


@dataclass(frozen=True)
class MvpdSet:
    w: object
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def as_set(self):
        return frozenset(self.members)


@dataclass(frozen=True)
class Upgrade:
    cell: tuple
    tile: str
    op: str
    diagram: Diagram


def _require_kind(diagram, kind):
    if diagram.kind != kind:
        raise MalformedDiagram(
            _("Expected a %(expected)s, got a %(kind)s.")
            % {"expected": kind.value, "kind": diagram.kind.value}
        )


def is_member(diagram, w):
    """M is a valid MVPD whose column-to-row code is alpha'(w)."""
    if diagram.kind != DiagramKind.MVPD or diagram.n != w.n:
        return False
    report = validate(diagram)
    return report.valid and report.trace.code.same_entries(w.alpha_prime())


def require_member(diagram, w):
    _require_kind(diagram, DiagramKind.MVPD)
    if not is_member(diagram, w):
        raise MalformedDiagram(
            _("The diagram is not an MVPD of %(w)s.") % {"w": w}
        )


def _reduce(tile, kept, cell, pd):
    if tile == Tile.CROSS:
        if len(kept) == 2:
            return Tile.CROSS
        if kept == {(W, E)}:
            return Tile.HORIZONTAL
        if kept == {(S, E)}:
            return Tile.MARKED_SE
        raise InvariantBreach(
            _("Cross at %(cell)s keeps %(kept)s after removing the maxima pipes.")
            % {"cell": cell, "kept": sorted(kept)},
            pd,
        )
    if tile == Tile.BUMP:
        if len(kept) == 2:
            return Tile.BUMP
        if kept == {(W, N)}:
            return Tile.ELBOW_WN
        if kept == {(S, E)}:
            return Tile.ELBOW_SE
        return Tile.BLANK
    if tile == Tile.ELBOW_WN and kept:
        return Tile.ELBOW_WN
    return Tile.BLANK


def phi(pd, w):
    _require_kind(pd, DiagramKind.PD)
    result = trace(pd)
    if not result.code.same_entries(w.inverse().one_line):
        raise MalformedDiagram(_("The pipe dream does not belong to %(w)s.") % {"w": w})
    removed = w.inverse().lr_maxima()
    changes = {}
    for i, j in pd.cells():
        kept = {(entry, exit_side) for label, entry, exit_side in result.arcs_at(i, j) if label not in removed}
        changes[(i, j)] = _reduce(pd.tile(i, j), kept, (i, j), pd)
    mvpd = pd.replace(changes, kind=DiagramKind.MVPD)
    if not is_member(mvpd, w):
        raise InvariantBreach(_("phi left MVPD(%(w)s).") % {"w": w}, pd, mvpd)
    return mvpd


def phi_inverse(mvpd, w):
    require_member(mvpd, w)
    changes = {}
    for i, j in mvpd.cells():
        where = region(DiagramKind.PD, w.n, i, j)
        if where == Region.FULL:
            weighty = mvpd.tile(i, j) in WEIGHTY
            changes[(i, j)] = Tile.CROSS if weighty else Tile.BUMP
        elif where == Region.ANTI_DIAGONAL:
            changes[(i, j)] = Tile.ELBOW_WN
        else:
            changes[(i, j)] = Tile.BLANK
    pd = mvpd.replace(changes, kind=DiagramKind.PD)
    report = validate(pd)
    if not report or not report.trace.code.same_entries(w.inverse().one_line):
        raise MalformedDiagram(_("The diagram does not come from a pipe dream of %(w)s.") % {"w": w})
    return pd


def mvpd_set(w):
    return MvpdSet(w, tuple(sorted((phi(pd, w) for pd in pd_set(w)), key=Diagram.sort_key)))


def markable_cells(diagram, result):
    return tuple(
        (i, j)
        for i, j in diagram.cells_of(Tile.ELBOW_SE)
        if pipe_has_horizontal_below(diagram, result, result.label_leaving(i, j, E), i)
    )


def enumerate_direct(w):
    """MVPD(w) built without pipe dreams: backtrack, then mark in every allowed way."""
    check_bound(w.n)
    members = []
    for tiles in fill(DiagramKind.MVPD, w.n, w.alpha_prime().entries):
        base = Diagram(DiagramKind.MVPD, w.n, tiles)
        markable = markable_cells(base, trace(base))
        for size in range(len(markable) + 1):
            for chosen in itertools.combinations(markable, size):
                members.append(base.replace({cell: Tile.MARKED_SE for cell in chosen}))
    logger.debug("direct enumeration of MVPD(%s): %s members", w, len(members))
    return MvpdSet(w, tuple(sorted(members, key=Diagram.sort_key)))


def wty_mvpd(diagram):
    _require_kind(diagram, DiagramKind.MVPD)
    return frozenset(diagram.cells_of(*WEIGHTY))


def weight(diagram):
    return weight_monomial([i for i, _j in wty_mvpd(diagram)], diagram.n)


def grothendieck_via_mvpd(w):
    length = w.length()
    return signed_accumulate(
        w.n,
        [(weight(m), sign(len(wty_mvpd(m)), length)) for m in mvpd_set(w)],
    )


def double_grothendieck_via_mvpd(w):
    length = w.length()
    total = signed_accumulate(w.n, [])
    for m in mvpd_set(w):
        cells = wty_mvpd(m)
        total = total + weight_factor_product(cells, w.n) * sign(len(cells), length)
    return total


def unsaturated_tiles(diagram):
    """Bumps and unmarked ElbowSE tiles."""
    return diagram.count(Tile.BUMP, Tile.ELBOW_SE)


def lemma46_check(diagram, w):
    return len(wty_mvpd(diagram)) + unsaturated_tiles(diagram) == w.r_stat()


def is_top(diagram, w):
    if w.is_inverse_fireworks():
        return unsaturated_tiles(diagram) == 0
    return len(wty_mvpd(diagram)) == max(len(wty_mvpd(m)) for m in mvpd_set(w))


def top_mvpd_set(w):
    members = mvpd_set(w).members
    if w.is_inverse_fireworks():
        return tuple(m for m in members if unsaturated_tiles(m) == 0)
    best = max(len(wty_mvpd(m)) for m in members)
    return tuple(m for m in members if len(wty_mvpd(m)) == best)


def upgrade_sites(diagram, result):
    """
    Cells a single rewrite could raise, read off the tiles alone: an ElbowSE
    whose pipe has a Horizontal in a lower row, or a Bump whose two pipes
    cross somewhere in the diagram. Yields ``(cell, new_tile, op)`` row-major.
    """
    for i, j in diagram.cells():
        tile = diagram.tile(i, j)
        if tile == Tile.ELBOW_SE:
            if pipe_has_horizontal_below(diagram, result, result.label_leaving(i, j, E), i):
                yield (i, j), Tile.MARKED_SE, "mark"
        elif tile == Tile.BUMP:
            if result.have_crossed(result.label_entering(i, j, W), result.label_entering(i, j, S)):
                yield (i, j), Tile.CROSS, "bump_to_cross"


def find_upgrade(diagram, w):
    """
    First single-tile rewrite, in row-major order, that adds a weighty
    tile and stays inside MVPD(w).
    """
    for cell, new_tile, op in upgrade_sites(diagram, trace(diagram)):
        candidate = diagram.replace({cell: new_tile})
        if is_member(candidate, w):
            return Upgrade(cell, new_tile, op, candidate)
    return None


def is_saturated(diagram, w):
    return find_upgrade(diagram, w) is None


def has_no_upgrade_site(diagram):
    """
    Saturation by tiles alone. Stricter than ``is_saturated``: a Bump whose
    pipes cross elsewhere counts even when the Cross rewrite leaves MVPD(w).
    """
    return next(upgrade_sites(diagram, trace(diagram)), None) is None
