"""
Droop moves on MVPDs.

A droop at (i, j) takes the pipe that turns South to East at (i, j) and
slides its vertical run in column j one column to the right, down to the
first row i' > i where column j is no longer a Cross. ``droop_prime``
additionally marks the new elbow at (i, j+1).
"""
import logging
from dataclasses import dataclass

from django.utils.translation import gettext_lazy as _

from diagrams.exceptions import InvariantBreach, MalformedDiagram
from diagrams.tiles import Tile
from diagrams.tracing import trace
from mvpds.engine import is_member, require_member, wty_mvpd

logger = logging.getLogger(__name__)

PATTERN_TILES = (Tile.BUMP, Tile.ELBOW_SE)

_LOWER_CORNER = {
    Tile.BLANK: Tile.ELBOW_WN,
    Tile.ELBOW_SE: Tile.BUMP,
    Tile.MARKED_SE: Tile.BUMP,
}


@dataclass(frozen=True)
class DroopSite:
    i: int
    j: int
    i_prime: int

    @property
    def cell(self):
        return (self.i, self.j)

    @property
    def middle_rows(self):
        return range(self.i + 1, self.i_prime)


def _turns_south_east(diagram, result, i, j):
    tile = diagram.tile(i, j)
    if tile in (Tile.ELBOW_SE, Tile.MARKED_SE, Tile.BUMP):
        return True
    if tile == Tile.CROSS:
        crossing = result.crossing_at(i, j)
        return crossing is not None and not crossing.real
    return False


def find_droop_site(diagram, i, j, result=None):
    """The droop site at (i, j), or ``None`` when the move is not defined there."""
    if j >= diagram.cols or not 1 <= i <= diagram.rows:
        return None
    result = result or trace(diagram)
    if not _turns_south_east(diagram, result, i, j) or diagram.tile(i, j + 1) != Tile.HORIZONTAL:
        return None
    i_prime = i + 1
    while i_prime <= diagram.rows and diagram.tile(i_prime, j) == Tile.CROSS:
        if diagram.tile(i_prime, j + 1) != Tile.HORIZONTAL:
            return None
        i_prime += 1
    if i_prime > diagram.rows or diagram.tile(i_prime, j) != Tile.ELBOW_WN:
        return None
    if diagram.tile(i_prime, j + 1) not in _LOWER_CORNER:
        return None
    return DroopSite(i, j, i_prime)


def droop_sites(diagram):
    result = trace(diagram)
    return tuple(
        site
        for site in (find_droop_site(diagram, i, j, result) for i, j in diagram.cells())
        if site is not None
    )


def _rewrite(diagram, site, marked):
    i, j, i_prime = site.i, site.j, site.i_prime
    changes = {
        (i, j): Tile.BLANK if diagram.tile(i, j) in (Tile.ELBOW_SE, Tile.MARKED_SE) else Tile.ELBOW_WN,
        (i, j + 1): Tile.MARKED_SE if marked else Tile.ELBOW_SE,
        (i_prime, j): Tile.HORIZONTAL,
        (i_prime, j + 1): _LOWER_CORNER[diagram.tile(i_prime, j + 1)],
    }
    for r in site.middle_rows:
        changes[(r, j)] = Tile.HORIZONTAL
        changes[(r, j + 1)] = Tile.CROSS
    return diagram.replace(changes)


def _site_or_raise(diagram, i, j):
    site = find_droop_site(diagram, i, j)
    if site is None:
        raise MalformedDiagram(_("No droop is defined at (%(i)s,%(j)s).") % {"i": i, "j": j})
    return site


def droop(diagram, i, j, w):
    require_member(diagram, w)
    site = _site_or_raise(diagram, i, j)
    drooped = _rewrite(diagram, site, marked=False)
    if not is_member(drooped, w):
        raise InvariantBreach(
            _("droop at (%(i)s,%(j)s) left MVPD(%(w)s).") % {"i": i, "j": j, "w": w}, diagram, drooped
        )
    return drooped


def expected_weighty(diagram, site):
    """Weighty cells after ``droop_prime`` at ``site``."""
    return (wty_mvpd(diagram) - {site.cell, (site.i_prime, site.j + 1)}) | {(site.i_prime, site.j)}


def droop_prime(diagram, i, j, w):
    require_member(diagram, w)
    site = _site_or_raise(diagram, i, j)
    drooped = _rewrite(diagram, site, marked=True)
    if not is_member(drooped, w):
        raise InvariantBreach(
            _("droop' at (%(i)s,%(j)s) left MVPD(%(w)s).") % {"i": i, "j": j, "w": w}, diagram, drooped
        )
    if wty_mvpd(drooped) != expected_weighty(diagram, site):
        raise InvariantBreach(
            _("droop' at (%(i)s,%(j)s) broke the weighty tile ledger.") % {"i": i, "j": j}, diagram, drooped
        )
    logger.debug("droop' at %s, lower corner row %s", site.cell, site.i_prime)
    return drooped


def find_pattern(diagram, w):
    """
    Lowest, then rightmost, Bump or unmarked ElbowSE with a Horizontal
    directly to its East.
    """
    w.require_inverse_fireworks()
    found = [
        (i, j)
        for i, j in diagram.cells_of(*PATTERN_TILES)
        if j < diagram.cols and diagram.tile(i, j + 1) == Tile.HORIZONTAL
    ]
    if not found:
        raise InvariantBreach(_("A saturated non-top MVPD has no droop pattern."), diagram)
    return max(found)

