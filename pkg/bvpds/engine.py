"""
Bumpless vertical-less pipe dreams of inverse fireworks permutations.

A BVPD lives on the n x (n-1) staircase. Column j of a BVPD lines up with
column j+1 of the top MVPDs it corresponds to, and with column j+1 of the
top pipe dreams reached through ``psi``.
"""
import logging
from dataclasses import dataclass

from django.utils.translation import gettext_lazy as _

from diagrams.diagram import Diagram, validate
from diagrams.exceptions import InvariantBreach, MalformedDiagram
from diagrams.tiles import DiagramKind, Tile
from mvpds.engine import is_member, is_top, phi, phi_inverse, require_member
from mvpds.properties import first_column_is_plain
from pipedreams.bounds import check_bound
from pipedreams.engine import grothendieck_top, wty_pd
from pipedreams.staircase import fill
from polynomials.polynomial import signed_accumulate, weight_monomial

logger = logging.getLogger(__name__)

# tiles a pipe enters from the West
WEIGHTY = (Tile.CROSS, Tile.HORIZONTAL, Tile.ELBOW_WN)
# tiles a pipe leaves to the East
EXITING = (Tile.CROSS, Tile.HORIZONTAL, Tile.ELBOW_SE)


def _require_kind(diagram, kind):
    if diagram.kind != kind:
        raise MalformedDiagram(
            _("Expected a %(expected)s, got a %(kind)s.")
            % {"expected": kind.value, "kind": diagram.kind.value}
        )


def is_bvpd_member(diagram, w):
    if diagram.kind != DiagramKind.BVPD or diagram.n != w.n:
        return False
    report = validate(diagram)
    return report.valid and report.trace.code.same_entries(w.alpha())


def require_bvpd_member(diagram, w):
    _require_kind(diagram, DiagramKind.BVPD)
    if not is_bvpd_member(diagram, w):
        raise MalformedDiagram(_("The diagram is not a BVPD of %(w)s.") % {"w": w})


def enumerate_bvpd(w):
    w.require_inverse_fireworks()
    check_bound(w.n)
    members = [
        Diagram(DiagramKind.BVPD, w.n, tiles)
        for tiles in fill(DiagramKind.BVPD, w.n, w.alpha().entries)
    ]
    logger.debug("BVPD(%s): %s members", w, len(members))
    return tuple(sorted(members, key=Diagram.sort_key))


def wty_bvpd(diagram):
    _require_kind(diagram, DiagramKind.BVPD)
    return frozenset(diagram.cells_of(*WEIGHTY))


def exit_cells(diagram):
    _require_kind(diagram, DiagramKind.BVPD)
    return frozenset(diagram.cells_of(*EXITING))


def weight(diagram):
    return weight_monomial([i for i, _j in wty_bvpd(diagram)], diagram.n)


def top_grothendieck_via_bvpd(w):
    """Unsigned top component of the Grothendieck polynomial, summed over BVPD(w)."""
    return signed_accumulate(w.n, [(weight(b), 1) for b in enumerate_bvpd(w)])


def m_to_b(mvpd, w):
    w.require_inverse_fireworks()
    require_member(mvpd, w)
    if not is_top(mvpd, w):
        raise MalformedDiagram(_("Only top MVPDs of %(w)s map to BVPDs.") % {"w": w})
    if not first_column_is_plain(mvpd):
        raise InvariantBreach(_("Top MVPD of %(w)s has a busy first column.") % {"w": w}, mvpd)
    tiles = tuple(
        tuple(Tile.ELBOW_SE if tile == Tile.MARKED_SE else tile for tile in row[1:])
        for row in mvpd.tiles
    )
    bvpd = Diagram(DiagramKind.BVPD, w.n, tiles)
    if not is_bvpd_member(bvpd, w):
        raise InvariantBreach(_("Deleting the first column left BVPD(%(w)s).") % {"w": w}, mvpd, bvpd)
    return bvpd


def b_to_m(bvpd, w):
    w.require_inverse_fireworks()
    require_bvpd_member(bvpd, w)
    entering = bvpd.entering_rows
    tiles = tuple(
        (Tile.HORIZONTAL if i in entering else Tile.BLANK,)
        + tuple(Tile.MARKED_SE if tile == Tile.ELBOW_SE else tile for tile in row)
        for i, row in enumerate(bvpd.tiles, start=1)
    )
    mvpd = Diagram(DiagramKind.MVPD, w.n, tiles)
    if not is_member(mvpd, w):
        report = validate(mvpd)
        logger.error("b_to_m broke MVPD(%s): %s", w, "; ".join(report.violations))
        raise InvariantBreach(_("Marking the BVPD left MVPD(%(w)s).") % {"w": w}, bvpd, mvpd)
    return mvpd


def psi(bvpd, w):
    return phi_inverse(b_to_m(bvpd, w), w)


def psi_inverse(pd, w):
    w.require_inverse_fireworks()
    if len(wty_pd(pd)) != w.r_stat():
        raise MalformedDiagram(_("Only top pipe dreams of %(w)s map to BVPDs.") % {"w": w})
    return m_to_b(phi(pd, w), w)


def psi_cross_rule_holds(bvpd, pd):
    """
    ``pd`` has a Cross at (i, j) exactly when (i, j-1) is an exit cell of
    ``bvpd``, or j = 1 and a pipe of ``bvpd`` enters row i.
    """
    exits = exit_cells(bvpd)
    entering = bvpd.entering_rows
    expected = {
        (i, j)
        for i, j in pd.cells()
        if (j == 1 and i in entering) or (j > 1 and (i, j - 1) in exits)
    }
    return expected == set(wty_pd(pd))


@dataclass(frozen=True)
class TopComponent:
    polynomial: object
    method: str
    notice: str = ""


def top_grothendieck(w):
    """
    Top component of the Grothendieck polynomial with positive signs: from
    BVPD(w) for inverse fireworks w, otherwise from the top pipe dreams.
    """
    if w.is_inverse_fireworks():
        return TopComponent(top_grothendieck_via_bvpd(w), "bvpd")
    return TopComponent(
        grothendieck_top(w),
        "enumeration",
        str(_("%(w)s is not inverse fireworks; the top component was read off PD(%(w)s).") % {"w": w}),
    )
