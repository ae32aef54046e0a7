"""
Raising an MVPD by one weighty tile.

For an inverse fireworks w and a non-top M in MVPD(w), ``construct_up``
returns M' in MVPD(w) whose weight is weight(M) * x_i for a single row i,
together with the moves that produced it.
"""
import logging
from dataclasses import dataclass

from django.utils.translation import gettext_lazy as _

from diagrams.diagram import Diagram
from diagrams.exceptions import InvariantBreach, MalformedDiagram
from mvpds.engine import find_upgrade, is_top, require_member, weight, wty_mvpd

from .droop import droop_prime, find_pattern

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Step:
    op: str
    cell: tuple
    diagram: Diagram


@dataclass(frozen=True)
class Certificate:
    w: object
    input: Diagram
    steps: tuple
    output: Diagram
    gained_row: int

    @property
    def droops(self):
        return sum(1 for step in self.steps if step.op == "droop_prime")


def column_sum(diagram):
    return sum(j for _i, j in wty_mvpd(diagram))


def gained_row(before, after):
    """The row i with weight(after) = weight(before) * x_i, else ``None``."""
    grown = [
        i
        for i, (old, new) in enumerate(zip(weight(before).x_exps, weight(after).x_exps), start=1)
        if new != old
    ]
    if len(grown) != 1:
        return None
    i = grown[0]
    if weight(after).x_exps[i - 1] != weight(before).x_exps[i - 1] + 1:
        return None
    return i


def construct_up(diagram, w):
    w.require_inverse_fireworks()
    require_member(diagram, w)
    if is_top(diagram, w):
        raise MalformedDiagram(_("The MVPD already has the top degree of %(w)s.") % {"w": w})

    bound = column_sum(diagram)
    current, steps, droops = diagram, [], 0
    while True:
        upgrade = find_upgrade(current, w)
        if upgrade is not None:
            steps.append(Step(upgrade.op, upgrade.cell, upgrade.diagram))
            current = upgrade.diagram
            break
        droops += 1
        if droops > bound:
            raise InvariantBreach(
                _("construct_up on %(w)s did not stop within %(bound)s droops.") % {"w": w, "bound": bound},
                diagram,
                current,
            )
        cell = find_pattern(current, w)
        try:
            drooped = droop_prime(current, *cell, w)
        except MalformedDiagram:
            raise InvariantBreach(
                _("The droop pattern at (%(i)s,%(j)s) is not a droop site.") % {"i": cell[0], "j": cell[1]},
                diagram,
                current,
            )
        steps.append(Step("droop_prime", cell, drooped))
        previous, current = current, drooped
        size, new_size = len(wty_mvpd(previous)), len(wty_mvpd(current))
        if new_size == size + 1:
            break
        if new_size != size or column_sum(current) >= column_sum(previous):
            raise InvariantBreach(
                _("droop' at (%(i)s,%(j)s) neither raised the degree nor moved a weighty tile left.") % {"i": cell[0], "j": cell[1]},
                diagram,
                drooped,
            )

    row = gained_row(diagram, current)
    if row is None:
        raise InvariantBreach(
            _("construct_up on %(w)s did not multiply the weight by a single variable.") % {"w": w},
            diagram,
            current,
        )
    logger.debug("construct_up(%s): %s steps, gained x%s", w, len(steps), row)
    return Certificate(w, diagram, tuple(steps), current, row)
