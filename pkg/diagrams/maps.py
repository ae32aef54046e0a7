"""
Name-addressable enumerators and bijections, shared by the HTTP views and
the management command.
"""
from dataclasses import dataclass

from django.db import models
from django.utils.translation import gettext_lazy as _

from bvpds.engine import b_to_m, enumerate_bvpd, m_to_b, psi, psi_inverse
from mvpds.engine import mvpd_set, phi, phi_inverse
from pipedreams.engine import pd_set

from .exceptions import MalformedDiagram
from .tiles import DiagramKind


class MapName(models.TextChoices):
    PHI = "phi", "pipe dream to MVPD"
    PHI_INVERSE = "phi-inv", "MVPD to pipe dream"
    M_TO_B = "mb", "top MVPD to BVPD"
    B_TO_M = "bm", "BVPD to top MVPD"
    PSI = "psi", "BVPD to top pipe dream"
    PSI_INVERSE = "psi-inv", "top pipe dream to BVPD"


@dataclass(frozen=True)
class Bijection:
    source: str
    apply: object


BIJECTIONS = {
    MapName.PHI: Bijection(DiagramKind.PD, phi),
    MapName.PHI_INVERSE: Bijection(DiagramKind.MVPD, phi_inverse),
    MapName.M_TO_B: Bijection(DiagramKind.MVPD, m_to_b),
    MapName.B_TO_M: Bijection(DiagramKind.BVPD, b_to_m),
    MapName.PSI: Bijection(DiagramKind.BVPD, psi),
    MapName.PSI_INVERSE: Bijection(DiagramKind.PD, psi_inverse),
}


def source_kind(which):
    return BIJECTIONS[MapName(which)].source


def apply_map(which, diagram, w):
    bijection = BIJECTIONS[MapName(which)]
    if diagram.kind != bijection.source:
        raise MalformedDiagram(
            _("%(which)s takes a %(expected)s, got a %(kind)s.")
            % {"which": MapName(which).value, "expected": bijection.source.value, "kind": diagram.kind.value}
        )
    if diagram.n != w.n:
        raise MalformedDiagram(_("The diagram has size %(n)s but w has size %(m)s.") % {"n": diagram.n, "m": w.n})
    return bijection.apply(diagram, w)


def enumerate_kind(kind, w):
    kind = DiagramKind(kind)
    if kind == DiagramKind.PD:
        return tuple(pd_set(w))
    if kind == DiagramKind.MVPD:
        return mvpd_set(w).members
    return enumerate_bvpd(w)
