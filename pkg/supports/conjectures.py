"""
Empirical checks of the support conjectures.

A failed check is reported with its counterexamples instead of raising:
outside inverse fireworks permutations the statements are conjectural.
"""
import logging
from dataclasses import dataclass

from django.db import models

from mvpds.engine import is_top, mvpd_set, weight
from pipedreams.engine import grothendieck

from .construct import construct_up

logger = logging.getLogger(__name__)


class Mode(models.TextChoices):
    DIRECT = "direct", "support lookup"
    CONSTRUCTIVE = "constructive", "construct_up certificates"


@dataclass(frozen=True)
class Witness:
    monomial: object
    target: object
    row: int = 0


@dataclass(frozen=True)
class ConjectureReport:
    w: object
    statement: str
    mode: str
    witnesses: tuple
    counterexamples: tuple

    @property
    def passed(self):
        return not self.counterexamples


def _below_top(support):
    if not support:
        return [], 0
    top = max(monomial.degree for monomial in support)
    return sorted((m for m in support if m.degree < top), key=lambda m: (m.degree, m.key)), top


def check_conj13(w, mode=Mode.DIRECT):
    """Every non-top support monomial times some x_i is again in the support."""
    mode = Mode(mode)
    support = grothendieck(w).support()
    witnesses, counterexamples = [], []
    if mode == Mode.DIRECT:
        lower, _top = _below_top(support)
        for monomial in lower:
            row = next((i for i in range(1, w.n + 1) if monomial.times_x(i) in support), None)
            if row is None:
                counterexamples.append(monomial)
            else:
                witnesses.append(Witness(monomial, monomial.times_x(row), row))
    else:
        w.require_inverse_fireworks()
        for diagram in mvpd_set(w):
            if is_top(diagram, w):
                continue
            certificate = construct_up(diagram, w)
            target = weight(certificate.output)
            if target in support and target == weight(diagram).times_x(certificate.gained_row):
                witnesses.append(Witness(weight(diagram), target, certificate.gained_row))
            else:
                counterexamples.append(weight(diagram))
    if counterexamples:
        logger.warning("support growth fails for %s (%s): %s", w, mode.value, counterexamples)
    return ConjectureReport(w, "conj13", mode.value, tuple(witnesses), tuple(counterexamples))


def check_conj12(w):
    """Every non-top support monomial divides a different support monomial."""
    support = grothendieck(w).support()
    lower, _top = _below_top(support)
    ordered = sorted(support, key=lambda m: (m.degree, m.key))
    witnesses, counterexamples = [], []
    for monomial in lower:
        target = next((m for m in ordered if m != monomial and monomial.divides(m)), None)
        if target is None:
            counterexamples.append(monomial)
        else:
            witnesses.append(Witness(monomial, target))
    if counterexamples:
        logger.warning("support divisibility fails for %s: %s", w, counterexamples)
    return ConjectureReport(w, "conj12", Mode.DIRECT.value, tuple(witnesses), tuple(counterexamples))
