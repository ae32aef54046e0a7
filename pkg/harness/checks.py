"""
Property suites run by the ``check`` sweeps.

Each suite takes one permutation and a collector that records every property
that does not hold. Breaches and rejected inputs raised by the engines are
turned into failures by ``run_check``.
"""
import logging
from dataclasses import dataclass

from django.db import models

from bvpds.engine import (
    b_to_m,
    enumerate_bvpd,
    m_to_b,
    psi,
    psi_cross_rule_holds,
    psi_inverse,
    top_grothendieck_via_bvpd,
    wty_bvpd,
)
from bvpds.engine import weight as bvpd_weight
from diagrams.diagram import render_text
from diagrams.exceptions import InvariantBreach
from diagrams.tracing import max_rule_holds, paths_are_monotone, three_pipe_rule_holds, trace
from mvpds.engine import (
    double_grothendieck_via_mvpd,
    enumerate_direct,
    grothendieck_via_mvpd,
    has_no_upgrade_site,
    is_member,
    is_saturated,
    is_top,
    lemma46_check,
    mvpd_set,
    phi,
    phi_inverse,
    top_mvpd_set,
    wty_mvpd,
)
from mvpds.engine import weight as mvpd_weight
from mvpds.properties import every_pipe_has_horizontal, first_column_is_plain, no_right_turn_before_real_crossing
from pipedreams.engine import double_grothendieck, grothendieck, grothendieck_top, pd_set, raj, top_pd_set, wty_pd
from supports.conjectures import Mode, check_conj12, check_conj13
from supports.construct import column_sum, construct_up
from supports.droop import expected_weighty, find_droop_site

logger = logging.getLogger(__name__)


class CheckName(models.TextChoices):
    EQ1_VS_COR37 = "eq1-vs-cor37", "pipe dream sum against MVPD sum"
    PROP36 = "prop36", "phi is a weight preserving bijection"
    THM43 = "thm43", "top component from BVPDs"
    THM44 = "thm44", "psi onto the top pipe dreams"
    PROP49 = "prop49", "top MVPDs against BVPDs"
    LEMMA46 = "lemma46", "weighty count plus unsaturated count, shape of saturated MVPDs"
    PROP25 = "prop25", "raj equals maj exactly on fireworks"
    COR26 = "cor26", "raj is inverse invariant"
    CONJ12 = "conj12", "support divisibility"
    CONJ13 = "conj13", "support growth"
    CONSTRUCT = "construct", "construct_up certificates"


@dataclass(frozen=True)
class Failure:
    w: object
    what: str
    message: str
    witnesses: tuple = ()

    def sort_key(self):
        return (self.w.one_line, self.what, self.message)


@dataclass(frozen=True)
class Check:
    name: str
    run: object
    requires_inverse_fireworks: bool = False


class _Collector:
    def __init__(self, w, what):
        self.w = w
        self.what = what
        self.failures = []

    def expect(self, holds, message, *witnesses):
        if not holds:
            self.failures.append(Failure(self.w, self.what, message, witnesses))
        return holds


def _trace_properties(collector, diagram, kind):
    result = trace(diagram)
    collector.expect(max_rule_holds(result), f"{kind} breaks the max rule", diagram)
    collector.expect(paths_are_monotone(result), f"{kind} has a pipe that is not monotone", diagram)
    return result


def pipe_dream_sums(w, collector):
    collector.expect(grothendieck(w) == grothendieck_via_mvpd(w), "single sums differ")
    collector.expect(double_grothendieck(w) == double_grothendieck_via_mvpd(w), "double sums differ")
    for pd in pd_set(w):
        result = _trace_properties(collector, pd, "PD")
        collector.expect(three_pipe_rule_holds(result), "PD breaks the three pipe rule", pd)


def phi_bijection(w, collector):
    images = mvpd_set(w)
    collector.expect(len(images.as_set()) == len(pd_set(w)), "phi is not injective")
    collector.expect(images.as_set() == enumerate_direct(w).as_set(), "phi image differs from direct enumeration")
    for pd in pd_set(w):
        m = phi(pd, w)
        collector.expect(wty_pd(pd) == wty_mvpd(m), "phi moved a weighty tile", pd, m)
        collector.expect(phi_inverse(m, w) == pd, "phi_inverse does not undo phi", pd, m)
    for m in images:
        result = _trace_properties(collector, m, "MVPD")
        collector.expect(every_pipe_has_horizontal(m, result), "an MVPD pipe has no Horizontal tile", m)


def lemma46(w, collector):
    for m in mvpd_set(w):
        collector.expect(lemma46_check(m, w), f"weighty plus unsaturated tiles differ from r = {w.r_stat()}", m)
        if has_no_upgrade_site(m):
            collector.expect(
                no_right_turn_before_real_crossing(m, trace(m)),
                "saturated MVPD turns right just before a real crossing",
                m,
            )


def top_from_bvpds(w, collector):
    collector.expect(top_grothendieck_via_bvpd(w) == grothendieck_top(w), "BVPD sum differs from the top component")
    top = top_mvpd_set(w)
    degrees = {len(wty_mvpd(m)) for m in top}
    collector.expect(degrees == {w.r_stat()}, f"top MVPDs have degrees {sorted(degrees)}, r = {w.r_stat()}")
    collector.expect(raj(w) == w.r_stat(), f"raj = {raj(w)} but r = {w.r_stat()}")
    for m in top:
        collector.expect(first_column_is_plain(m), "top MVPD has a busy first column", m)


def psi_bijection(w, collector):
    bvpds = enumerate_bvpd(w)
    images = [psi(b, w) for b in bvpds]
    collector.expect(set(images) == set(top_pd_set(w)), "psi does not land on the top pipe dreams")
    collector.expect(len(set(images)) == len(bvpds), "psi is not injective")
    for b, pd in zip(bvpds, images):
        collector.expect(psi_cross_rule_holds(b, pd), "psi misplaces a Cross", b, pd)
        collector.expect(psi_inverse(pd, w) == b, "psi_inverse does not undo psi", b, pd)
        _trace_properties(collector, b, "BVPD")


def top_mvpd_bijection(w, collector):
    top = top_mvpd_set(w)
    images = {m: m_to_b(m, w) for m in top}
    collector.expect(set(images.values()) == set(enumerate_bvpd(w)), "m_to_b does not land on BVPD(w)")
    for m, b in images.items():
        collector.expect(b_to_m(b, w) == m, "b_to_m does not undo m_to_b", m, b)
        collector.expect(wty_bvpd(b) == wty_mvpd(m), "m_to_b moved a weighty tile", m, b)
        collector.expect(bvpd_weight(b) == mvpd_weight(m), "m_to_b changed the weight", m, b)


def raj_fireworks(w, collector):
    collector.expect(
        (raj(w) == w.maj()) == w.is_fireworks(),
        f"raj = {raj(w)}, maj = {w.maj()}, fireworks = {w.is_fireworks()}",
    )


def raj_inverse(w, collector):
    collector.expect(raj(w) == raj(w.inverse()), f"raj = {raj(w)} but raj of the inverse is {raj(w.inverse())}")


def support_divisibility(w, collector):
    report = check_conj12(w)
    for monomial in report.counterexamples:
        collector.expect(False, f"{monomial} divides no other support monomial")


def support_growth(w, collector):
    modes = [Mode.DIRECT]
    if w.is_inverse_fireworks():
        modes.append(Mode.CONSTRUCTIVE)
    for mode in modes:
        report = check_conj13(w, mode)
        for monomial in report.counterexamples:
            collector.expect(False, f"{monomial} does not grow inside the support ({mode.value})")


def certificates(w, collector):
    support = grothendieck(w).support()
    for m in mvpd_set(w):
        if is_top(m, w):
            continue
        certificate = construct_up(m, w)
        before = m
        for step in certificate.steps:
            if step.op == "droop_prime":
                collector.expect(is_saturated(before, w), "droop' applied to an unsaturated MVPD", before)
                site = find_droop_site(before, *step.cell)
                collector.expect(
                    site is not None and wty_mvpd(step.diagram) == expected_weighty(before, site),
                    f"droop' at {step.cell} breaks the weighty ledger",
                    before,
                    step.diagram,
                )
            collector.expect(is_member(step.diagram, w), f"{step.op} at {step.cell} left MVPD(w)", step.diagram)
            before = step.diagram
        collector.expect(certificate.droops <= column_sum(m), "too many droops", m)
        collector.expect(mvpd_weight(certificate.output) in support, "certificate weight outside the support", m)


CHECKS = {
    CheckName.EQ1_VS_COR37: Check(CheckName.EQ1_VS_COR37, pipe_dream_sums),
    CheckName.PROP36: Check(CheckName.PROP36, phi_bijection),
    CheckName.THM43: Check(CheckName.THM43, top_from_bvpds, requires_inverse_fireworks=True),
    CheckName.THM44: Check(CheckName.THM44, psi_bijection, requires_inverse_fireworks=True),
    CheckName.PROP49: Check(CheckName.PROP49, top_mvpd_bijection, requires_inverse_fireworks=True),
    CheckName.LEMMA46: Check(CheckName.LEMMA46, lemma46),
    CheckName.PROP25: Check(CheckName.PROP25, raj_fireworks),
    CheckName.COR26: Check(CheckName.COR26, raj_inverse),
    CheckName.CONJ12: Check(CheckName.CONJ12, support_divisibility),
    CheckName.CONJ13: Check(CheckName.CONJ13, support_growth),
    CheckName.CONSTRUCT: Check(CheckName.CONSTRUCT, certificates, requires_inverse_fireworks=True),
}


def applies(what, w):
    return w.is_inverse_fireworks() or not CHECKS[CheckName(what)].requires_inverse_fireworks


def run_check(what, w):
    """Failures of one suite on one permutation; engine errors count as failures."""
    what = CheckName(what)
    check = CHECKS[what]
    collector = _Collector(w, what.value)
    try:
        check.run(w, collector)
    except InvariantBreach as exc:
        collector.failures.append(Failure(w, collector.what, exc.message, exc.witnesses))
    except ValueError as exc:
        collector.failures.append(Failure(w, collector.what, str(exc)))
    for failure in collector.failures:
        logger.warning(
            "%s fails on %s: %s%s",
            failure.what,
            w,
            failure.message,
            "".join(f"\n{render_text(witness)}" for witness in failure.witnesses[:1]),
        )
    return collector.failures
