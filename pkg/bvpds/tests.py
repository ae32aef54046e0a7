import pytest

from diagrams.diagram import Diagram, parse_text
from diagrams.exceptions import MalformedDiagram
from diagrams.tiles import DiagramKind
from mvpds.engine import top_mvpd_set, wty_mvpd
from permutations.permutation import NotInverseFireworks, Permutation
from pipedreams.engine import grothendieck, grothendieck_top, top_pd_set, raj

from .engine import (
    b_to_m,
    enumerate_bvpd,
    exit_cells,
    m_to_b,
    psi,
    psi_cross_rule_holds,
    psi_inverse,
    top_grothendieck_via_bvpd,
    weight,
    wty_bvpd,
)

W_2413 = Permutation.parse("2413")
W_165234 = Permutation.parse("165234")

B_2413 = "JrJ\n-J.\n...\n..."
TOP_PD_2413 = "+b+J\n++J.\nbJ..\nJ..."
TOP_MVPD_2413 = "-JRJ\n--J.\n....\n...."

SIX_WEIGHTS = [
    "x1^2*x2^4*x3^3",
    "x1^3*x2^3*x3^3",
    "x1^3*x2^4*x3^2",
    "x1^4*x2^2*x3^3",
    "x1^4*x2^3*x3^2",
    "x1^4*x2^4*x3",
]

inverse_fireworks_5 = [w for w in Permutation.all(5) if w.is_inverse_fireworks()]


def test_bvpds_of_165234():
    """
    165234의 BVPD 6개와 가중치 테스트
    """
    members = enumerate_bvpd(W_165234)
    assert len(members) == 6
    assert sorted(str(weight(b)) for b in members) == SIX_WEIGHTS
    assert all(len(wty_bvpd(b)) == W_165234.r_stat() == 9 for b in members)
    assert str(top_grothendieck_via_bvpd(W_165234)) == " + ".join(SIX_WEIGHTS)


def test_bvpd_of_2413():
    """
    2413의 유일한 BVPD 테스트
    """
    (only,) = enumerate_bvpd(W_2413)
    assert str(only) == B_2413
    assert wty_bvpd(only) == {(1, 1), (1, 3), (2, 1), (2, 2)}
    assert exit_cells(only) == {(1, 2), (2, 1)}
    assert str(weight(only)) == "x1^2*x2^2"
    assert str(top_grothendieck_via_bvpd(W_2413)) == "x1^2*x2^2"


def test_maps_of_2413():
    """
    2413에서 M↔B, Ψ 사상 테스트
    """
    bvpd = parse_text(DiagramKind.BVPD, 4, B_2413)
    mvpd = b_to_m(bvpd, W_2413)
    assert str(mvpd) == TOP_MVPD_2413
    assert m_to_b(mvpd, W_2413) == bvpd
    assert wty_mvpd(mvpd) == wty_bvpd(bvpd)

    pd = psi(bvpd, W_2413)
    assert str(pd) == TOP_PD_2413
    assert psi_cross_rule_holds(bvpd, pd)
    assert psi_inverse(pd, W_2413) == bvpd


def test_identity():
    """
    항등순열 BVPD 테스트
    """
    w = Permutation.identity(3)
    (only,) = enumerate_bvpd(w)
    assert only == Diagram.blank(DiagramKind.BVPD, 3)
    assert str(only) == "..\n..\n.."
    assert psi(only, w) == Diagram.all_bump(3)
    assert str(top_grothendieck_via_bvpd(w)) == "1"


def test_requires_inverse_fireworks():
    """
    inverse fireworks가 아닌 순열 실패 테스트
    """
    w = Permutation.parse("231")
    assert not w.is_inverse_fireworks()
    with pytest.raises(NotInverseFireworks):
        enumerate_bvpd(w)
    with pytest.raises(NotInverseFireworks):
        top_grothendieck_via_bvpd(w)


def test_rejects_wrong_inputs():
    """
    잘못된 입력 다이어그램 실패 테스트
    """
    with pytest.raises(MalformedDiagram):
        wty_bvpd(Diagram.all_bump(3))
    with pytest.raises(MalformedDiagram):
        b_to_m(Diagram.blank(DiagramKind.BVPD, 4), W_2413)
    with pytest.raises(MalformedDiagram):
        m_to_b(parse_text(DiagramKind.MVPD, 4, "-JrJ\n--J.\n....\n...."), W_2413)
    with pytest.raises(MalformedDiagram):
        psi_inverse(parse_text(DiagramKind.PD, 4, "+bbJ\n++J.\nbJ..\nJ..."), W_2413)


@pytest.mark.parametrize("w", inverse_fireworks_5)
def test_bijections_over_inverse_fireworks(w):
    """
    inverse fireworks 순열에서 집합 등식과 최고차 공식 테스트
    """
    bvpds = set(enumerate_bvpd(w))
    assert {m_to_b(m, w) for m in top_mvpd_set(w)} == bvpds
    assert {b_to_m(b, w) for b in bvpds} == set(top_mvpd_set(w))
    images = {psi(b, w) for b in bvpds}
    assert images == set(top_pd_set(w))
    for b in bvpds:
        assert psi_cross_rule_holds(b, psi(b, w))
    assert top_grothendieck_via_bvpd(w) == grothendieck_top(w)
    sign = -1 if (raj(w) - w.length()) % 2 else 1
    assert top_grothendieck_via_bvpd(w) * sign == grothendieck(w).top_component()


@pytest.mark.slow
def test_165234_against_enumeration():
    """
    n=6 열거 기반 최고차 성분과 비교 테스트
    """
    assert {m_to_b(m, W_165234) for m in top_mvpd_set(W_165234)} == set(enumerate_bvpd(W_165234))
    assert top_grothendieck_via_bvpd(W_165234) == grothendieck_top(W_165234)
