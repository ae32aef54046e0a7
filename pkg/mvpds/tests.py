import pytest

from diagrams.diagram import Diagram, parse_text
from diagrams.exceptions import MalformedDiagram
from diagrams.tiles import DiagramKind, Tile
from diagrams.tracing import max_rule_holds, trace
from permutations.permutation import Permutation
from pipedreams.engine import double_grothendieck, grothendieck, pd_set, raj, wty_pd

from .engine import (
    enumerate_direct,
    find_upgrade,
    grothendieck_via_mvpd,
    double_grothendieck_via_mvpd,
    has_no_upgrade_site,
    is_member,
    is_saturated,
    is_top,
    lemma46_check,
    mvpd_set,
    phi,
    phi_inverse,
    top_mvpd_set,
    upgrade_sites,
    weight,
    wty_mvpd,
)
from .properties import every_pipe_has_horizontal, first_column_is_plain, no_right_turn_before_real_crossing

W_2413 = Permutation.parse("2413")

M1 = "-JrJ\n--J.\n....\n...."
M2 = "-b-J\n-J..\n....\n...."
M3 = "-JRJ\n--J.\n....\n...."

W_15243 = Permutation.parse("15243")
BUMP_BLOCKED = ".R-+J\n-b-J.\nrJ...\nJ....\n....."


def mvpd(text, n=4):
    return parse_text(DiagramKind.MVPD, n, text)


def pd(text, n=4):
    return parse_text(DiagramKind.PD, n, text)


def test_mvpd_set_of_2413():
    """
    w^-1 = 3142 MVPD 집합 테스트
    """
    members = mvpd_set(W_2413)
    assert len(members) == 3
    assert {str(m) for m in members} == {M1, M2, M3}
    assert sorted(str(weight(m)) for m in members) == ["x1*x2^2", "x1^2*x2", "x1^2*x2^2"]


def test_direct_enumeration_of_2413():
    """
    PD 없이 직접 열거한 MVPD 집합 테스트
    """
    assert enumerate_direct(W_2413).as_set() == mvpd_set(W_2413).as_set()


@pytest.mark.parametrize(
    "pd_text, mvpd_text",
    [
        ("+bbJ\n++J.\nbJ..\nJ...", M1),
        ("+b+J\n+bJ.\nbJ..\nJ...", M2),
        ("+b+J\n++J.\nbJ..\nJ...", M3),
    ],
)
def test_phi_goldens(pd_text, mvpd_text):
    """
    Φ 사상 결과 테스트
    """
    image = phi(pd(pd_text), W_2413)
    assert str(image) == mvpd_text
    assert wty_mvpd(image) == wty_pd(pd(pd_text))
    assert str(phi_inverse(image, W_2413)) == pd_text


def test_phi_small_cases():
    """
    항등순열과 21의 Φ 테스트
    """
    identity = Permutation.identity(3)
    (only,) = pd_set(identity)
    assert phi(only, identity) == Diagram.blank(DiagramKind.MVPD, 3)
    assert phi_inverse(Diagram.blank(DiagramKind.MVPD, 3), identity) == Diagram.all_bump(3)

    w = Permutation.parse("21")
    image = phi(pd("+J\nJ.", n=2), w)
    assert str(image) == "-J\n.."
    assert wty_mvpd(image) == {(1, 1)}
    assert len(mvpd_set(w)) == 1
    assert mvpd_set(identity).members == (Diagram.blank(DiagramKind.MVPD, 3),)


def test_phi_rejects_foreign_input():
    """
    다른 순열의 PD 입력 실패 테스트
    """
    with pytest.raises(MalformedDiagram):
        phi(pd("+J\nJ.", n=2), Permutation.identity(2))
    with pytest.raises(MalformedDiagram):
        phi_inverse(mvpd(M1), Permutation.parse("4231"))


@pytest.mark.parametrize("w", Permutation.all(4))
def test_bijection_and_polynomials_over_s4(w):
    """
    S_4 전체에서 Φ 전단사성과 다항식 일치 테스트
    """
    members = mvpd_set(w)
    pds = pd_set(w)
    assert len(members.as_set()) == len(pds)
    assert members.as_set() == enumerate_direct(w).as_set()
    for p in pds:
        assert phi_inverse(phi(p, w), w) == p
    assert grothendieck_via_mvpd(w) == grothendieck(w)
    assert double_grothendieck_via_mvpd(w) == double_grothendieck(w)
    for m in members:
        result = trace(m)
        assert lemma46_check(m, w)
        assert every_pipe_has_horizontal(m, result)
        assert max_rule_holds(result)


@pytest.mark.parametrize("w", [w for w in Permutation.all(5) if w.is_inverse_fireworks()])
def test_top_members_of_inverse_fireworks(w):
    """
    inverse fireworks 순열의 최고차 MVPD 테스트
    """
    tops = top_mvpd_set(w)
    assert tops
    for m in tops:
        assert len(wty_mvpd(m)) == w.r_stat() == raj(w)
        assert first_column_is_plain(m)
        assert m.count(Tile.BUMP, Tile.ELBOW_SE) == 0


@pytest.mark.parametrize("w", Permutation.all(5))
def test_saturated_members_over_s5(w):
    """
    S_5 전체에서 업그레이드 자리가 없는 MVPD의 오른쪽 꺾임 테스트
    """
    for m in mvpd_set(w):
        if has_no_upgrade_site(m):
            assert is_saturated(m, w)
            assert no_right_turn_before_real_crossing(m, trace(m))


def test_bump_to_cross_can_leave_mvpd_set():
    """
    Cross로 바꾸면 MVPD(w)를 벗어나는 Bump 테스트
    """
    m = mvpd(BUMP_BLOCKED, n=5)
    assert is_member(m, W_15243)
    assert ((2, 2), Tile.CROSS, "bump_to_cross") in list(upgrade_sites(m, trace(m)))
    assert not is_member(m.replace({(2, 2): Tile.CROSS}), W_15243)
    assert find_upgrade(m, W_15243) is None
    assert is_saturated(m, W_15243)
    assert not has_no_upgrade_site(m)


def test_top_of_2413():
    """
    2413 최고차 원소 테스트
    """
    (top,) = top_mvpd_set(W_2413)
    assert str(top) == M3
    assert is_top(top, W_2413)
    assert not is_top(mvpd(M1), W_2413)


def test_find_upgrade():
    """
    단일 타일 업그레이드 탐색 테스트
    """
    upgrade = find_upgrade(mvpd(M1), W_2413)
    assert upgrade.cell == (1, 3)
    assert upgrade.op == "mark"
    assert str(upgrade.diagram) == M3
    assert find_upgrade(mvpd(M2), W_2413) is None
    assert is_saturated(mvpd(M2), W_2413)
    assert is_saturated(mvpd(M3), W_2413)


def test_upgrades_gain_one_weighty_tile():
    """
    업그레이드가 weighty 타일을 정확히 하나 늘리는지 테스트
    """
    for w in Permutation.all(4):
        for m in mvpd_set(w):
            upgrade = find_upgrade(m, w)
            if upgrade is None:
                continue
            gained = wty_mvpd(upgrade.diagram) - wty_mvpd(m)
            assert gained == {upgrade.cell}
            assert is_member(upgrade.diagram, w)
