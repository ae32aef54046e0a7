import pytest
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APIClient

from diagrams.diagram import Diagram, parse_text
from diagrams.exceptions import MalformedDiagram
from diagrams.tiles import DiagramKind
from mvpds.engine import is_member, is_top, mvpd_set, weight, wty_mvpd
from permutations.permutation import NotInverseFireworks, Permutation
from pipedreams.engine import grothendieck

from .conjectures import Mode, check_conj12, check_conj13
from .construct import column_sum, construct_up
from .droop import droop, droop_prime, droop_sites, expected_weighty, find_droop_site, find_pattern

W_2413 = Permutation.parse("2413")
W_13524 = Permutation.parse("13524")

M1 = "-JrJ\n--J.\n....\n...."
M2 = "-b-J\n-J..\n....\n...."
M3 = "-JRJ\n--J.\n....\n...."

SATURATED = "r-JRJ\nJR-J.\n-J...\n.....\n....."
AFTER_FIRST = ".RJRJ\n-b-J.\n-J...\n.....\n....."
AFTER_SECOND = ".RJRJ\n-JRJ.\n--J..\n.....\n....."

W_15243 = Permutation.parse("15243")
BUMP_BLOCKED = ".R-+J\n-b-J.\nrJ...\nJ....\n....."

inverse_fireworks_5 = [w for w in Permutation.all(5) if w.is_inverse_fireworks()]


def mvpd(text, n=4):
    return parse_text(DiagramKind.MVPD, n, text)


@pytest.fixture
def client():
    return APIClient()


def test_example_permutation_codes():
    """
    w^-1 = 14253 코드 테스트
    """
    assert W_13524.inverse() == Permutation.parse("14253")
    assert W_13524.alpha_prime().entries == (0, 0, 2, 0, 3)
    assert W_13524.r_stat() == 6


def test_droop_on_minimal_site():
    """
    i' = i + 1 인 최소 droop 테스트
    """
    site = find_droop_site(mvpd(M2), 1, 2)
    assert (site.i, site.j, site.i_prime) == (1, 2, 2)
    drooped = droop(mvpd(M2), 1, 2, W_2413)
    assert str(drooped) == M1
    changed = [cell for cell in drooped.cells() if drooped.tile(*cell) != mvpd(M2).tile(*cell)]
    assert changed == [(1, 2), (1, 3), (2, 2), (2, 3)]
    assert str(droop_prime(mvpd(M2), 1, 2, W_2413)) == M3


def test_droop_prime_ledger():
    """
    droop' 전후 weighty 타일 장부 테스트
    """
    before = mvpd(M2)
    site = find_droop_site(before, 1, 2)
    after = droop_prime(before, 1, 2, W_2413)
    assert wty_mvpd(after) == expected_weighty(before, site)
    assert wty_mvpd(after) == {(1, 1), (1, 3), (2, 1), (2, 2)}


def test_droop_rejects_missing_site():
    """
    droop 불가능한 위치 실패 테스트
    """
    assert find_droop_site(mvpd(M1), 1, 1) is None
    with pytest.raises(MalformedDiagram):
        droop(mvpd(M1), 1, 1, W_2413)
    assert droop_sites(Diagram.blank(DiagramKind.MVPD, 3)) == ()


def test_find_pattern():
    """
    가장 아래, 가장 오른쪽 패턴 선택 테스트
    """
    assert find_pattern(mvpd(M2), W_2413) == (1, 2)
    assert find_pattern(mvpd(SATURATED, n=5), W_13524) == (1, 1)
    assert find_pattern(mvpd(AFTER_FIRST, n=5), W_13524) == (2, 2)


def test_construct_up_two_droops():
    """
    두 번의 droop'이 필요한 construct_up 테스트
    """
    start = mvpd(SATURATED, n=5)
    assert is_member(start, W_13524)
    assert not is_top(start, W_13524)
    certificate = construct_up(start, W_13524)
    assert [(step.op, step.cell) for step in certificate.steps] == [
        ("droop_prime", (1, 1)),
        ("droop_prime", (2, 2)),
    ]
    assert str(certificate.steps[0].diagram) == AFTER_FIRST
    assert str(certificate.output) == AFTER_SECOND
    assert certificate.gained_row == 3
    assert str(weight(start)) == "x1^2*x2^2*x3"
    assert str(weight(certificate.output)) == "x1^2*x2^2*x3^2"
    assert certificate.droops == 2


@pytest.mark.parametrize(
    "text, ops, gained_row",
    [
        (M1, [("mark", (1, 3))], 1),
        (M2, [("droop_prime", (1, 2))], 2),
    ],
)
def test_construct_up_2413(text, ops, gained_row):
    """
    2413의 top이 아닌 MVPD construct_up 테스트
    """
    certificate = construct_up(mvpd(text), W_2413)
    assert [(step.op, step.cell) for step in certificate.steps] == ops
    assert str(certificate.output) == M3
    assert certificate.gained_row == gained_row


def test_construct_up_droops_past_blocked_bump():
    """
    Cross로 바꿀 수 없는 Bump가 남은 MVPD에서 droop' 진행 테스트
    """
    start = mvpd(BUMP_BLOCKED, n=5)
    certificate = construct_up(start, W_15243)
    assert (certificate.steps[0].op, certificate.steps[0].cell) == ("droop_prime", (2, 2))
    assert certificate.gained_row == 3
    assert weight(certificate.output) == weight(start).times_x(3)


def test_construct_up_preconditions():
    """
    construct_up 선행조건 실패 테스트
    """
    with pytest.raises(MalformedDiagram):
        construct_up(mvpd(M3), W_2413)
    w = Permutation.parse("231")
    with pytest.raises(NotInverseFireworks):
        construct_up(mvpd_set(w).members[0], w)


@pytest.mark.parametrize("w", inverse_fireworks_5)
def test_construct_up_over_inverse_fireworks(w):
    """
    inverse fireworks 순열 전체에서 construct_up 인증서 테스트
    """
    support = grothendieck(w).support()
    for m in mvpd_set(w):
        if is_top(m, w):
            continue
        certificate = construct_up(m, w)
        assert is_member(certificate.output, w)
        assert weight(certificate.output) == weight(m).times_x(certificate.gained_row)
        assert weight(certificate.output) in support
        assert certificate.droops <= column_sum(m)


def test_conj12_of_2413():
    """
    2413 support 나눗셈 증인 테스트
    """
    report = check_conj12(W_2413)
    assert report.passed
    assert [(str(witness.monomial), str(witness.target)) for witness in report.witnesses] == [
        ("x1*x2^2", "x1^2*x2^2"),
        ("x1^2*x2", "x1^2*x2^2"),
    ]


@pytest.mark.parametrize("mode", [Mode.DIRECT, Mode.CONSTRUCTIVE])
def test_conj13_of_2413(mode):
    """
    2413 support 확장 증인 테스트
    """
    report = check_conj13(W_2413, mode)
    assert report.passed
    assert [(str(witness.monomial), witness.row) for witness in report.witnesses] == [
        ("x1*x2^2", 1),
        ("x1^2*x2", 2),
    ]


def test_conjectures_vacuous_for_identity():
    """
    항등순열에서 공허하게 통과하는지 테스트
    """
    w = Permutation.identity(4)
    assert check_conj12(w).passed and not check_conj12(w).witnesses
    assert check_conj13(w).passed and not check_conj13(w, Mode.CONSTRUCTIVE).witnesses


@pytest.mark.parametrize("w", Permutation.all(4))
def test_conjectures_over_s4(w):
    """
    S_4 전체에서 두 추측 검사 테스트
    """
    assert check_conj13(w).passed
    assert check_conj12(w).passed


def test_construct_up_api(client):
    """
    construct-up API 테스트
    """
    response = client.post(
        reverse("construct-up"),
        {"w": "2,4,1,3", "diagram": {"kind": "MVPD", "n": 4, "rows": M1.split("\n")}},
        format="json",
    )
    assert response.status_code == status.HTTP_200_OK
    assert response.data["gained_row"] == 1
    assert response.data["steps"] == [{"op": "mark", "cell": [1, 3]}]
    assert response.data["output"]["rows"] == M3.split("\n")
    assert response.data["w"] == [2, 4, 1, 3]


def test_construct_up_api_trace(client):
    """
    construct-up API --trace 렌더링 테스트
    """
    response = client.post(
        reverse("construct-up"),
        {"w": "13524", "diagram": {"kind": "MVPD", "n": 5, "rows": SATURATED.split("\n")}, "trace": True},
        format="json",
    )
    assert response.status_code == status.HTTP_200_OK
    assert response.data["renders"] == [AFTER_FIRST, AFTER_SECOND]


def test_construct_up_api_rejects_top(client):
    """
    top MVPD 입력 실패 테스트
    """
    response = client.post(
        reverse("construct-up"),
        {"w": "2413", "diagram": {"kind": "MVPD", "n": 4, "rows": M3.split("\n")}},
        format="json",
    )
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "message" in response.data
