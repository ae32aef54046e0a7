import pytest
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APIClient

from permutations.permutation import Permutation
from pipedreams.engine import pd_set

from .diagram import Diagram, parse_text, render_text, validate
from .exceptions import MalformedDiagram
from .maps import MapName, apply_map, enumerate_kind
from .serializers import DiagramSerializer, load_diagram
from .tiles import DiagramKind, Region, Tile, allowed_tiles, region
from .tracing import column_to_row_code, max_rule_holds, paths_are_monotone, three_pipe_rule_holds, trace

EXAMPLE_PD = "+b+bJ\n+b+J.\n++J..\nbJ...\nJ...."
TOP_PD_2413 = "+b+J\n++J.\nbJ..\nJ..."
TOP_MVPD_2413 = "-JRJ\n--J.\n....\n...."


@pytest.fixture
def client():
    return APIClient()


@pytest.mark.parametrize(
    "diagram, text",
    [
        (Diagram.all_bump(2), "bJ\nJ."),
        (Diagram(DiagramKind.PD, 2, ("+J", "J.")), "+J\nJ."),
        (Diagram.blank(DiagramKind.BVPD, 2), ".\n."),
    ],
)
def test_render_and_parse(diagram, text):
    """
    텍스트 렌더링과 파싱 테스트
    """
    assert render_text(diagram) == text
    assert parse_text(diagram.kind, diagram.n, text) == diagram


def test_render_trim():
    """
    빈 행/열을 잘라내는 렌더링 테스트
    """
    mvpd = parse_text(DiagramKind.MVPD, 4, TOP_MVPD_2413)
    assert render_text(mvpd, trim=True) == "-JRJ\n--J."
    assert render_text(Diagram.blank(DiagramKind.MVPD, 3), trim=True) == ""


@pytest.mark.parametrize(
    "kind, n, text",
    [
        (DiagramKind.PD, 2, "xJ\nJ."),
        (DiagramKind.PD, 2, "bJ"),
        (DiagramKind.PD, 2, "+.\nJ."),
        (DiagramKind.BVPD, 3, "bJ\nJ.\n.."),
        (DiagramKind.MVPD, 2, "-.\n.."),
    ],
)
def test_parse_rejects(kind, n, text):
    """
    잘못된 문자, 크기, 영역, 연결 실패 테스트
    """
    with pytest.raises(MalformedDiagram):
        parse_text(kind, n, text)


def test_regions():
    """
    종류별 staircase 영역 테스트
    """
    assert region(DiagramKind.PD, 4, 1, 3) == Region.FULL
    assert region(DiagramKind.PD, 4, 1, 4) == Region.ANTI_DIAGONAL
    assert region(DiagramKind.PD, 4, 2, 4) == Region.OUTSIDE
    assert region(DiagramKind.BVPD, 4, 1, 3) == Region.ANTI_DIAGONAL
    assert allowed_tiles(DiagramKind.PD, 4, 1, 4) == {Tile.ELBOW_WN}
    assert Tile.MARKED_SE not in allowed_tiles(DiagramKind.BVPD, 4, 1, 1)


def test_validate_reports_violations():
    """
    validate 위반 보고 테스트
    """
    assert validate(Diagram.all_bump(5))

    unmarkable = Diagram(DiagramKind.MVPD, 2, ("RJ", "J."))
    report = validate(unmarkable)
    assert not report
    assert any("Marked tile" in violation for violation in report.violations)

    with_bump = Diagram(DiagramKind.BVPD, 3, ("bJ", "J.", ".."))
    assert not validate(with_bump)


def test_trace_of_example_pipe_dream():
    """
    실제 교차와 가짜 교차를 포함한 PD 추적 테스트
    """
    result = trace(parse_text(DiagramKind.PD, 5, EXAMPLE_PD))
    assert result.top_reading == (4, 1, 5, 2, 3)
    assert result.code.entries == (4, 1, 5, 2, 3)
    assert result.crossing_at(3, 2).real and result.crossing_at(3, 2).pair == (3, 5)
    assert not result.crossing_at(2, 3).real and result.crossing_at(2, 3).pair == (3, 5)
    assert sum(1 for crossing in result.crossings if crossing.real) == 5
    assert result.have_crossed(3, 5) and not result.have_crossed(1, 2)
    assert Permutation(result.top_reading).inverse() == Permutation.parse("24513")


def test_trace_small_cases():
    """
    항등순열과 21 PD 추적 테스트
    """
    identity = trace(Diagram.all_bump(4))
    assert identity.top_reading == (1, 2, 3, 4)
    assert identity.crossings == ()

    result = trace(parse_text(DiagramKind.PD, 2, "+J\nJ."))
    assert result.top_reading == (2, 1)
    assert [crossing.real for crossing in result.crossings] == [True]
    assert column_to_row_code(Diagram.blank(DiagramKind.MVPD, 3)).entries == (0, 0, 0)


def test_trace_rejects_pipe_leaving_right_edge():
    """
    오른쪽 경계로 나가는 파이프 실패 테스트
    """
    with pytest.raises(MalformedDiagram):
        trace(Diagram(DiagramKind.MVPD, 2, ("--", "..")))


@pytest.mark.parametrize("w", Permutation.all(4))
def test_trace_properties_over_s4(w):
    """
    S_4 PD 전체에서 최대 규칙, 세 파이프 규칙, 단조 경로 테스트
    """
    for diagram in pd_set(w):
        result = trace(diagram)
        assert max_rule_holds(result)
        assert three_pipe_rule_holds(result)
        assert paths_are_monotone(result)
        assert parse_text(DiagramKind.PD, w.n, render_text(diagram)) == diagram


def test_load_diagram_formats():
    """
    JSON / 텍스트 다이어그램 입력 자동 인식 테스트
    """
    from_text = load_diagram(TOP_PD_2413)
    assert from_text.kind == DiagramKind.PD
    assert load_diagram(TOP_MVPD_2413).kind == DiagramKind.MVPD
    assert load_diagram("JrJ\n-J.\n...\n...").kind == DiagramKind.BVPD
    payload = b'{"kind": "PD", "n": 4, "rows": ["+b+J", "++J.", "bJ..", "J..."]}'
    assert load_diagram(payload) == from_text
    with pytest.raises(MalformedDiagram):
        load_diagram(payload, kind=DiagramKind.MVPD)
    with pytest.raises(MalformedDiagram):
        load_diagram(b'{"kind": "PD", "n": 4, "rows": ["+b+J"]}')


def test_maps_by_name():
    """
    이름으로 호출하는 사상과 열거 테스트
    """
    w = Permutation.parse("2413")
    pd = parse_text(DiagramKind.PD, 4, TOP_PD_2413)
    assert str(apply_map(MapName.PHI, pd, w)) == TOP_MVPD_2413
    assert str(apply_map("psi-inv", pd, w)) == "JrJ\n-J.\n...\n..."
    with pytest.raises(MalformedDiagram):
        apply_map(MapName.PHI_INVERSE, pd, w)
    assert len(enumerate_kind("PD", w)) == 3
    assert len(enumerate_kind(DiagramKind.BVPD, w)) == 1


def test_diagram_list_api(client):
    """
    다이어그램 목록 API 테스트
    """
    response = client.get(reverse("diagram-list"), {"kind": "pd", "w": "2,4,1,3"})
    assert response.status_code == status.HTTP_200_OK
    assert response.data["count"] == 3
    assert response.data["kind"] == "PD"
    assert {"\n".join(d["rows"]) for d in response.data["diagrams"]} == {
        "+bbJ\n++J.\nbJ..\nJ...",
        "+b+J\n+bJ.\nbJ..\nJ...",
        TOP_PD_2413,
    }


def test_diagram_list_api_rejects(client):
    """
    잘못된 목록 요청 실패 테스트
    """
    response = client.get(reverse("diagram-list"), {"kind": "bvpd", "w": "231"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    response = client.get(reverse("diagram-list"), {"kind": "svg", "w": "231"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    response = client.get(reverse("diagram-list"), {"kind": "pd", "w": "2,2"})
    assert "w" in response.data


def test_render_api(client):
    """
    렌더링 API 테스트
    """
    response = client.post(
        reverse("diagram-render"),
        {"kind": "MVPD", "n": 4, "rows": TOP_MVPD_2413.split("\n"), "trim": True},
        format="json",
    )
    assert response.status_code == status.HTTP_200_OK
    assert response.data["text"] == "-JRJ\n--J."

    response = client.post(
        reverse("diagram-render"),
        {"kind": "BVPD", "n": 3, "rows": ["bJ", "J.", ".."]},
        format="json",
    )
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "rows" in response.data


def test_map_api(client):
    """
    사상 API 테스트
    """
    pd = parse_text(DiagramKind.PD, 4, TOP_PD_2413)
    response = client.post(
        reverse("diagram-map"),
        {"which": "phi", "w": [2, 4, 1, 3], "diagram": DiagramSerializer(pd).data},
        format="json",
    )
    assert response.status_code == status.HTTP_200_OK
    assert "\n".join(response.data["output"]["rows"]) == TOP_MVPD_2413
    assert response.data["output"]["kind"] == "MVPD"

    response = client.post(
        reverse("diagram-map"),
        {"which": "bm", "w": [2, 4, 1, 3], "diagram": DiagramSerializer(pd).data},
        format="json",
    )
    assert response.status_code == status.HTTP_400_BAD_REQUEST
