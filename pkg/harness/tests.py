import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APIClient

from diagrams.diagram import Diagram
from diagrams.exceptions import InvariantBreach
from diagrams.tiles import DiagramKind
from permutations.permutation import Permutation

from .checks import CHECKS, Check, CheckName, applies, run_check
from .sweeps import run_sweep, selected

W_2413 = Permutation.parse("2413")
TOP_PD_2413 = "+b+J\n++J.\nbJ..\nJ..."
M1 = "-JrJ\n--J.\n....\n...."
M3 = "-JRJ\n--J.\n....\n...."
SATURATED = "r-JRJ\nJR-J.\n-J...\n.....\n....."
AFTER_SECOND = ".RJRJ\n-JRJ.\n--J..\n.....\n....."


@pytest.fixture
def client():
    return APIClient()


@pytest.fixture
def single_worker(settings):
    settings.PIPEDREAM_SWEEP_WORKERS = 1


def pipedreams(*args):
    out, err = StringIO(), StringIO()
    call_command("pipedreams", *args, stdout=out, stderr=err)
    return out.getvalue().strip(), err.getvalue().strip()


def write(tmp_path, text, name="diagram.txt"):
    path = tmp_path / name
    path.write_text(text + "\n")
    return str(path)


@pytest.mark.parametrize("what", CheckName.values)
def test_every_check_passes_on_2413(what):
    """
    2413에서 모든 검사 통과 테스트
    """
    assert applies(what, W_2413)
    assert run_check(what, W_2413) == []


def test_checks_skip_other_permutations():
    """
    inverse fireworks 전용 검사 대상 선택 테스트
    """
    w = Permutation.parse("231")
    assert not applies(CheckName.THM43, w)
    assert applies(CheckName.LEMMA46, w)
    assert len(selected(CheckName.PROP25, 4)) == 24
    assert all(w.is_inverse_fireworks() for w in selected(CheckName.THM44, 5))
    assert len(selected(CheckName.COR26, 4, inverse_fireworks_only=True)) == len(selected(CheckName.THM44, 4))


def test_run_check_collects_failures(monkeypatch):
    """
    실패와 엔진 예외를 실패 목록으로 수집하는지 테스트
    """

    def refuse(w, collector):
        collector.expect(False, "never holds", Diagram.all_bump(w.n))

    def breach(w, collector):
        raise InvariantBreach("engine breach", Diagram.blank(DiagramKind.MVPD, w.n))

    monkeypatch.setitem(CHECKS, CheckName.PROP25, Check(CheckName.PROP25, refuse))
    (failure,) = run_check("prop25", W_2413)
    assert (failure.what, failure.message) == ("prop25", "never holds")
    assert failure.witnesses == (Diagram.all_bump(4),)

    monkeypatch.setitem(CHECKS, CheckName.COR26, Check(CheckName.COR26, breach))
    (failure,) = run_check("cor26", W_2413)
    assert failure.message == "engine breach"


def test_sweep_report(single_worker):
    """
    sweep 보고서 테스트
    """
    report = run_sweep("prop25", 4)
    assert report.passed
    assert report.checked == 24
    assert report.what == "prop25"


def test_parallel_sweep_matches_serial():
    """
    병렬 sweep 결과 일치 테스트
    """
    assert run_sweep("cor26", 4, workers=2) == run_sweep("cor26", 4, workers=1)


@pytest.mark.parametrize("what", ["eq1-vs-cor37", "prop36", "lemma46", "prop25", "cor26", "conj12", "conj13"])
def test_sweeps_over_s4(what, single_worker):
    """
    S_4 전체 sweep 테스트
    """
    report = run_sweep(what, 4)
    assert report.passed, report.failures


@pytest.mark.parametrize("what", ["eq1-vs-cor37", "prop36", "lemma46", "prop25", "cor26"])
def test_sweeps_over_s5(what, single_worker):
    """
    S_5 전체 sweep 테스트
    """
    report = run_sweep(what, 5)
    assert report.checked == 120
    assert report.passed, report.failures


@pytest.mark.parametrize("what", ["thm43", "thm44", "prop49", "construct", "lemma46"])
def test_inverse_fireworks_sweeps_over_s5(what, single_worker):
    """
    S_5 inverse fireworks sweep 테스트
    """
    report = run_sweep(what, 5, inverse_fireworks_only=True)
    assert report.passed, report.failures


@pytest.mark.slow
@pytest.mark.parametrize("what", ["thm43", "thm44", "prop49", "construct", "lemma46"])
def test_inverse_fireworks_sweeps_over_s6(what):
    """
    S_6 inverse fireworks sweep 테스트
    """
    report = run_sweep(what, 6, inverse_fireworks_only=True)
    assert report.passed, report.failures


def test_poly_command():
    """
    poly 명령 테스트
    """
    out, _err = pipedreams("poly", "--w", "2,4,1,3")
    assert out == "x1*x2^2 + x1^2*x2 - x1^2*x2^2"
    out, _err = pipedreams("poly", "--w", "21", "--double")
    assert out == "x1 + y1 - x1*y1"
    out, _err = pipedreams("poly", "--w", "21", "--json")
    assert json.loads(out)["polynomial"]["text"] == "x1"


def test_top_command():
    """
    top 명령과 안내 메시지 테스트
    """
    out, err = pipedreams("top", "--w", "2413")
    assert (out, err) == ("x1^2*x2^2", "")
    out, err = pipedreams("top", "--w", "231")
    assert out == "x1*x2"
    assert "231" in err
    out, _err = pipedreams("top", "--w", "231", "--json")
    assert json.loads(out)["method"] == "enumeration"


def test_enumerate_command():
    """
    enumerate 명령 테스트
    """
    out, _err = pipedreams("enumerate", "--kind", "bvpd", "--w", "2413")
    assert out == "JrJ\n-J.\n...\n..."
    out, _err = pipedreams("enumerate", "--kind", "pd", "--w", "2413", "--json")
    body = json.loads(out)
    assert body["count"] == 3
    assert body["kind"] == "PD"
    out, _err = pipedreams("enumerate", "--kind", "mvpd", "--w", "2413", "--text")
    assert len(out.split("\n\n")) == 3


def test_render_command(tmp_path):
    """
    render 명령 테스트
    """
    out, _err = pipedreams("render", "--in", write(tmp_path, "bJ\nJ."))
    assert out == "bJ\nJ."
    out, _err = pipedreams("render", "--in", write(tmp_path, M3), "--trim")
    assert out == "-JRJ\n--J."


def test_map_command(tmp_path):
    """
    map 명령 테스트
    """
    out, _err = pipedreams("map", "--which", "phi", "--w", "2413", "--in", write(tmp_path, TOP_PD_2413))
    assert out == M3
    out, _err = pipedreams("map", "--which", "mb", "--w", "2413", "--in", write(tmp_path, M3), "--json")
    assert json.loads(out) == {"kind": "BVPD", "n": 4, "rows": ["JrJ", "-J.", "...", "..."]}


def test_construct_up_command(tmp_path):
    """
    construct-up 명령의 인증서 JSON과 --trace 렌더링 테스트
    """
    out, _err = pipedreams("construct-up", "--w", "2413", "--in", write(tmp_path, M1))
    certificate = json.loads(out)
    assert certificate["steps"] == [{"op": "mark", "cell": [1, 3]}]
    assert certificate["gained_row"] == 1
    assert certificate["output"]["rows"] == M3.split("\n")

    out, _err = pipedreams("construct-up", "--w", "13524", "--in", write(tmp_path, SATURATED), "--trace")
    assert "droop_prime (1,1)" in out
    assert out.endswith("droop_prime (2,2)\n" + AFTER_SECOND)


def test_check_command(single_worker):
    """
    check 명령 테스트
    """
    out, _err = pipedreams("check", "--what", "thm43", "--n", "5", "--inverse-fireworks-only")
    report = json.loads(out)
    assert report["passed"] is True
    assert report["failures"] == []
    assert report["checked"] == len(selected(CheckName.THM43, 5))


def test_check_command_failure_exit_code(monkeypatch, single_worker):
    """
    검사 실패 시 종료 코드 1 테스트
    """

    def refuse(w, collector):
        collector.expect(w.n > 3, "small")

    monkeypatch.setitem(CHECKS, CheckName.PROP25, Check(CheckName.PROP25, refuse))
    with pytest.raises(CommandError) as exc:
        pipedreams("check", "--what", "prop25", "--n", "3")
    assert exc.value.returncode == 1


@pytest.mark.parametrize(
    "args",
    [
        ("poly", "--w", "2,2"),
        ("enumerate", "--kind", "bvpd", "--w", "231"),
        ("map", "--which", "bm", "--w", "2413", "--in", "missing-file.txt"),
    ],
)
def test_usage_errors_exit_code(args):
    """
    잘못된 입력 시 종료 코드 2 테스트
    """
    with pytest.raises(CommandError) as exc:
        pipedreams(*args)
    assert exc.value.returncode == 2


def test_force_flag(settings):
    """
    --force 열거 상한 해제 테스트
    """
    settings.PIPEDREAM_MAX_N = 3
    with pytest.raises(CommandError) as exc:
        pipedreams("poly", "--w", "2413")
    assert exc.value.returncode == 2
    out, _err = pipedreams("poly", "--w", "2413", "--force")
    assert out == "x1*x2^2 + x1^2*x2 - x1^2*x2^2"


def test_checks_api(client, single_worker):
    """
    검사 API 테스트
    """
    response = client.get(reverse("harness-checks"), {"what": "prop25", "n": 4})
    assert response.status_code == status.HTTP_200_OK
    assert response.data["passed"] is True
    assert response.data["checked"] == 24

    response = client.get(reverse("harness-checks"), {"what": "thm45", "n": 4})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "what" in response.data
