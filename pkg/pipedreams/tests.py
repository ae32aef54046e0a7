import pytest
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APIClient

from diagrams.diagram import Diagram
from permutations.permutation import Permutation
from polynomials.polynomial import weight_factor_product

from .bounds import BoundExceeded, beyond_bound, check_bound
from .cache import cache_path
from .engine import (
    backtrack_pd_set,
    clear_indexes,
    double_grothendieck,
    enumerate_all,
    grothendieck,
    grothendieck_top,
    pd_set,
    raj,
    top_pd_set,
    wty_pd,
)
from .staircase import choice_cells, scan, sweep

W_2413 = Permutation.parse("2413")


@pytest.fixture
def client():
    return APIClient()


@pytest.fixture
def fresh_indexes():
    clear_indexes()
    yield
    clear_indexes()


def test_enumerate_small():
    """
    n=2, n=3 전체 열거 테스트
    """
    index = enumerate_all(2)
    assert index[Permutation.identity(2)] == (Diagram.all_bump(2),)
    (only,) = index[Permutation.parse("21")]
    assert str(only) == "+J\nJ."
    assert enumerate_all(3).total() == 8
    assert enumerate_all(4).total() == 1 << len(choice_cells(4))


def test_pd_set_of_2413():
    """
    2413 PD 집합 테스트
    """
    assert {str(p) for p in pd_set(W_2413)} == {
        "+bbJ\n++J.\nbJ..\nJ...",
        "+b+J\n+bJ.\nbJ..\nJ...",
        "+b+J\n++J.\nbJ..\nJ...",
    }
    assert raj(W_2413) == 4
    (top,) = top_pd_set(W_2413)
    assert wty_pd(top) == {(1, 1), (1, 3), (2, 1), (2, 2)}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_longest_permutation_has_one_pipe_dream(n):
    """
    최장 순열의 유일한 PD 테스트
    """
    (only,) = pd_set(Permutation.longest(n))
    assert len(wty_pd(only)) == len(choice_cells(n)) == Permutation.longest(n).length()


@pytest.mark.parametrize(
    "w, text",
    [
        ("2413", "x1*x2^2 + x1^2*x2 - x1^2*x2^2"),
        ("1234", "1"),
        ("321", "x1^2*x2"),
        ("21", "x1"),
    ],
)
def test_grothendieck(w, text):
    """
    Grothendieck 다항식 테스트
    """
    assert grothendieck(Permutation.parse(w)).to_text() == text


def test_double_grothendieck():
    """
    두 변수 Grothendieck 다항식 테스트
    """
    assert double_grothendieck(Permutation.parse("21")).to_text() == "x1 + y1 - x1*y1"
    assert double_grothendieck(Permutation.identity(3)).to_text() == "1"
    expected = (
        weight_factor_product({(1, 1), (2, 1), (2, 2)}, 4)
        + weight_factor_product({(1, 1), (2, 1), (1, 3)}, 4)
        - weight_factor_product({(1, 1), (1, 3), (2, 1), (2, 2)}, 4)
    )
    assert double_grothendieck(W_2413) == expected


def test_grothendieck_top():
    """
    열거 기반 최고차 성분 테스트
    """
    assert grothendieck_top(W_2413).to_text() == "x1^2*x2^2"
    assert grothendieck(W_2413).top_component() == -grothendieck_top(W_2413)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_backtracking_matches_sweep(n):
    """
    역추적 생성기와 전체 sweep 결과 일치 테스트
    """
    for w in Permutation.all(n):
        assert backtrack_pd_set(w) == pd_set(w)


@pytest.mark.parametrize("w", Permutation.all(4))
def test_polynomial_properties(w):
    """
    부호, 최저차 성분, y=0 특수화 테스트
    """
    polynomial = grothendieck(w)
    for monomial, coefficient in polynomial.terms():
        assert coefficient * (-1) ** ((monomial.degree - w.length()) % 2) > 0
    lowest = polynomial.min_degree_component()
    assert polynomial.min_degree() == w.length()
    assert all(coefficient > 0 for _monomial, coefficient in lowest.terms())
    assert polynomial.total_degree() == raj(w)
    assert double_grothendieck(w).specialize_y_zero() == polynomial


@pytest.mark.parametrize("n", [3, 4, 5])
def test_raj_sweeps(n):
    """
    raj = maj 이면 fireworks, raj(w) = raj(w^-1) 테스트
    """
    for w in Permutation.all(n):
        assert (raj(w) == w.maj()) == w.is_fireworks()
        assert raj(w) == raj(w.inverse())
        if w.is_inverse_fireworks():
            assert raj(w) == w.r_stat()


def test_parallel_sweep_matches_scan():
    """
    병렬 sweep 결과 일치 테스트
    """
    total = 1 << len(choice_cells(5))
    assert sweep(5, workers=2) == scan(5, 0, total)


def test_index_cache(settings, tmp_path, fresh_indexes):
    """
    JSON lines 인덱스 캐시 저장/로드 테스트
    """
    settings.PIPEDREAM_CACHE_DIR = str(tmp_path)
    built = enumerate_all(3)
    path = cache_path(3)
    assert path.exists()
    assert len(path.read_text().splitlines()) == 8

    clear_indexes()
    assert enumerate_all(3) == built

    path.write_text("not json\n")
    clear_indexes()
    assert enumerate_all(3) == built


def test_bound(settings, fresh_indexes):
    """
    열거 상한과 --force 해제 테스트
    """
    settings.PIPEDREAM_MAX_N = 3
    with pytest.raises(BoundExceeded):
        enumerate_all(4)
    with pytest.raises(ValueError):
        check_bound(0)
    with beyond_bound():
        assert enumerate_all(4).total() == 64
    with pytest.raises(BoundExceeded):
        pd_set(W_2413)


def test_poly_api(client):
    """
    다항식 API 테스트
    """
    response = client.get(reverse("pipedream-poly"), {"w": "2,4,1,3"})
    assert response.status_code == status.HTTP_200_OK
    assert response.data["polynomial"]["text"] == "x1*x2^2 + x1^2*x2 - x1^2*x2^2"
    assert response.data["double"] is False

    response = client.get(reverse("pipedream-poly"), {"w": "21", "double": "true"})
    assert response.data["polynomial"]["text"] == "x1 + y1 - x1*y1"


def test_poly_api_rejects(client, settings):
    """
    다항식 API 입력 실패 테스트
    """
    response = client.get(reverse("pipedream-poly"), {"w": "2,4,4,3"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    settings.PIPEDREAM_MAX_N = 3
    response = client.get(reverse("pipedream-poly"), {"w": "2413"})
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert "message" in response.data


def test_top_api(client):
    """
    최고차 성분 API 테스트
    """
    response = client.get(reverse("pipedream-top"), {"w": "2413"})
    assert response.data["method"] == "bvpd"
    assert response.data["polynomial"]["text"] == "x1^2*x2^2"
    assert "notice" not in response.data

    response = client.get(reverse("pipedream-top"), {"w": "231"})
    assert response.status_code == status.HTTP_200_OK
    assert response.data["method"] == "enumeration"
    assert response.data["polynomial"]["text"] == "x1*x2"
    assert response.data["notice"]
