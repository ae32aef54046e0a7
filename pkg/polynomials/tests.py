import pytest
from hypothesis import given, strategies as st

from .polynomial import (
    Monomial,
    Polynomial,
    signed_accumulate,
    weight_factor_product,
    weight_monomial,
)
from .serializers import PolynomialSerializer

N = 4

small_polynomials = st.dictionaries(
    keys=st.tuples(*[st.integers(min_value=0, max_value=2)] * 4),
    values=st.integers(min_value=-3, max_value=3),
    max_size=4,
).map(lambda terms: signed_accumulate(2, [(Monomial.from_key(2, key), c) for key, c in terms.items()]))


@pytest.fixture()
def grothendieck_2413():
    return signed_accumulate(
        N,
        [
            (weight_monomial([1, 2, 2], N), 1),
            (weight_monomial([1, 1, 2], N), 1),
            (weight_monomial([1, 1, 2, 2], N), -1),
        ],
    )


def test_weight_monomial():
    """
    행 multiset 에서 단항식 생성 테스트
    """
    assert str(weight_monomial([1, 2, 2], N)) == "x1*x2^2"
    assert str(weight_monomial([], N)) == "1"
    assert str(weight_monomial([1, 1, 2, 2], N)) == "x1^2*x2^2"
    with pytest.raises(ValueError):
        weight_monomial([5], N)


def test_weight_factor_product():
    """
    (x_i + y_j - x_i y_j) 곱 전개 테스트
    """
    assert weight_factor_product({(1, 1)}, 1).to_text() == "x1 + y1 - x1*y1"
    assert weight_factor_product(set(), 3) == Polynomial.one(3)

    x1, x2 = Polynomial.x(N, 1), Polynomial.x(N, 2)
    y1, y2 = Polynomial.y(N, 1), Polynomial.y(N, 2)
    expected = (x1 + y1 - x1 * y1) * (x2 + y1 - x2 * y1) * (x2 + y2 - x2 * y2)
    assert weight_factor_product({(1, 1), (2, 1), (2, 2)}, N) == expected


def test_signed_accumulate_text(grothendieck_2413):
    """
    부호 있는 합 및 텍스트 출력 테스트
    """
    assert grothendieck_2413.to_text() == "x1*x2^2 + x1^2*x2 - x1^2*x2^2"
    assert grothendieck_2413 + Polynomial.zero(N) == grothendieck_2413
    assert (Polynomial.x(N, 1) * Polynomial.x(N, 2)).to_text() == "x1*x2"


def test_cancellation_drops_terms():
    m = weight_monomial([1], 2)
    assert not signed_accumulate(2, [(m, 1), (m, -1)])
    assert Polynomial.zero(2).to_text() == "0"


def test_degree_queries(grothendieck_2413):
    """
    support, 차수, top / min 성분 테스트
    """
    assert grothendieck_2413.support() == {
        weight_monomial([1, 2, 2], N),
        weight_monomial([1, 1, 2], N),
        weight_monomial([1, 1, 2, 2], N),
    }
    assert grothendieck_2413.total_degree() == 4
    assert grothendieck_2413.min_degree() == 3
    assert grothendieck_2413.top_component().to_text() == "-x1^2*x2^2"
    assert grothendieck_2413.min_degree_component().to_text() == "x1*x2^2 + x1^2*x2"
    assert grothendieck_2413.coefficient(weight_monomial([1, 1, 2, 2], N)) == -1


def test_zero_has_no_degree():
    with pytest.raises(ValueError):
        Polynomial.zero(2).total_degree()


def test_specialize_y_zero():
    assert weight_factor_product({(1, 1)}, 1).specialize_y_zero() == Polynomial.x(1, 1)


def test_coefficients_and_constants_render():
    p = signed_accumulate(2, [(Monomial.one(2), -2), (weight_monomial([2], 2), 3)])
    assert p.to_text() == "-2 + 3*x2"


def test_json_terms(grothendieck_2413):
    """
    JSON term 출력 순서 테스트
    """
    data = PolynomialSerializer(grothendieck_2413).data
    assert data["text"] == "x1*x2^2 + x1^2*x2 - x1^2*x2^2"
    assert data["terms"][0] == {"c": 1, "x": [1, 2, 0, 0], "y": [0, 0, 0, 0]}
    assert data["terms"][-1]["c"] == -1
    assert Polynomial.from_json(N, data["terms"]) == grothendieck_2413


@given(small_polynomials, small_polynomials, small_polynomials)
def test_ring_axioms(a, b, c):
    """
    결합법칙, 분배법칙 랜덤 테스트
    """
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == Polynomial.zero(2)
