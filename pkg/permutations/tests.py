import pytest
from hypothesis import given, strategies as st

from .permutation import Code, CodeRole, InvalidPermutation, NotInverseFireworks, Permutation
from .serializers import PermutationQuerySerializer


def perm(text):
    return Permutation.parse(text)


permutations_up_to_6 = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(Permutation.from_one_line)


@pytest.mark.parametrize(
    "values",
    [[2, 4, 1, 3], [1], [3, 1, 6, 7, 5, 4, 2]],
)
def test_from_one_line(values):
    """
    one-line 표기 순열 생성 테스트
    """
    w = Permutation.from_one_line(values)
    assert list(w.one_line) == values
    assert w.n == len(values)


@pytest.mark.parametrize("values", [[], [1, 1], [0, 1], [1, 3], [1, "2"]])
def test_from_one_line_rejects(values):
    """
    잘못된 순열 입력 실패 테스트
    """
    with pytest.raises(InvalidPermutation):
        Permutation.from_one_line(values)


def test_parse_formats():
    """
    문자열 순열 파싱 테스트
    """
    assert perm("2,4,1,3") == perm("2413")
    assert perm("10,9,8,7,6,5,4,3,2,1").n == 10
    with pytest.raises(InvalidPermutation):
        perm("2,x")


@pytest.mark.parametrize(
    "w, inverse",
    [("24513", "41523"), ("1234", "1234"), ("2413", "3142")],
)
def test_inverse(w, inverse):
    """
    역순열 테스트
    """
    assert perm(w).inverse() == perm(inverse)


def test_statistics():
    """
    길이, major index 테스트
    """
    assert perm("2413").length() == 3
    assert Permutation.identity(5).length() == 0
    assert Permutation.longest(5).length() == 10
    assert perm("145632").maj() == 9
    assert perm("145632").descents() == (4, 5)
    assert Permutation.identity(4).maj() == 0
    assert perm("321").maj() == 3


def test_decreasing_runs():
    """
    감소 run 분해 테스트
    """
    assert perm("3167542").decreasing_runs() == [(3, 1), (6,), (7, 5, 4, 2)]
    assert perm("145632").decreasing_runs() == [(1,), (4,), (5,), (6, 3, 2)]
    assert perm("123").decreasing_runs() == [(1,), (2,), (3,)]


def test_fireworks():
    """
    fireworks / inverse fireworks 판정 테스트
    """
    assert perm("3167542").is_fireworks()
    assert not perm("6137542").is_fireworks()
    assert Permutation.identity(1).is_fireworks()
    assert perm("165234").is_inverse_fireworks()
    assert perm("2413").is_inverse_fireworks()
    assert Permutation.identity(4).is_inverse_fireworks()


def test_lr_maxima():
    assert perm("2143").lr_maxima() == {2, 4}
    assert perm("12547386").lr_maxima() == {1, 2, 5, 7, 8}
    assert Permutation.identity(3).lr_maxima() == {1, 2, 3}


def test_codes():
    """
    alpha', alpha, r(w) 테스트
    """
    w = perm("12547386").inverse()
    assert w.alpha_prime().entries == (0, 0, 0, 4, 0, 3, 0, 6)
    assert w.r_stat() == 15

    assert perm("2413").alpha_prime().entries == (0, 1, 0, 2)
    assert perm("2413").alpha().entries == (1, 0, 2)
    assert perm("2413").alpha().role == CodeRole.ALPHA
    assert perm("2413").r_stat() == 4

    assert perm("165234").alpha().entries == (0, 0, 0, 3, 2)
    assert Permutation.identity(4).alpha_prime().entries == (0, 0, 0, 0)
    assert Permutation.identity(4).alpha().entries == (0, 0, 0)
    assert Permutation.identity(4).r_stat() == 0


def test_alpha_rejects_non_inverse_fireworks():
    """
    inverse fireworks 아닌 순열의 alpha 실패 테스트
    """
    w = perm("6137542").inverse()
    with pytest.raises(NotInverseFireworks):
        w.alpha()


def test_code_rejects_repeated_rows():
    with pytest.raises(InvalidPermutation):
        Code((1, 1, 0), 3)


def test_code_realizability():
    assert Code((0, 1, 0, 2), 4).is_realizable()
    assert Code((0, 1, 0, 2), 4).realize() == perm("3142")
    # 4 sits at a non-zero position yet is a left-to-right maximum
    assert not Code((0, 4, 0, 0), 4).is_realizable()


@given(permutations_up_to_6)
def test_fireworks_maxima_are_run_firsts(w):
    """
    fireworks 순열의 left-to-right maxima 는 run 첫 값과 같다
    """
    if w.is_fireworks():
        assert w.lr_maxima() == {run[0] for run in w.decreasing_runs()}


@given(permutations_up_to_6)
def test_inverse_fireworks_r_equals_maj_of_inverse(w):
    if w.is_inverse_fireworks():
        assert w.r_stat() == w.inverse().maj()


@given(permutations_up_to_6)
def test_alpha_prime_round_trip(w):
    """
    alpha' 에서 w^{-1} 복원 테스트
    """
    code = w.alpha_prime()
    assert code.entries[0] == 0
    assert code.is_realizable()
    assert code.realize() == w.inverse()
    assert w.inverse().inverse() == w


def test_permutation_query_serializer():
    serializer = PermutationQuerySerializer(data={"w": "2,4,1,3"})
    assert serializer.is_valid()
    assert serializer.validated_data["w"] == perm("2413")

    serializer = PermutationQuerySerializer(data={"w": [2, 2, 1]})
    assert not serializer.is_valid()
    assert "w" in serializer.errors
