from rest_framework import serializers

from .permutation import InvalidPermutation, Permutation


class PermutationField(serializers.Field):
    """
    "2,4,1,3", "2413" 또는 [2, 4, 1, 3] 형식의 순열 입력
    """

    default_error_messages = {
        "invalid": "올바른 순열이 아닙니다: {detail}",
    }

    def to_internal_value(self, data):
        try:
            if isinstance(data, (list, tuple)):
                return Permutation.from_one_line(data)
            return Permutation.parse(data)
        except InvalidPermutation as exc:
            self.fail("invalid", detail=str(exc))

    def to_representation(self, value):
        return list(value.one_line)


class PermutationQuerySerializer(serializers.Serializer):
    w = PermutationField()
