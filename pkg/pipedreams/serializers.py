from rest_framework import serializers

from permutations.serializers import PermutationField


class PolyQuerySerializer(serializers.Serializer):
    w = PermutationField()
    double = serializers.BooleanField(default=False)


class TopQuerySerializer(serializers.Serializer):
    w = PermutationField()
