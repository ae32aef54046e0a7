from rest_framework import serializers

from diagrams.serializers import DiagramSerializer
from permutations.serializers import PermutationField

from .checks import CheckName


class FailureSerializer(serializers.Serializer):
    w = PermutationField()
    what = serializers.CharField()
    message = serializers.CharField()
    witnesses = DiagramSerializer(many=True)


class SweepReportSerializer(serializers.Serializer):
    """
    {"what", "n", "inverse_fireworks_only", "checked", "passed", "failures"}
    """

    what = serializers.CharField()
    n = serializers.IntegerField()
    inverse_fireworks_only = serializers.BooleanField()
    checked = serializers.IntegerField()
    passed = serializers.BooleanField()
    failures = FailureSerializer(many=True)


class CheckQuerySerializer(serializers.Serializer):
    what = serializers.ChoiceField(choices=CheckName.choices)
    n = serializers.IntegerField(min_value=1)
    inverse_fireworks_only = serializers.BooleanField(default=False)
