from rest_framework import serializers

from diagrams.diagram import render_text
from diagrams.serializers import DiagramSerializer
from permutations.serializers import PermutationField


class StepSerializer(serializers.Serializer):
    op = serializers.CharField()
    cell = serializers.ListField(child=serializers.IntegerField())


class CertificateSerializer(serializers.Serializer):
    """
    {"w", "input", "steps": [{"op", "cell"}], "output", "gained_row"}
    """

    w = PermutationField()
    input = DiagramSerializer()
    steps = StepSerializer(many=True)
    output = DiagramSerializer()
    gained_row = serializers.IntegerField()


class TracedCertificateSerializer(CertificateSerializer):
    renders = serializers.SerializerMethodField()

    def get_renders(self, certificate):
        return [render_text(step.diagram) for step in certificate.steps]


class ConstructUpSerializer(serializers.Serializer):
    w = PermutationField()
    diagram = DiagramSerializer()
    trace = serializers.BooleanField(default=False)

    def validate(self, attrs):
        diagram = attrs["diagram"]["diagram"]
        if diagram.n != attrs["w"].n:
            raise serializers.ValidationError({"diagram": "다이어그램 크기와 순열 크기가 다릅니다."})
        attrs["diagram"] = diagram
        return attrs
