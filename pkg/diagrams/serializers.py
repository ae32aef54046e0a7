import io

from django.utils.translation import gettext_lazy as _
from rest_framework import serializers
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser

from permutations.serializers import PermutationField

from .diagram import parse_text
from .exceptions import MalformedDiagram
from .maps import MapName
from .tiles import DiagramKind


class DiagramSerializer(serializers.Serializer):
    """
    {"kind": "PD"|"MVPD"|"BVPD", "n": int, "rows": [string...]}
    """

    kind = serializers.ChoiceField(choices=DiagramKind.choices)
    n = serializers.IntegerField(min_value=1)
    rows = serializers.ListField(
        source="text_rows",
        child=serializers.CharField(allow_blank=True, trim_whitespace=False),
    )

    def validate(self, attrs):
        try:
            attrs["diagram"] = parse_text(attrs["kind"], attrs["n"], "\n".join(attrs["text_rows"]))
        except MalformedDiagram as exc:
            raise serializers.ValidationError({"rows": str(exc)})
        return attrs


class RenderSerializer(DiagramSerializer):
    trim = serializers.BooleanField(default=False)


class MapSerializer(serializers.Serializer):
    which = serializers.ChoiceField(choices=MapName.choices)
    w = PermutationField()
    diagram = DiagramSerializer()

    def validate(self, attrs):
        diagram = attrs["diagram"]["diagram"]
        if diagram.n != attrs["w"].n:
            raise serializers.ValidationError({"diagram": "다이어그램 크기와 순열 크기가 다릅니다."})
        attrs["diagram"] = diagram
        return attrs


class EnumerateQuerySerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=["pd", "mvpd", "bvpd"])
    w = PermutationField()

    def validate_kind(self, value):
        return DiagramKind(value.upper())


def guess_kind(lines):
    n = len(lines)
    if lines and all(len(line) == n - 1 for line in lines):
        return DiagramKind.BVPD
    try:
        parse_text(DiagramKind.PD, n, "\n".join(lines))
    except MalformedDiagram:
        return DiagramKind.MVPD
    return DiagramKind.PD


def load_diagram(raw, kind=None, n=None):
    """
    Read a diagram from JSON or from the plain text rendering.

    Text carries neither kind nor size: ``kind`` and ``n`` fill them in,
    otherwise n is the number of lines and the kind is guessed.
    """
    if isinstance(raw, str):
        raw = raw.encode()
    if raw.lstrip().startswith(b"{"):
        try:
            data = JSONParser().parse(io.BytesIO(raw))
        except ParseError as exc:
            raise MalformedDiagram(str(exc))
        serializer = DiagramSerializer(data=data)
        if not serializer.is_valid():
            raise MalformedDiagram(str(serializer.errors))
        diagram = serializer.validated_data["diagram"]
        if kind is not None and diagram.kind != kind:
            raise MalformedDiagram(
                _("Expected a %(expected)s, got a %(kind)s.")
                % {"expected": DiagramKind(kind).value, "kind": diagram.kind.value}
            )
        return diagram
    lines = [line.rstrip() for line in raw.decode().replace("\r", "").strip("\n").split("\n")]
    n = n or len(lines)
    return parse_text(kind or guess_kind(lines), n, "\n".join(lines))
