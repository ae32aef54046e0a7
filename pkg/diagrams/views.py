import logging

from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from .diagram import render_text
from .exceptions import InvariantBreach
from .maps import apply_map, enumerate_kind
from .serializers import DiagramSerializer, EnumerateQuerySerializer, MapSerializer, RenderSerializer

logger = logging.getLogger(__name__)


def breach_response(exc):
    logger.error("invariant breach: %s", exc.message)
    return Response(
        {
            "message": exc.message,
            "witnesses": [DiagramSerializer(witness).data for witness in exc.witnesses],
        },
        status=status.HTTP_500_INTERNAL_SERVER_ERROR,
    )


class DiagramListView(APIView):
    """
    순열의 PD / MVPD / BVPD 목록 API
    GET /api/v1/diagrams/?kind=pd&w=2,4,1,3
    """

    def get(self, request):
        serializer = EnumerateQuerySerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        kind, w = serializer.validated_data["kind"], serializer.validated_data["w"]
        try:
            diagrams = enumerate_kind(kind, w)
        except ValueError as exc:
            return Response({"message": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        return Response(
            {
                "w": list(w.one_line),
                "kind": kind.value,
                "count": len(diagrams),
                "diagrams": DiagramSerializer(diagrams, many=True).data,
            },
            status=status.HTTP_200_OK,
        )


class RenderView(APIView):
    """
    다이어그램 텍스트 렌더링 API
    POST /api/v1/diagrams/render/
    """

    def post(self, request):
        serializer = RenderSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        diagram = serializer.validated_data["diagram"]
        return Response(
            {"text": render_text(diagram, trim=serializer.validated_data["trim"])},
            status=status.HTTP_200_OK,
        )


class MapView(APIView):
    """
    다이어그램 사이의 전단사 사상 API (phi, phi-inv, mb, bm, psi, psi-inv)
    POST /api/v1/diagrams/map/
    """

    def post(self, request):
        serializer = MapSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        which, w, diagram = (serializer.validated_data[key] for key in ("which", "w", "diagram"))
        try:
            image = apply_map(which, diagram, w)
        except InvariantBreach as exc:
            return breach_response(exc)
        except ValueError as exc:
            return Response({"message": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        return Response(
            {
                "which": which,
                "w": list(w.one_line),
                "input": DiagramSerializer(diagram).data,
                "output": DiagramSerializer(image).data,
            },
            status=status.HTTP_200_OK,
        )
