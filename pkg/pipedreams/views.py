from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from bvpds.engine import top_grothendieck
from polynomials.serializers import PolynomialSerializer

from .engine import double_grothendieck, grothendieck
from .serializers import PolyQuerySerializer, TopQuerySerializer


class PolyView(APIView):
    """
    Grothendieck 다항식 API
    GET /api/v1/pipedreams/poly/?w=2,4,1,3
    GET /api/v1/pipedreams/poly/?w=2,4,1,3&double=true : x, y 두 변수 버전
    """

    def get(self, request):
        serializer = PolyQuerySerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        w, double = serializer.validated_data["w"], serializer.validated_data["double"]
        try:
            polynomial = double_grothendieck(w) if double else grothendieck(w)
        except ValueError as exc:
            return Response({"message": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        return Response(
            {
                "w": list(w.one_line),
                "double": double,
                "polynomial": PolynomialSerializer(polynomial).data,
            },
            status=status.HTTP_200_OK,
        )


class TopView(APIView):
    """
    최고차 성분 API (inverse fireworks가 아니면 열거 결과와 안내 메시지)
    GET /api/v1/pipedreams/top/?w=1,6,5,2,3,4
    """

    def get(self, request):
        serializer = TopQuerySerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        w = serializer.validated_data["w"]
        try:
            top = top_grothendieck(w)
        except ValueError as exc:
            return Response({"message": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        body = {
            "w": list(w.one_line),
            "method": top.method,
            "polynomial": PolynomialSerializer(top.polynomial).data,
        }
        if top.notice:
            body["notice"] = top.notice
        return Response(body, status=status.HTTP_200_OK)
