from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from diagrams.exceptions import InvariantBreach
from diagrams.views import breach_response

from .construct import construct_up
from .serializers import CertificateSerializer, ConstructUpSerializer, TracedCertificateSerializer


class ConstructUpView(APIView):
    """
    weighty 타일을 하나 늘린 MVPD 생성 API
    POST /api/v1/supports/construct-up/
    """

    def post(self, request):
        serializer = ConstructUpSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        data = serializer.validated_data
        try:
            certificate = construct_up(data["diagram"], data["w"])
        except InvariantBreach as exc:
            return breach_response(exc)
        except ValueError as exc:
            return Response({"message": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        output = TracedCertificateSerializer if data["trace"] else CertificateSerializer
        return Response(output(certificate).data, status=status.HTTP_200_OK)
