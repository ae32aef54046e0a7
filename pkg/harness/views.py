from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from .serializers import CheckQuerySerializer, SweepReportSerializer
from .sweeps import run_sweep


class ChecksView(APIView):
    """
    S_n 전체에 대한 성질 검사 API
    GET /api/v1/harness/checks/?what=thm43&n=5&inverse_fireworks_only=true
    """

    def get(self, request):
        serializer = CheckQuerySerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        data = serializer.validated_data
        try:
            report = run_sweep(data["what"], data["n"], data["inverse_fireworks_only"])
        except ValueError as exc:
            return Response({"message": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        return Response(SweepReportSerializer(report).data, status=status.HTTP_200_OK)
