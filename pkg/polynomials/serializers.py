from rest_framework import serializers


class PolynomialSerializer(serializers.Serializer):
    """
    다항식 출력 (text + canonical term list)
    """

    text = serializers.SerializerMethodField()
    terms = serializers.SerializerMethodField()

    def get_text(self, polynomial):
        return polynomial.to_text()

    def get_terms(self, polynomial):
        return polynomial.to_json()
