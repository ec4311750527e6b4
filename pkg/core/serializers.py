# core/serializers.py
from rest_framework import serializers

from .concepts import ConceptClass
from .exceptions import TeachingError


class ConceptClassField(serializers.Field):
    """A concept class as ``{"n": n, "concepts": ["0101", ...]}``."""

    default_error_messages = {
        'invalid': 'Expected an object with "n" and a list of "concepts".',
    }

    def to_representation(self, value):
        return {'n': value.n, 'concepts': value.to_strings()}

    def to_internal_value(self, data):
        if not isinstance(data, dict) or 'n' not in data or not isinstance(data.get('concepts'), list):
            self.fail('invalid')
        try:
            concept_class = ConceptClass.from_strings(data['concepts'])
        except TeachingError as e:
            raise serializers.ValidationError(str(e))
        if concept_class.n != data['n']:
            raise serializers.ValidationError(f"concepts have length {concept_class.n}, not n={data['n']}")
        return concept_class


class AnalysisReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    size = serializers.IntegerField()
    vcd = serializers.IntegerField()
    shattered = serializers.CharField()
    concepts = serializers.ListField(child=serializers.CharField())
    tds = serializers.ListField(child=serializers.IntegerField())
    td_min = serializers.IntegerField()
    td_max = serializers.IntegerField()
    rtd = serializers.IntegerField()
    plan = serializers.ListField(child=serializers.DictField())
    profile = serializers.DictField(child=serializers.IntegerField())
    maximal = serializers.BooleanField()
    intersection_closed = serializers.BooleanField()


class ChainStepSerializer(serializers.Serializer):
    x = serializers.IntegerField()
    y = serializers.IntegerField()
    k = serializers.IntegerField(allow_null=True)
    added = serializers.IntegerField(allow_null=True)
    restriction_size = serializers.IntegerField(allow_null=True)


class BoundReportSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    alpha = serializers.FloatField()
    lambda_star = serializers.FloatField()
    x_start = serializers.IntegerField()
    f_bound = serializers.FloatField()
    rtd_bound = serializers.FloatField()
    k_values = serializers.ListField(child=serializers.IntegerField(allow_null=True), read_only=True)
    chain = ChainStepSerializer(many=True)
    ts_size = serializers.IntegerField(allow_null=True)


class TeachingSetSerializer(serializers.Serializer):
    instances = serializers.SerializerMethodField()
    labels = serializers.SerializerMethodField()

    def get_instances(self, obj):
        return list(obj.instances.coordinates())

    def get_labels(self, obj):
        return str(obj.labels)


class ConstructiveResultSerializer(serializers.Serializer):
    concept = serializers.SerializerMethodField()
    teaching_set = TeachingSetSerializer()
    trace = BoundReportSerializer()

    def get_concept(self, obj):
        return format(obj.concept, f"0{obj.teaching_set.instances.n}b")


class AnalyzeRequestSerializer(serializers.Serializer):
    text = serializers.CharField(trim_whitespace=False)
    profile_max = serializers.IntegerField(min_value=1, required=False)


class BoundsQuerySerializer(serializers.Serializer):
    d = serializers.IntegerField(min_value=1)
    alpha = serializers.FloatField(required=False)

    def validate_alpha(self, value):
        if not 1 < value < 2:
            raise serializers.ValidationError("alpha must lie in (1, 2).")
        return value
