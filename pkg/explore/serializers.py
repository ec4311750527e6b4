# explore/serializers.py
from rest_framework import serializers

from core.serializers import ConceptClassField

from .models import ExperimentRun


class ExperimentStatsSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    size = serializers.IntegerField()
    trials = serializers.IntegerField()
    seed = serializers.IntegerField()
    frac_rtd_lt_vcd = serializers.FloatField()
    frac_rtd_eq_vcd = serializers.FloatField()
    frac_rtd_gt_vcd = serializers.FloatField()
    rtd_histogram = serializers.DictField(child=serializers.IntegerField())
    vcd_histogram = serializers.DictField(child=serializers.IntegerField())


class SearchResultSerializer(serializers.Serializer):
    best_class = ConceptClassField()
    rtd = serializers.IntegerField()
    vcd = serializers.IntegerField()
    ratio = serializers.FloatField()
    evaluations = serializers.IntegerField()
    seed = serializers.IntegerField()
    restarts = serializers.IntegerField()
    within_cap = serializers.BooleanField()


class ClassCheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    n = serializers.IntegerField()
    size = serializers.IntegerField()
    vcd = serializers.IntegerField(allow_null=True)
    rtd = serializers.IntegerField(allow_null=True)
    checks = serializers.DictField(child=serializers.BooleanField(allow_null=True))
    skipped = serializers.CharField(allow_null=True)
    passed = serializers.BooleanField(read_only=True)


class PairCheckSerializer(serializers.Serializer):
    left = serializers.CharField()
    right = serializers.CharField()
    rtd = serializers.IntegerField(allow_null=True)
    vcd = serializers.IntegerField(allow_null=True)
    rtd_subadditive = serializers.BooleanField(allow_null=True)
    vcd_additive = serializers.BooleanField(allow_null=True)
    skipped = serializers.CharField(allow_null=True)
    passed = serializers.BooleanField(read_only=True)


class CorpusReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField(read_only=True)
    classes = ClassCheckSerializer(many=True)
    pairs = PairCheckSerializer(many=True)
    notices = serializers.ListField(child=serializers.CharField())


class ClaimTallySerializer(serializers.Serializer):
    name = serializers.CharField()
    description = serializers.CharField()
    considered = serializers.IntegerField()
    violations = serializers.IntegerField()
    attained = serializers.IntegerField(allow_null=True)
    counterexamples = serializers.ListField(child=ConceptClassField())
    passed = serializers.BooleanField(read_only=True)


class SweepReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    dedup = serializers.BooleanField()
    enumerated = serializers.IntegerField()
    checked = serializers.IntegerField()
    passed = serializers.BooleanField(read_only=True)
    tallies = serializers.SerializerMethodField()

    def get_tallies(self, obj):
        return [ClaimTallySerializer(tally).data for tally in obj.tallies.values()]


class ExperimentRunSerializer(serializers.ModelSerializer):
    class Meta:
        model = ExperimentRun
        fields = ['id', 'kind', 'seed', 'parameters', 'result', 'created_at']
