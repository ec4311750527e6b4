from core.formats import read_concept_class
from core.management.base import TeachingCommand
from core.reports import analyze_class, render_analysis
from core.serializers import AnalysisReportSerializer


class Command(TeachingCommand):
    help = 'Analyze a concept-class file: VC dimension, teaching dimensions, RTD plan and pattern profile'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Concept-class file (header n=<int>, one bitvector per line)')
        parser.add_argument('--profile-max', type=int, default=None,
                            help='Largest projection size in the pattern profile (default: VCD + 1)')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        concept_class = read_concept_class(options['file'])
        report = analyze_class(concept_class, options['profile_max'])
        self.emit(options, AnalysisReportSerializer(report).data, lambda: render_analysis(report))
