from core.bounds import bound_chain
from core.management.base import TeachingCommand
from core.reports import render_bounds
from core.serializers import BoundReportSerializer


class Command(TeachingCommand):
    help = 'Print the quadratic RTD bound for VC dimension d and the (x, y) parameter chain behind it'

    def add_arguments(self, parser):
        parser.add_argument('--d', type=int, required=True, help='VC dimension')
        parser.add_argument('--alpha', type=float, default=None, help='Base alpha in (1, 2)')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        report = bound_chain(options['d'], options['alpha'])
        self.emit(options, BoundReportSerializer(report).data, lambda: render_bounds(report))
