from core.management.base import TeachingCommand
from explore.models import ExperimentRun
from explore.serializers import SweepReportSerializer
from explore.sweep import CLAIMS, sweep_cube


class Command(TeachingCommand):
    help = 'Exhaustively check the small-case claims over every nonempty subclass of {0,1}^n'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Cube dimension (at most 4)')
        parser.add_argument('--claims', nargs='+', choices=sorted(CLAIMS), default=None,
                            help='Claims to check (default depends on n)')
        parser.add_argument('--dedup', action='store_true',
                            help='Check one class per isomorphism type only')
        parser.add_argument('--record', action='store_true', help='Store the result as an experiment run')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        report = sweep_cube(
            options['n'], options['claims'], dedup=options['dedup'], progress=options['verbosity'] > 1
        )
        data = SweepReportSerializer(report).data
        if options['record']:
            ExperimentRun.record(
                ExperimentRun.Kind.SWEEP, {'n': report.n, 'claims': list(report.tallies), 'dedup': report.dedup}, data
            )

        def render():
            lines = [
                f"n={report.n} enumerated={report.enumerated} checked={report.checked} "
                f"dedup={'yes' if report.dedup else 'no'}",
                "",
                f"{'claim':<20} {'considered':>10} {'violations':>10} {'attained':>8}",
            ]
            for tally in report.tallies.values():
                attained = '-' if tally.attained is None else tally.attained
                lines.append(f"{tally.name:<20} {tally.considered:>10} {tally.violations:>10} {attained:>8}")
            return "\n".join(lines)

        self.emit(options, data, render)
        if not report.passed:
            failed = [name for name, tally in report.tallies.items() if not tally.passed]
            self.fail_checks(f"claims failed: {', '.join(failed)}")
