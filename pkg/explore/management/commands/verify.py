from core.formats import read_corpus
from core.management.base import TeachingCommand
from explore.corpus import verify_corpus
from explore.serializers import CorpusReportSerializer


def _mark(value):
    return {True: 'ok', False: 'FAIL', None: '-'}[value]


class Command(TeachingCommand):
    help = 'Check the RTD bound, maximal and intersection-closed facts and Sauer counts on a corpus'

    def add_arguments(self, parser):
        parser.add_argument('directory', help='Directory of *.cc concept-class files')
        parser.add_argument('--pairs', action='store_true', help='Also check product laws on every pair')
        self.add_threads_argument(parser)
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        report = verify_corpus(
            read_corpus(options['directory']), pairs=options['pairs'], threads=options['threads']
        )

        def render():
            names = ('quadratic_bound', 'maximal', 'intersection_closed', 'sauer')
            width = max([len(c.name) for c in report.classes] + [5])
            lines = [f"{'class':<{width}}  vcd  rtd  " + "  ".join(names)]
            for check in report.classes:
                if check.skipped:
                    lines.append(f"{check.name:<{width}}  skipped")
                    continue
                marks = "  ".join(f"{_mark(check.checks.get(k)):<{len(k)}}" for k in names)
                lines.append(f"{check.name:<{width}}  {check.vcd:<3}  {check.rtd:<3}  {marks}")
            for pair in report.pairs:
                if pair.skipped:
                    continue
                lines.append(
                    f"{pair.left} x {pair.right}: vcd {pair.vcd} ({_mark(pair.vcd_additive)}), "
                    f"rtd {pair.rtd} ({_mark(pair.rtd_subadditive)})"
                )
            return "\n".join(lines)

        self.emit(options, CorpusReportSerializer(report).data, render)
        for notice in report.notices:
            self.stderr.write(notice)
        if not report.passed:
            self.fail_checks(f"checks failed for {', '.join(report.failures)}")
