from core.formats import write_concept_class
from core.management.base import TeachingCommand
from explore.models import ExperimentRun
from explore.search import extremal_search
from explore.serializers import SearchResultSerializer


class Command(TeachingCommand):
    help = 'Hill-climb for a class of fixed size with the largest RTD under a VC dimension cap'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Instance space size')
        parser.add_argument('--size', type=int, required=True, help='Concepts per class')
        parser.add_argument('--vcd-cap', type=int, required=True, help='Largest admissible VC dimension')
        parser.add_argument('--budget', type=float, required=True, help='Wall-clock budget in seconds')
        parser.add_argument('--seed', type=int, required=True, help='Search seed')
        parser.add_argument('--max-evaluations', type=int, default=None,
                            help='Stop after scoring this many classes (reproducible runs)')
        parser.add_argument('-o', '--output', default=None, help='Also write the best class to this file')
        parser.add_argument('--record', action='store_true', help='Store the result as an experiment run')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        result = extremal_search(
            options['n'], options['size'], options['vcd_cap'], options['budget'], options['seed'],
            max_evaluations=options['max_evaluations'],
        )
        data = SearchResultSerializer(result).data
        if options['output']:
            write_concept_class(
                options['output'], result.best_class,
                comment=f"search seed {result.seed}: RTD {result.rtd}, VCD {result.vcd}",
            )
        if options['record']:
            ExperimentRun.record(
                ExperimentRun.Kind.SEARCH,
                {key: options[key] for key in ('n', 'size', 'vcd_cap', 'budget', 'max_evaluations')},
                data,
                seed=result.seed,
            )

        def render():
            lines = [
                f"rtd          {result.rtd}",
                f"vcd          {result.vcd}",
                f"ratio        {result.ratio:.4f}",
                f"within cap   {'yes' if result.within_cap else 'no'}",
                f"evaluations  {result.evaluations}",
                f"restarts     {result.restarts}",
                f"seed         {result.seed}",
                "",
            ]
            return "\n".join(lines + result.best_class.to_strings())

        self.emit(options, data, render)
