from core.management.base import TeachingCommand
from explore.experiments import rtd_vcd_experiment
from explore.models import ExperimentRun
from explore.serializers import ExperimentStatsSerializer


def render_stats(stats):
    lines = [
        f"n={stats.n} N={stats.size} trials={stats.trials} seed={stats.seed}",
        f"RTD < VCD  {stats.frac_rtd_lt_vcd:.4f}",
        f"RTD = VCD  {stats.frac_rtd_eq_vcd:.4f}",
        f"RTD > VCD  {stats.frac_rtd_gt_vcd:.4f}",
        "",
        "value  rtd  vcd",
    ]
    values = sorted(set(stats.rtd_histogram) | set(stats.vcd_histogram))
    for value in values:
        lines.append(
            f"{value:<5}  {stats.rtd_histogram.get(value, 0):<3}  {stats.vcd_histogram.get(value, 0)}"
        )
    return "\n".join(lines)


class Command(TeachingCommand):
    help = 'Compare RTD and VCD over random classes of N concepts drawn from {0,1}^n'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Instance space size')
        parser.add_argument('--size', type=int, required=True, help='Concepts per class (N)')
        parser.add_argument('--trials', type=int, required=True, help='Number of random classes')
        parser.add_argument('--seed', type=int, required=True, help='Experiment seed')
        parser.add_argument('--record', action='store_true', help='Store the result as an experiment run')
        self.add_threads_argument(parser)
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        stats = rtd_vcd_experiment(
            options['n'], options['size'], options['trials'], options['seed'], threads=options['threads']
        )
        data = ExperimentStatsSerializer(stats).data
        if options['record']:
            ExperimentRun.record(
                ExperimentRun.Kind.RANDOM,
                {'n': stats.n, 'size': stats.size, 'trials': stats.trials},
                data,
                seed=stats.seed,
            )
        self.emit(options, data, lambda: render_stats(stats))
