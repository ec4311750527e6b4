from core.bounds import constructive_teaching_set
from core.formats import read_concept_class
from core.management.base import TeachingCommand
from core.reports import render_bounds
from core.serializers import ConstructiveResultSerializer


class Command(TeachingCommand):
    help = 'Build a teaching set by descending through minimum restrictions and print the trace'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Concept-class file')
        parser.add_argument('--alpha', type=float, default=None, help='Base alpha in (1, 2)')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        concept_class = read_concept_class(options['file'])
        result = constructive_teaching_set(concept_class, options['alpha'])

        def render():
            head = [
                f"concept       {concept_class.label(result.concept)}",
                f"teaching set  {result.teaching_set.instances} -> {result.teaching_set.labels}",
                "",
            ]
            return "\n".join(head) + render_bounds(result.trace)

        self.emit(options, ConstructiveResultSerializer(result).data, render)
