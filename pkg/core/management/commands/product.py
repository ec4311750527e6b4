from core.concepts import product
from core.formats import read_concept_class, write_concept_class
from core.management.base import TeachingCommand


class Command(TeachingCommand):
    help = 'Write the Cartesian product of two concept classes to a new file'

    def add_arguments(self, parser):
        parser.add_argument('first', help='Concept-class file for the left factor')
        parser.add_argument('second', help='Concept-class file for the right factor')
        parser.add_argument('-o', '--output', required=True, help='Where to write the product class')

    def handle(self, *args, **options):
        first = read_concept_class(options['first'])
        second = read_concept_class(options['second'])
        combined = product(first, second)
        write_concept_class(
            options['output'], combined,
            comment=f"product of {options['first']} and {options['second']}",
        )
        self.stdout.write(f"Wrote {len(combined)} concepts over [{combined.n}] to {options['output']}")
