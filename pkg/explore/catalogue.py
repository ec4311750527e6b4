# explore/catalogue.py
"""Small named classes with known measures, used as fixtures and search targets."""
from core.concepts import ConceptClass


def chain_class(n):
    """Threshold chain 0..0, 0..01, 0..011, ..., 1..1: VCD 1, RTD 1."""
    return ConceptClass(n, tuple((1 << j) - 1 for j in range(n + 1)))


def singletons_class(n):
    """The empty concept plus every singleton: a maximal class of VCD 1."""
    return ConceptClass.from_concepts(n, [0] + [1 << p for p in range(n)])


def warmuth_class():
    """Ten concepts on a 5-cycle with RTD 3 and VCD 2.

    The adjacent pairs {i, i+1} and the triples {i, i+1, i+3}; every concept needs
    three labels to be taught, while no three points are shattered.
    """
    rows = []
    for i in range(5):
        rows.append({i, (i + 1) % 5})
        rows.append({i, (i + 1) % 5, (i + 3) % 5})
    concepts = [sum(1 << (4 - p) for p in row) for row in rows]
    return ConceptClass.from_concepts(5, concepts)
