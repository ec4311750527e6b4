# core/formats.py
"""Plain-text concept-class files.

    # optional comments
    n=4
    0000
    0110   # trailing comments are fine too

The header must be the first meaningful line; every other meaningful line is one
concept. Duplicate concepts are rejected with the line that repeats them.
"""
import logging
import re
from pathlib import Path

from .concepts import ConceptClass, concept_from_string
from .exceptions import CapacityError, ConceptParseError, InputError

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$")
CLASS_FILE_SUFFIX = ".cc"


def parse_concept_class(text, source=None):
    n = None
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            match = HEADER_RE.match(line)
            if not match:
                raise ConceptParseError(f"expected header 'n=<int>', found '{line}'", lineno, source)
            n = int(match.group(1))
            if n < 1:
                raise ConceptParseError("n must be positive", lineno, source)
            continue
        if len(line) != n or set(line) - {"0", "1"}:
            raise ConceptParseError(
                f"'{line}' is not a concept of length {n} over {{0,1}}", lineno, source
            )
        concept = concept_from_string(line)
        if concept in seen:
            raise ConceptParseError(
                f"duplicate concept {line} (first seen on line {seen[concept]})", lineno, source
            )
        seen[concept] = lineno
    if n is None:
        raise ConceptParseError("missing header 'n=<int>'", None, source)
    if not seen:
        raise ConceptParseError("the file lists no concepts", None, source)
    try:
        return ConceptClass.from_concepts(n, seen)
    except CapacityError:
        raise
    except InputError as exc:
        raise ConceptParseError(str(exc), None, source) from exc


def read_concept_class(path):
    path = Path(path)
    logger.debug(f"Reading concept class from {path}")
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_concept_class(text, source=str(path))


def dumps(concept_class, comment=None):
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"n={concept_class.n}")
    lines.extend(concept_class.to_strings())
    return "\n".join(lines) + "\n"


def write_concept_class(path, concept_class, comment=None):
    path = Path(path)
    path.write_text(dumps(concept_class, comment))
    logger.info(f"Wrote {len(concept_class)} concepts over [{concept_class.n}] to {path}")
    return path


def read_corpus(directory):
    """All ``*.cc`` files of a directory, sorted by file name, as (name, class) pairs."""
    directory = Path(directory)
    if not directory.is_dir():
        raise InputError(f"{directory} is not a directory")
    return [(path.name, read_concept_class(path)) for path in sorted(directory.glob(f"*{CLASS_FILE_SUFFIX}"))]
