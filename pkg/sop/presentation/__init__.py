"""
Presentation data model.

Alphabets, words, relations and presentations, the `.sop` file format, and
structural operations (closure, reversal, one-step rewriting).
"""

from sop.presentation.models import (
    EMPTY_WORD,
    Alphabet,
    Presentation,
    Relation,
    Word,
    shortlex_key,
)
from sop.presentation.operations import (
    equivalence_closure,
    is_equivalence_presentation,
    occurrences,
    relation_graph,
    relation_word_classes,
    relation_words,
    reverse_presentation,
    reverse_word,
    rewrite_neighbors,
    sorted_relation_words,
)
from sop.presentation.parser import (
    dump_presentation,
    load_presentation,
    parse_presentation,
    serialize_presentation,
)

__all__ = [
    "EMPTY_WORD",
    "Alphabet",
    "Presentation",
    "Relation",
    "Word",
    "shortlex_key",
    "equivalence_closure",
    "is_equivalence_presentation",
    "occurrences",
    "relation_graph",
    "relation_word_classes",
    "relation_words",
    "reverse_presentation",
    "reverse_word",
    "rewrite_neighbors",
    "sorted_relation_words",
    "dump_presentation",
    "load_presentation",
    "parse_presentation",
    "serialize_presentation",
]
