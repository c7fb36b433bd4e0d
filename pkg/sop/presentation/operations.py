"""
Structural operations on presentations.

Relation words, equivalence closure, reversal and one-step rewriting.
"""

import logging

import networkx as nx

from sop.presentation.models import Presentation, Relation, Word, shortlex_key

logger = logging.getLogger(__name__)


def relation_words(p: Presentation) -> frozenset[Word]:
    """All words occurring as a side of some relation (deduplicated)."""
    return frozenset(side for relation in p.relations for side in relation.sides)


def sorted_relation_words(p: Presentation) -> list[Word]:
    """Relation words in shortlex order."""
    return sorted(relation_words(p), key=shortlex_key)


def relation_graph(p: Presentation) -> nx.Graph:
    """Undirected graph on relation words with one edge per relation."""
    graph = nx.Graph()
    graph.add_nodes_from(sorted_relation_words(p))
    graph.add_edges_from(relation.sides for relation in p.relations)
    return graph


def relation_word_classes(p: Presentation) -> list[list[Word]]:
    """
    Connected components of the relation graph.

    Members are shortlex-sorted and classes are ordered by their least member.
    """
    classes = [
        sorted(component, key=shortlex_key)
        for component in nx.connected_components(relation_graph(p))
    ]
    classes.sort(key=lambda members: shortlex_key(members[0]))
    return classes


def equivalence_closure(p: Presentation) -> Presentation:
    """
    Reflexive, symmetric, transitive closure on the relation words.

    The result depends only on the relation words and their classes, so the
    operation is idempotent; relations are emitted class by class in
    shortlex order.
    """
    relations = [
        Relation(lhs=u, rhs=v)
        for members in relation_word_classes(p)
        for u in members
        for v in members
    ]
    return Presentation(alphabet=p.alphabet, relations=tuple(relations))


def is_equivalence_presentation(p: Presentation) -> bool:
    """True iff the relation set is an equivalence relation on its relation words."""
    return {r.sides for r in p.relations} == {
        r.sides for r in equivalence_closure(p).relations
    }


def reverse_word(word: Word) -> Word:
    return word[::-1]


def reverse_presentation(p: Presentation) -> Presentation:
    """Letter-reverse every relation word; the alphabet is unchanged."""
    return Presentation(
        alphabet=p.alphabet,
        relations=tuple(relation.reversed() for relation in p.relations),
    )


def occurrences(pattern: Word, word: Word) -> list[int]:
    """Start positions of `pattern` in `word` (every position for the empty pattern)."""
    size = len(pattern)
    return [
        i for i in range(len(word) - size + 1) if word[i:i + size] == pattern
    ]


def rewrite_neighbors(w: Word, p: Presentation) -> frozenset[Word]:
    """
    Words reachable from `w` by one application of a relation.

    Relations are applied in both directions at every position. Trivial
    relations are skipped, so `w` itself is never returned.
    """
    neighbors: set[Word] = set()
    for relation in p.relations:
        if relation.is_trivial:
            continue
        for source, target in (relation.sides, relation.sides[::-1]):
            size = len(source)
            for i in occurrences(source, w):
                neighbors.add(w[:i] + target + w[i + size:])
    return frozenset(neighbors)
