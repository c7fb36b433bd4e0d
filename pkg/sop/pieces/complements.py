"""Complement classes: connected components of the relation graph."""

import networkx as nx
from pydantic import BaseModel, ConfigDict

from sop.core.exceptions import PresentationError
from sop.presentation.models import Presentation, Word, shortlex_key
from sop.presentation.operations import relation_graph, relation_word_classes


class ComplementClass(BaseModel):
    """Relation words connected to each other by chains of relations."""

    model_config = ConfigDict(frozen=True)

    members: frozenset[Word]

    def proper_complements(self, r: Word) -> list[Word]:
        """Members other than `r`, in shortlex order."""
        return sorted((m for m in self.members if m != r), key=shortlex_key)

    def sorted_members(self) -> list[Word]:
        return sorted(self.members, key=shortlex_key)

    def __contains__(self, word: object) -> bool:
        return word in self.members

    def __len__(self) -> int:
        return len(self.members)


def complement_class(r: Word, p: Presentation) -> ComplementClass:
    """
    The complement class of relation word `r`.

    Raises:
        PresentationError: `r` is not a relation word of `p`
    """
    graph = relation_graph(p)
    if r not in graph:
        raise PresentationError(f"not a relation word: {p.format_word(r)}")
    return ComplementClass(members=frozenset(nx.node_connected_component(graph, r)))


def complement_classes(p: Presentation) -> list[ComplementClass]:
    """All complement classes, ordered by their shortlex-least member."""
    return [ComplementClass(members=frozenset(m)) for m in relation_word_classes(p)]
