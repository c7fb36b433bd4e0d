"""Bounded breadth-first exploration of congruence classes."""

import logging
from collections import deque
from typing import Optional

from sop.core.config import config
from sop.presentation.models import Presentation, Word
from sop.presentation.operations import rewrite_neighbors
from sop.wordproblem.models import OracleResult, OracleVerdict

logger = logging.getLogger(__name__)


def default_max_len(u: Word, v: Word, p: Presentation) -> int:
    """max(|u|, |v|) plus the configured multiple of the longest relation word."""
    return max(len(u), len(v)) + config.solver.oracle_length_factor * p.max_relation_length


def explore_class(
    u: Word,
    p: Presentation,
    max_len: int,
    max_nodes: int,
    target: Optional[Word] = None,
) -> tuple[set[Word], int, bool]:
    """
    Breadth-first search from `u` over one-step rewrites.

    Words longer than `max_len` are pruned and at most `max_nodes` words are
    expanded. Stops early when `target` is reached.

    Returns:
        (visited words, expansions made, whether the bounded class was exhausted)
    """
    visited: set[Word] = {u}
    queue: deque[Word] = deque([u])
    expanded = 0
    if target is not None and u == target:
        return visited, expanded, False

    while queue:
        if expanded >= max_nodes:
            return visited, expanded, False
        word = queue.popleft()
        expanded += 1
        for neighbor in rewrite_neighbors(word, p):
            if len(neighbor) > max_len or neighbor in visited:
                continue
            visited.add(neighbor)
            if target is not None and neighbor == target:
                return visited, expanded, False
            queue.append(neighbor)
    return visited, expanded, True


def bfs_oracle(
    u: Word,
    v: Word,
    p: Presentation,
    max_len: Optional[int] = None,
    max_nodes: Optional[int] = None,
) -> OracleResult:
    """
    Search for `v` in the bounded congruence class of `u`.

    Sound for EQUIVALENT; NOT_FOUND is only inconclusive evidence.
    """
    if max_len is None:
        max_len = default_max_len(u, v, p)
    if max_nodes is None:
        max_nodes = config.solver.oracle_max_nodes

    visited, expanded, exhausted = explore_class(u, p, max_len, max_nodes, target=v)
    verdict = OracleVerdict.EQUIVALENT if v in visited else OracleVerdict.NOT_FOUND
    logger.debug(f"Oracle {verdict.value} after {expanded} expansions ({len(visited)} words)")
    return OracleResult(verdict=verdict, expanded=expanded, exhausted=exhausted)
