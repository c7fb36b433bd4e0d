"""Exhaustive enumeration of ordered presentations."""

import logging
from itertools import product
from typing import Iterator, Optional

from sop.core.config import config
from sop.core.exceptions import EnumerationGuardError
from sop.generic.sampling import presentation_from_words, split_word
from sop.generic.shapes import weak_composition_count, weak_compositions
from sop.presentation.models import Presentation

logger = logging.getLogger(__name__)


def presentation_count(a: int, k: int, n: int) -> int:
    """Ordered a-generator, k-relation presentations of sum relation length n."""
    return a**n * weak_composition_count(n, 2 * k)


def check_enumeration_guard(a: int, k: int, n: int, limit: Optional[int] = None) -> int:
    """
    Return the presentation count, or raise when it exceeds the limit.

    Raises:
        EnumerationGuardError: count above `limit` (default from configuration)
    """
    if limit is None:
        limit = config.experiment.enumeration_limit
    count = presentation_count(a, k, n)
    if count > limit:
        raise EnumerationGuardError(
            f"enumerating a={a}, k={k}, n={n} is too large", count=count, limit=limit
        )
    return count


def _iterate(a: int, k: int, n: int) -> Iterator[Presentation]:
    for blocks in weak_compositions(n, 2 * k):
        for word in product(range(a), repeat=n):
            yield presentation_from_words(a, split_word(word, blocks))


def enumerate_presentations(
    a: int, k: int, n: int, limit: Optional[int] = None
) -> Iterator[Presentation]:
    """
    Every ordered presentation of sum relation length n, each exactly once.

    The guard is checked before the first presentation is produced.
    """
    count = check_enumeration_guard(a, k, n, limit)
    logger.info(f"Enumerating {count} presentations (a={a}, k={k}, n={n})")
    return _iterate(a, k, n)
