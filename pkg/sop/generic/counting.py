"""Exact isomorphism-type counts over strongly C(2) presentations."""

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from sop.canonical.labeling import canonicalize
from sop.generic.enumeration import enumerate_presentations
from sop.pieces.conditions import check_strong_c

logger = logging.getLogger(__name__)


class IsomorphismCount(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=1)
    k: int = Field(ge=1)
    n: int = Field(ge=0)
    total: int = Field(ge=0)
    strong_c2_count: int = Field(ge=0)
    iso_type_count: int = Field(ge=0)


def count_isomorphism_types(a: int, k: int, n: int, limit: Optional[int] = None) -> IsomorphismCount:
    """
    Count strongly C(2) ordered presentations and the monoids they present.

    Monoids are told apart by their canonical serializations.

    Raises:
        EnumerationGuardError: the enumeration exceeds the configured limit
    """
    total = 0
    strong = 0
    types: set[str] = set()
    for p in enumerate_presentations(a, k, n, limit):
        total += 1
        if not check_strong_c(p, 2):
            continue
        strong += 1
        types.add(canonicalize(p).serialization)

    logger.info(
        f"Counted a={a} k={k} n={n}: {total} presentations, "
        f"{strong} strongly C(2), {len(types)} isomorphism types"
    )
    return IsomorphismCount(
        a=a, k=k, n=n, total=total, strong_c2_count=strong, iso_type_count=len(types)
    )
