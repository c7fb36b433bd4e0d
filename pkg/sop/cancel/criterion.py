"""
Cancellativity of C(4) monoids.

A C(4) monoid is left cancellative iff its equivalence closure has no
relation (a·r, a·s) with r != s. Right cancellativity is the same test on
the reversed presentation.
"""

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from sop.core.exceptions import InvariantViolationError
from sop.pieces.conditions import check_strong_c, require_c
from sop.presentation.models import Presentation, Word
from sop.presentation.operations import equivalence_closure, reverse_presentation

logger = logging.getLogger(__name__)

Witness = tuple[Word, Word]


class CancellativityReport(BaseModel):
    """Left, right and two-sided cancellativity with failing relations."""

    model_config = ConfigDict(frozen=True)

    left: bool
    right: bool
    left_witness: Optional[Witness] = None
    right_witness: Optional[Witness] = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def cancellative(self) -> bool:
        return self.left and self.right

    @model_validator(mode="after")
    def check_witnesses(self) -> "CancellativityReport":
        if self.left != (self.left_witness is None):
            raise ValueError("left witness must be present exactly when left is false")
        if self.right != (self.right_witness is None):
            raise ValueError("right witness must be present exactly when right is false")
        return self


def left_witness(p: Presentation) -> Optional[Witness]:
    """
    First closure relation (a·r, a·s) with r != s, in closure order.

    Purely syntactic; it decides left cancellativity only for C(4) input.
    """
    for relation in equivalence_closure(p).relations:
        lhs, rhs = relation.sides
        if lhs and rhs and lhs[0] == rhs[0] and lhs != rhs:
            return (lhs, rhs)
    return None


def right_witness(p: Presentation) -> Optional[Witness]:
    """Mirror of `left_witness` through reversal."""
    witness = left_witness(reverse_presentation(p))
    if witness is None:
        return None
    return (witness[0][::-1], witness[1][::-1])


def strong_left_cancellative(p: Presentation) -> bool:
    """
    Criterion for strongly C(4) presentations: no raw relation (a·r, a·s).

    Raises:
        PreconditionError: p is not C(4)
    """
    require_c(p, 4, "strong_left_cancellative")
    return not any(
        r.lhs and r.rhs and r.lhs[0] == r.rhs[0] for r in p.relations
    )


def is_left_cancellative(p: Presentation) -> tuple[bool, Optional[Witness]]:
    """
    Decide left cancellativity of a C(4) presentation.

    Returns:
        (flag, witnessing closure relation when the flag is false)

    Raises:
        PreconditionError: p is not C(4)
        InvariantViolationError: the strong-form criterion disagrees
    """
    require_c(p, 4, "is_left_cancellative")
    witness = left_witness(p)
    left = witness is None
    if check_strong_c(p, 4) and strong_left_cancellative(p) != left:
        raise InvariantViolationError("closure and strong-form cancellativity criteria disagree")
    return left, witness


def is_right_cancellative(p: Presentation) -> tuple[bool, Optional[Witness]]:
    """Right cancellativity via the left test on the reversed presentation."""
    require_c(p, 4, "is_right_cancellative")
    right, witness = is_left_cancellative(reverse_presentation(p))
    if witness is not None:
        witness = (witness[0][::-1], witness[1][::-1])
    return right, witness


def cancellativity_report(p: Presentation) -> CancellativityReport:
    left, left_found = is_left_cancellative(p)
    right, right_found = is_right_cancellative(p)
    logger.debug(f"Cancellativity: left={left} right={right}")
    return CancellativityReport(
        left=left, right=right, left_witness=left_found, right_witness=right_found
    )
