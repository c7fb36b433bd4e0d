"""Left, right and two-sided cancellativity of C(4) monoids."""

from sop.cancel.criterion import (
    CancellativityReport,
    cancellativity_report,
    is_left_cancellative,
    is_right_cancellative,
    left_witness,
    right_witness,
    strong_left_cancellative,
)

__all__ = [
    "CancellativityReport",
    "cancellativity_report",
    "is_left_cancellative",
    "is_right_cancellative",
    "left_witness",
    "right_witness",
    "strong_left_cancellative",
]
