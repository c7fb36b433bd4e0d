"""
Generic-case experiments.

Uniform sampling and exhaustive enumeration of ordered presentations,
Monte Carlo proportion estimates and isomorphism-type counting.
"""

from sop.generic.counting import IsomorphismCount, count_isomorphism_types
from sop.generic.enumeration import (
    check_enumeration_guard,
    enumerate_presentations,
    presentation_count,
)
from sop.generic.estimation import (
    CSV_COLUMNS,
    PROPERTIES,
    ProportionEstimate,
    estimate_proportion,
    evaluate_sample,
    limit_proportion,
)
from sop.generic.rng import make_rng, trial_rng
from sop.generic.sampling import LengthMode, SampleConfig, sample_presentation, sample_word
from sop.generic.shapes import Shape, sample_shape, weak_composition_count, weak_compositions

__all__ = [
    "IsomorphismCount",
    "count_isomorphism_types",
    "check_enumeration_guard",
    "enumerate_presentations",
    "presentation_count",
    "CSV_COLUMNS",
    "PROPERTIES",
    "ProportionEstimate",
    "estimate_proportion",
    "evaluate_sample",
    "limit_proportion",
    "make_rng",
    "trial_rng",
    "LengthMode",
    "SampleConfig",
    "sample_presentation",
    "sample_word",
    "Shape",
    "sample_shape",
    "weak_composition_count",
    "weak_compositions",
]
