"""
Monte Carlo estimation of presentation properties.

Each trial draws from its own stream keyed by (seed, trial index), and the
reduction runs over trials in index order, so serial and parallel runs give
identical estimates. Samples failing C(4) are classified by the syntactic
cancellativity criterion and counted in `flagged`; the estimate covers all
trials.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sop.cancel.criterion import (
    is_left_cancellative,
    is_right_cancellative,
    left_witness,
    right_witness,
)
from sop.core.config import config
from sop.core.exceptions import ConfigurationError
from sop.generic.rng import trial_rng
from sop.generic.sampling import SampleConfig, sample_presentation
from sop.pieces.conditions import check_c, check_strong_c
from sop.presentation.models import Presentation

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["property", "a", "k", "n", "mode", "trials", "hits", "estimate", "ci95", "flagged"]


# --- Properties ---


def _strong_c4(p: Presentation) -> bool:
    return check_strong_c(p, 4)


def _c4(p: Presentation) -> bool:
    return check_c(p, 4)


def _left(p: Presentation) -> bool:
    return is_left_cancellative(p)[0]


def _right(p: Presentation) -> bool:
    return is_right_cancellative(p)[0]


def _cancellative(p: Presentation) -> bool:
    return _left(p) and _right(p)


def _left_syntactic(p: Presentation) -> bool:
    return left_witness(p) is None


def _right_syntactic(p: Presentation) -> bool:
    return right_witness(p) is None


def _cancellative_syntactic(p: Presentation) -> bool:
    return _left_syntactic(p) and _right_syntactic(p)


class PropertyCheck(NamedTuple):
    predicate: Callable[[Presentation], bool]
    # fallback for samples failing C(4); None when C(4) is not required
    syntactic: Optional[Callable[[Presentation], bool]]
    # limit is ((a - 1) / a) ** (exponent * k)
    limit_exponent: int


PROPERTIES: dict[str, PropertyCheck] = {
    "strong-c4": PropertyCheck(_strong_c4, None, 0),
    "c4": PropertyCheck(_c4, None, 0),
    "left-cancellative": PropertyCheck(_left, _left_syntactic, 1),
    "right-cancellative": PropertyCheck(_right, _right_syntactic, 1),
    "cancellative": PropertyCheck(_cancellative, _cancellative_syntactic, 2),
}


def get_property(name: str) -> PropertyCheck:
    try:
        return PROPERTIES[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown property {name!r}; choose from {', '.join(PROPERTIES)}"
        ) from None


def limit_proportion(a: int, k: int, name: str) -> float:
    """Limiting proportion as n grows: 1 for small overlap conditions, ((a-1)/a)^k or ^2k otherwise."""
    check = get_property(name)
    return ((a - 1) / a) ** (check.limit_exponent * k)


# --- Estimates ---


class ProportionEstimate(BaseModel):
    """
    Monte Carlo estimate with a normal-approximation confidence half-width.

    `estimate` is hits/trials over every sample. Samples failing C(4) enter
    with their syntactic verdict and are counted in `flagged`;
    `conditional_estimate` is the proportion over the C(4) samples alone.
    """

    model_config = ConfigDict(frozen=True)

    property: str
    trials: int = Field(ge=1)
    evaluated: int = Field(ge=0)
    hits: int = Field(ge=0)
    flagged: int = Field(default=0, ge=0)
    flagged_hits: int = Field(default=0, ge=0)
    estimate: float = Field(ge=0.0, le=1.0)
    ci95: float = Field(ge=0.0)
    conditional_estimate: Optional[float] = Field(default=None, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def check_counts(self) -> "ProportionEstimate":
        if self.evaluated + self.flagged != self.trials:
            raise ValueError("evaluated and flagged samples must add up to trials")
        if self.hits > self.trials or self.flagged_hits > min(self.flagged, self.hits):
            raise ValueError("more hits than samples")
        if self.hits - self.flagged_hits > self.evaluated:
            raise ValueError("more C(4) hits than C(4) samples")
        if not math.isclose(self.estimate, self.hits / self.trials):
            raise ValueError("estimate must equal hits / trials")
        return self

    @classmethod
    def from_counts(
        cls,
        name: str,
        trials: int,
        hits: int,
        flagged: int = 0,
        flagged_hits: int = 0,
        z: Optional[float] = None,
    ) -> "ProportionEstimate":
        if z is None:
            z = config.experiment.confidence_z
        evaluated = trials - flagged
        estimate = hits / trials
        return cls(
            property=name,
            trials=trials,
            evaluated=evaluated,
            hits=hits,
            flagged=flagged,
            flagged_hits=flagged_hits,
            estimate=estimate,
            ci95=z * math.sqrt(estimate * (1 - estimate) / trials),
            conditional_estimate=(hits - flagged_hits) / evaluated if evaluated else None,
        )

    def csv_row(self, cfg: SampleConfig) -> dict[str, object]:
        return {
            "property": self.property,
            "a": cfg.alphabet_size,
            "k": cfg.relation_count,
            "n": cfg.length,
            "mode": cfg.length_mode.value,
            "trials": self.trials,
            "hits": self.hits,
            "estimate": f"{self.estimate:.6f}",
            "ci95": f"{self.ci95:.6f}",
            "flagged": self.flagged,
        }


# (trial index, hit, flagged)
TrialOutcome = tuple[int, bool, bool]


def evaluate_sample(p: Presentation, name: str) -> tuple[bool, bool]:
    """(verdict, flagged) for one presentation."""
    check = get_property(name)
    if check.syntactic is not None and not check_c(p, 4):
        return check.syntactic(p), True
    return check.predicate(p), False


def _run_trials(cfg: SampleConfig, name: str, start: int, stop: int) -> list[TrialOutcome]:
    outcomes: list[TrialOutcome] = []
    for index in range(start, stop):
        p = sample_presentation(cfg, trial_rng(cfg.seed, index))
        hit, flagged = evaluate_sample(p, name)
        outcomes.append((index, hit, flagged))
    return outcomes


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size = math.ceil(trials / workers)
    return [(start, min(start + size, trials)) for start in range(0, trials, size)]


def estimate_proportion(
    cfg: SampleConfig,
    name: str,
    workers: Optional[int] = None,
) -> ProportionEstimate:
    """
    Estimate the proportion of sampled presentations with property `name`.

    Raises:
        ConfigurationError: unknown property
    """
    get_property(name)
    if workers is None:
        workers = config.experiment.workers

    logger.info(
        f"Estimating {name}: a={cfg.alphabet_size} k={cfg.relation_count} n={cfg.length} "
        f"mode={cfg.length_mode.value} trials={cfg.trials} seed={cfg.seed}"
    )
    if workers <= 1:
        outcomes = _run_trials(cfg, name, 0, cfg.trials)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_trials, cfg, name, start, stop)
                for start, stop in _chunks(cfg.trials, workers)
            ]
            outcomes = [outcome for future in futures for outcome in future.result()]
    outcomes.sort(key=lambda outcome: outcome[0])

    hits = sum(1 for _, hit, _ in outcomes if hit)
    flagged = sum(1 for _, _, f in outcomes if f)
    flagged_hits = sum(1 for _, hit, f in outcomes if hit and f)
    if flagged:
        logger.warning(f"{flagged} of {cfg.trials} samples fail C(4) and keep their syntactic verdict")

    estimate = ProportionEstimate.from_counts(name, cfg.trials, hits, flagged, flagged_hits)
    logger.info(f"Estimate {name} = {estimate.estimate:.4f} ± {estimate.ci95:.4f}")
    return estimate
