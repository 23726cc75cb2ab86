"""Gaussian naive Bayes over career-progress features.

Each of the three pattern classes gets a per-feature Gaussian (mean and
standard deviation of the time shares) plus an empirical prior. Posteriors
are computed in log space and normalized; the product form underflows for
tight sigmas, the log form never does. Zero variances (common: many ranks
have exactly zero share across a class) are clamped from below.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import MissingClass
from .features import N_RANKS, FeatureVector, RankDurationStats
from .model import PatternLabel

CLASS_ORDER = (PatternLabel.ASCENDING, PatternLabel.STEADY, PatternLabel.RECESSIONARY)

DEFAULT_SIGMA_FLOOR = 1e-3
DEFAULT_GROWTH_DELTA = 0.25


@dataclass(frozen=True)
class ClassParams:
    label: PatternLabel
    prior: float
    eta: tuple[float, ...]  # per-feature mean
    sigma: tuple[float, ...]  # per-feature std, >= sigma_floor


@dataclass(frozen=True)
class PatternModel:
    classes: tuple[ClassParams, ...]
    sigma_floor: float

    def __post_init__(self):
        if abs(sum(c.prior for c in self.classes) - 1.0) > 1e-9:
            raise ValueError("class priors must sum to 1")
        for c in self.classes:
            if any(s < self.sigma_floor for s in c.sigma):
                raise ValueError(f"sigma below floor for class {c.label.value}")


def train(
    labeled: list[tuple[FeatureVector, PatternLabel]],
    sigma_floor: float = DEFAULT_SIGMA_FLOOR,
) -> PatternModel:
    """Fit per-class mean/std (population) and MLE priors."""
    total = len(labeled)
    classes = []
    for label in CLASS_ORDER:
        rows = np.array([fv.r for fv, y in labeled if y is label])
        if rows.size == 0:
            raise MissingClass(label.value)
        eta = rows.mean(axis=0)
        sigma = np.maximum(rows.std(axis=0), sigma_floor)  # population std (ddof=0)
        classes.append(
            ClassParams(
                label=label,
                prior=len(rows) / total,
                eta=tuple(float(v) for v in eta),
                sigma=tuple(float(v) for v in sigma),
            )
        )
    return PatternModel(classes=tuple(classes), sigma_floor=sigma_floor)


def log_scores(model: PatternModel, x: FeatureVector) -> np.ndarray:
    """Unnormalized log posterior per class, in CLASS_ORDER."""
    r = np.asarray(x.r)
    scores = []
    for c in model.classes:
        eta = np.asarray(c.eta)
        sigma = np.asarray(c.sigma)
        log_density = -0.5 * ((r - eta) / sigma) ** 2 - np.log(
            sigma * math.sqrt(2.0 * math.pi)
        )
        scores.append(math.log(c.prior) + float(log_density.sum()))
    return np.array(scores)


def posterior(model: PatternModel, x: FeatureVector) -> tuple[float, float, float]:
    """P(class | x) for the three classes, summing to 1."""
    scores = log_scores(model, x)
    shifted = np.exp(scores - scores.max())
    probs = shifted / shifted.sum()
    return tuple(float(p) for p in probs)


def classify(model: PatternModel, x: FeatureVector) -> PatternLabel:
    """Arg-max class; exact ties fall to the earlier class in CLASS_ORDER."""
    probs = posterior(model, x)
    best = max(range(len(probs)), key=lambda i: (probs[i], -i))
    return model.classes[best].label


def heuristic_prelabel(
    x: FeatureVector,
    corpus_stats: RankDurationStats,
    delta: float = DEFAULT_GROWTH_DELTA,
) -> PatternLabel:
    """Bootstrap label: compare the resume's rank growth rate to the corpus mean.

    Only used to seed training data and suggest labels; expert labels always
    override it.
    """
    baseline = corpus_stats.mean_growth_rate
    if baseline <= 0:
        return PatternLabel.STEADY
    ratio = x.growth_rate() / baseline
    if ratio > 1.0 + delta:
        return PatternLabel.ASCENDING
    if ratio < 1.0 - delta:
        return PatternLabel.RECESSIONARY
    return PatternLabel.STEADY


def serialize_model(model: PatternModel) -> str:
    doc = {
        "classes": [
            {
                "name": c.label.value,
                "prior": c.prior,
                "eta": list(c.eta),
                "sigma": list(c.sigma),
            }
            for c in model.classes
        ],
        "sigma_floor": model.sigma_floor,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_model(doc: str) -> PatternModel:
    raw = json.loads(doc)
    classes = []
    for item in raw["classes"]:
        eta = tuple(float(v) for v in item["eta"])
        sigma = tuple(float(v) for v in item["sigma"])
        if len(eta) != N_RANKS or len(sigma) != N_RANKS:
            raise ValueError("model vectors must have 9 entries")
        classes.append(
            ClassParams(
                label=PatternLabel(item["name"]),
                prior=float(item["prior"]),
                eta=eta,
                sigma=sigma,
            )
        )
    return PatternModel(classes=tuple(classes), sigma_floor=float(raw["sigma_floor"]))
